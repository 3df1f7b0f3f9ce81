// End-to-end acceptance run: one line per criterion, nonzero exit on any
// failure.  Slow by design; runs under a generous ctest timeout.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "hamiltonica/checks.hpp"
#include "hamiltonica/constructions.hpp"
#include "hamiltonica/factors.hpp"
#include "hamiltonica/ham.hpp"
#include "hamiltonica/small_graphs.hpp"
#include "hamiltonica/toughness.hpp"

using namespace hamiltonica;

namespace {

int failures = 0;

void report(int criterion, bool ok, const char* what, double secs) {
    printf("%s  criterion %d: %s  (%.1fs)\n", ok ? "PASS" : "FAIL", criterion,
           what, secs);
    fflush(stdout);
    if (!ok) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    }
};

// Exhaustive oracle over vertex orders fixing position 0 (n <= 8).
bool perm_oracle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = (adj[perm[n - 1]] >> perm[0]) & 1;
        for (int i = 0; ok && i + 1 < n; ++i)
            ok = (adj[perm[i]] >> perm[i + 1]) & 1;
        if (ok) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

// Independent subset-DP oracle (n <= 20): reach[S][v] = a path from vertex 0
// over exactly S ending at v exists; hamiltonian iff some end adjoins 0.
bool dp_oracle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::vector<uint32_t> reach(1u << n, 0);
    reach[1] = 1;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        uint32_t ends = reach[s];
        if (!ends || !(s & 1)) continue;
        for (int v = 0; v < n; ++v) {
            if (!((ends >> v) & 1)) continue;
            uint32_t nxt = adj[v] & ~s;
            while (nxt) {
                int w = std::countr_zero(nxt);
                nxt &= nxt - 1;
                reach[s | (1u << w)] |= 1u << w;
            }
        }
    }
    uint32_t full = (1u << n) - 1;
    return (reach[full] & adj[0]) != 0;
}

bool found(const HamVerdict& v) { return v.outcome == HamVerdict::Outcome::Found; }

}  // namespace

int main() {
    // 1: constrained strip covers, tail form
    {
        Timer t;
        bool ok = true;
        for (int n : {3, 5, 7, 9})
            for (int k = 1; k <= n; k += 2)
                ok &= check_strip_cover_tail(n, k).verdict ==
                      CheckReport::Verdict::Pass;
        report(1, ok, "tail-constrained strip covers count zero, both engines",
               t.secs());
    }

    // 2: constrained strip covers, parity pattern form
    {
        Timer t;
        bool ok = true;
        for (int n : {3, 5, 7})
            ok &= check_strip_cover_parity(n).verdict ==
                  CheckReport::Verdict::Pass;
        report(2, ok, "parity-patterned strip covers count zero", t.secs());
    }

    // 3: the counterexample family at desk scale
    {
        Timer t;
        Graph tree = build_t_delta(3);
        auto main_run = check_tree_family_nonham(3, {2, 3, 4, 5, 6});
        bool ok = main_run.verdict == CheckReport::Verdict::Pass;
        auto extended = check_tree_family_nonham(3, {7, 8, 9}, 1'000'000'000, true);
        ok &= extended.verdict != CheckReport::Verdict::Fail;
        // negative control: tampering with the tree must trip the
        // hypothesis check
        auto edges = tree.edges();
        edges.pop_back();
        Graph tampered(tree.vertex_count(), edges);
        auto control =
            check_tree_family_nonham(3, {2}, 1'000'000'000, false, &tampered);
        ok &= control.verdict == CheckReport::Verdict::Fail;
        report(3, ok,
               "tree family x P_m not hamiltonian, m <= 9, tamper control",
               t.secs());
    }

    // 4: positive side with certificates
    {
        Timer t;
        bool ok =
            check_positive_side(double_star(), 10).verdict ==
                CheckReport::Verdict::Pass &&
            check_positive_side(path_graph(4), 6).verdict ==
                CheckReport::Verdict::Pass;
        report(4, ok, "certified spanning cycles in the positive cases",
               t.secs());
    }

    // 5: no-factor sweep
    {
        Timer t;
        auto r = check_no_factor_product(6, {path_graph(2), path_graph(3)});
        report(5, r.verdict == CheckReport::Verdict::Pass,
               "no-path-factor graphs give non-hamiltonian products", t.secs());
    }

    // 6: tree x cycle criterion
    {
        Timer t;
        auto r = check_tree_times_cycle(7, {3, 4, 5});
        report(6, r.verdict == CheckReport::Verdict::Pass,
               "tree x cycle hamiltonian iff max degree <= cycle length",
               t.secs());
    }

    // 7: oracle equivalences
    {
        Timer t;
        bool ok = true;
        // (a) factor search vs witness criterion, all connected <= 9
        for (int n = 1; n <= 9 && ok; ++n)
            for (const Graph& g : connected_graphs_upto_iso(n)) {
                auto f = find_path_factor(g);
                if (f.outcome == SearchOutcome::Unknown ||
                    (f.outcome == SearchOutcome::Present) ==
                        akiyama_witness(g).has_value()) {
                    ok = false;
                    break;
                }
            }
        report(7, ok, "(a) factor search matches the witness criterion, n <= 9",
               t.secs());

        // (b) + (c): solver vs oracles and pruned vs unpruned
        Timer t2;
        bool ok_b = true, ok_c = true;
        SolverOptions raw;
        raw.propagate = raw.connectivity = false;
        raw.articulation = raw.bipartite_precheck = false;
        for (int n = 3; n <= 8; ++n)
            for (const Graph& g : connected_graphs_upto_iso(n)) {
                auto v = find_hamiltonian_cycle(g);
                bool oracle = perm_oracle(g);
                if (found(v) != oracle || found(v) != dp_oracle(g)) ok_b = false;
                if (found(v) && !verify_cycle(g, v.cycle)) ok_b = false;
                if (found(find_hamiltonian_cycle(g, raw)) != found(v))
                    ok_c = false;
            }
        std::mt19937 rng(2026);
        for (int i = 0; i < 1000; ++i) {
            int n = 9 + (i & 1);
            Graph g = random_connected_graph(n, i % 3 ? 0.3 : 0.22, rng);
            auto v = find_hamiltonian_cycle(g);
            if (found(v) != dp_oracle(g)) ok_b = false;
            if (found(v) && !verify_cycle(g, v.cycle)) ok_b = false;
            if (found(find_hamiltonian_cycle(g, raw)) != found(v)) ok_c = false;
        }
        report(7, ok_b, "(b) solver matches permutation and subset-DP oracles",
               t2.secs());
        report(7, ok_c, "(c) pruned and unpruned solvers agree", 0.0);
    }

    // 8: structural facts of the tree family
    {
        Timer t;
        bool ok = true;
        for (int d = 3; d <= 8; ++d) {
            Graph tr = build_t_delta(d);
            ok &= is_tree(tr) && tr.vertex_count() == 6 * d - 3;
            std::map<int, int> census, want{{2, 1}, {3, 2 * d - 2}, {1, 4 * d - 4}};
            want[d] += 2;
            for (int v = 0; v < tr.vertex_count(); ++v) ++census[tr.degree(v)];
            ok &= census == want;
            ok &= validate_path_factor(
                tr, PathSystem::from_paths(tr.vertex_count(),
                                           t_delta_factor_paths(d)));
        }
        for (int d : {3, 4})
            for (int m = 4; m <= 9; ++m) {
                Graph p = cartesian_product(build_t_delta(d), path_graph(m));
                for (const auto& f : fixture_paths(d, m))
                    ok &= validate_path_system(
                        p, PathSystem::from_paths(p.vertex_count(),
                                                  {f.vertices}));
            }
        for (int d : {3, 4, 5})
            for (int m = 2; m <= 9; ++m)
                ok &= check_component_counts(d, m).verdict ==
                      CheckReport::Verdict::Pass;
        report(8, ok, "degree census, factor paths, fixtures, component counts",
               t.secs());
    }

    // 9: toughness necessary condition
    {
        Timer t;
        bool ok = true;
        for (int n = 3; n <= 7; ++n)
            for (const Graph& g : connected_graphs_upto_iso(n)) {
                ok &= hamiltonian_implies_tough_check(g).implication_holds;
                if (bipartition(g).kind == Bipartition::Kind::Unbalanced)
                    ok &= is_one_tough(g).has_value();
            }
        Graph pet(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                       {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
        auto rep = hamiltonian_implies_tough_check(pet);
        ok &= rep.one_tough && rep.ham == HamVerdict::Outcome::NotHamiltonian;
        report(9, ok, "hamiltonian implies 1-tough; petersen is the gap witness",
               t.secs());
    }

    printf("%s: %d criterion failure(s)\n", failures ? "RED" : "GREEN", failures);
    return failures ? 1 : 0;
}
