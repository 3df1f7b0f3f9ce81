#include "hamiltonica/checks.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hamiltonica/constructions.hpp"
#include "hamiltonica/io.hpp"
#include "hamiltonica/small_graphs.hpp"

namespace hamiltonica {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const char* verdict_name(CheckReport::Verdict v) {
    switch (v) {
        case CheckReport::Verdict::Pass: return "pass";
        case CheckReport::Verdict::Fail: return "fail";
        case CheckReport::Verdict::Skipped: return "skipped";
    }
    return "?";
}

ordered_json verdict_json(const HamVerdict& v) {
    ordered_json j;
    switch (v.outcome) {
        case HamVerdict::Outcome::Found:
            j["verdict"] = "Found";
            j["cycle"] = v.cycle;
            break;
        case HamVerdict::Outcome::NotHamiltonian:
            j["verdict"] = "NotHamiltonian";
            break;
        case HamVerdict::Outcome::Unknown:
            j["verdict"] = "Unknown";
            break;
    }
    j["nodes_explored"] = v.stats.nodes_explored;
    j["budget"] = v.budget;
    return j;
}

// vertex id of grid cell (row, col), both 1-based, in P_3 [] P_n
int grid_vid(int n, int row, int col) { return (row - 1) * n + (col - 1); }

}  // namespace

ordered_json CheckReport::to_json() const {
    ordered_json j;
    j["check_id"] = check_id;
    j["claim"] = claim_statement(check_id);
    j["parameters"] = parameters;
    j["verdict"] = verdict_name(verdict);
    if (verdict == Verdict::Skipped) j["skip_reason"] = skip_reason;
    j["evidence"] = evidence;
    return j;
}

std::string claim_statement(const std::string& check_id) {
    static const std::map<std::string, std::string> reg = {
        {"strip-cover-tail",
         "P_3 x P_n has no path cover whose endpoints all lie in row 2 at "
         "columns >= k with (2,k) an endpoint, k odd"},
        {"strip-cover-parity",
         "P_3 x P_n has no path cover with endpoints confined to row 2, an "
         "odd-column endpoint (2,k) with (2,k-1) not an endpoint, and "
         "odd/even column pairs below k agreeing on endpoint membership"},
        {"no-factor-product",
         "if G has no path factor and H has a degree-1 vertex then G x H "
         "has no spanning cycle"},
        {"tree-family-nonham",
         "the tree family T_Delta (max degree Delta, with a path factor) "
         "gives non-hamiltonian products T_Delta x P_m for all m <= "
         "4*Delta-3"},
        {"component-counts",
         "removing the spine columns from T_Delta x P_m leaves 2*Delta-2 "
         "components of 3m vertices each"},
        {"positive-side",
         "T x P_n is hamiltonian for a tree T with a path factor and even "
         "n >= 4*max_degree(T)-2"},
        {"tree-times-cycle",
         "T x C_n is hamiltonian exactly when max_degree(T) <= n"},
    };
    auto it = reg.find(check_id);
    return it == reg.end() ? "" : it->second;
}

EndpointConstraint strip_tail_constraint(int n, int k) {
    if (k % 2 == 0) throw std::invalid_argument("k must be odd");
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    const int total = 3 * n;
    EndpointConstraint c{VertexSet(total), VertexSet(total), VertexSet(total), {}};
    for (int col = k; col <= n; ++col) c.allowed.insert(grid_vid(n, 2, col));
    c.required.insert(grid_vid(n, 2, k));
    for (int v = 0; v < total; ++v)
        if (!c.allowed.contains(v)) c.forbidden.insert(v);
    return c;
}

CheckReport check_strip_cover_tail(int n, int k) {
    auto t0 = Clock::now();
    CheckReport r;
    r.check_id = "strip-cover-tail";
    r.parameters = {{"n", n}, {"k", k}};
    EndpointConstraint c = strip_tail_constraint(n, k);
    Graph g = cartesian_product(path_graph(3), path_graph(n));
    CoverCount bt = enumerate_path_covers(g, c);
    long long dp = count_path_covers_strip(3, n, c);
    r.evidence = {{"count_backtracking", bt.count},
                  {"count_strip_dp", dp},
                  {"search_nodes", bt.nodes}};
    r.verdict = (bt.complete && bt.count == 0 && dp == 0)
                    ? CheckReport::Verdict::Pass
                    : CheckReport::Verdict::Fail;
    r.wall_time_s = seconds_since(t0);
    return r;
}

int strip_parity_free_bits(int k) { return k >= 3 ? 1 + (k - 3) / 2 : 0; }

long long strip_parity_pattern_count(int n, int k, unsigned mask,
                                     EndpointConstraint* out) {
    if (k % 2 == 0 || k < 1 || k > n)
        throw std::invalid_argument("k must be odd in [1, n]");
    const int total = 3 * n;
    EndpointConstraint c{VertexSet(total), VertexSet(total), VertexSet(total), {}};
    for (int col = 1; col <= n; ++col) c.allowed.insert(grid_vid(n, 2, col));
    c.required.insert(grid_vid(n, 2, k));
    if (k > 1) c.forbidden.insert(grid_vid(n, 2, k - 1));
    // membership pattern below k: column 1 is a free choice (its pair
    // partner falls off the grid), then tied pairs (2,3), (4,5), ...
    if (k >= 3) {
        if (mask & 1u)
            c.required.insert(grid_vid(n, 2, 1));
        else
            c.forbidden.insert(grid_vid(n, 2, 1));
        int bit = 1;
        for (int even = 2; even + 1 <= k - 2; even += 2, ++bit) {
            if ((mask >> bit) & 1u) {
                c.required.insert(grid_vid(n, 2, even));
                c.required.insert(grid_vid(n, 2, even + 1));
            } else {
                c.forbidden.insert(grid_vid(n, 2, even));
                c.forbidden.insert(grid_vid(n, 2, even + 1));
            }
        }
    }
    if (out) *out = c;
    return count_path_covers_strip(3, n, c);
}

CheckReport check_strip_cover_parity(int n) {
    auto t0 = Clock::now();
    CheckReport r;
    r.check_id = "strip-cover-parity";
    r.parameters = {{"n", n}};
    Graph g = cartesian_product(path_graph(3), path_graph(n));
    long long patterns = 0, nonzero = 0, column1_out_patterns = 0;
    ordered_json per_pattern = ordered_json::array();
    bool engines_agree = true;
    for (int k = 1; k <= n; k += 2) {
        int bits = strip_parity_free_bits(k);
        for (unsigned mask = 0; mask < (1u << bits); ++mask) {
            EndpointConstraint c;
            long long dp = strip_parity_pattern_count(n, k, mask, &c);
            CoverCount bt = enumerate_path_covers(g, c);
            if (!bt.complete || bt.count != dp) engines_agree = false;
            ++patterns;
            if (bits == 0 || !(mask & 1u)) ++column1_out_patterns;
            if (dp != 0) ++nonzero;
            per_pattern.push_back({{"k", k}, {"mask", mask}, {"count", dp}});
        }
    }
    r.evidence = {{"patterns", patterns},
                  // patterns also valid when column 1 is read as forced out
                  {"patterns_column1_out", column1_out_patterns},
                  {"nonzero_counts", nonzero},
                  {"engines_agree", engines_agree},
                  {"per_pattern", per_pattern}};
    r.verdict = (nonzero == 0 && engines_agree) ? CheckReport::Verdict::Pass
                                                : CheckReport::Verdict::Fail;
    r.wall_time_s = seconds_since(t0);
    return r;
}

CheckReport check_no_factor_product(int max_n, const std::vector<Graph>& h_factors,
                                    long long budget) {
    auto t0 = Clock::now();
    CheckReport r;
    r.check_id = "no-factor-product";
    r.parameters = {{"max_n", max_n}, {"h_count", h_factors.size()}};
    if (max_n > 7) throw std::invalid_argument("no-factor-product bound is 7");
    int tested = 0, skipped = 0, instances = 0;
    ordered_json failures = ordered_json::array();
    for (int sz = 1; sz <= max_n; ++sz) {
        for (const Graph& g : connected_graphs_upto_iso(sz)) {
            auto witness = akiyama_witness(g);
            if (!witness) {
                ++skipped;  // hypothesis not met: G has a path factor
                continue;
            }
            ++tested;
            for (const Graph& h : h_factors) {
                ++instances;
                Graph p = cartesian_product(g, h);
                if (p.vertex_count() < 3) continue;  // no cycle possible
                SolverOptions opts;
                opts.node_budget = budget;
                HamVerdict v = find_hamiltonian_cycle(p, opts);
                if (v.outcome != HamVerdict::Outcome::NotHamiltonian)
                    failures.push_back({{"g6", to_graph6(g)},
                                        {"h6", to_graph6(h)},
                                        {"result", verdict_json(v)}});
            }
        }
    }
    r.evidence = {{"graphs_without_factor", tested},
                  {"graphs_skipped_with_factor", skipped},
                  {"instances", instances},
                  {"failures", failures}};
    r.verdict = failures.empty() ? CheckReport::Verdict::Pass
                                 : CheckReport::Verdict::Fail;
    r.wall_time_s = seconds_since(t0);
    return r;
}

CheckReport check_tree_family_nonham(int delta, const std::vector<int>& m_list,
                                     long long budget, bool skip_on_budget,
                                     const Graph* graph_override) {
    auto t0 = Clock::now();
    CheckReport r;
    r.check_id = "tree-family-nonham";
    r.parameters = {{"delta", delta}, {"m_list", m_list}};
    if (delta < 3) throw std::invalid_argument("need Delta >= 3");
    for (int m : m_list)
        if (m < 2 || m > 4 * delta - 3)
            throw std::invalid_argument("m out of range [2, 4*Delta-3]");
    Graph tree = graph_override ? *graph_override : build_t_delta(delta);
    // hypothesis side: tree of maximum degree Delta with a path factor and
    // the family's degree census
    ordered_json hyp;
    bool hyp_ok = true;
    if (!is_tree(tree)) {
        hyp["tree"] = false;
        hyp_ok = false;
    }
    auto degs = degree_sequence(tree);
    std::map<int, int> census, expected{{2, 1}, {3, 2 * delta - 2}, {1, 4 * delta - 4}};
    expected[delta] += 2;
    for (int d : degs) ++census[d];
    if (census != expected) {
        hyp["degree_census_ok"] = false;
        hyp_ok = false;
    }
    if (hyp_ok && degs.front() != delta) {
        hyp["max_degree_ok"] = false;
        hyp_ok = false;
    }
    if (hyp_ok) {
        auto factor = find_path_factor(tree);
        hyp["path_factor"] = factor.outcome == SearchOutcome::Present;
        if (factor.outcome != SearchOutcome::Present) hyp_ok = false;
    }
    hyp["ok"] = hyp_ok;
    ordered_json per_m = ordered_json::array();
    bool any_fail = !hyp_ok, any_skip = false;
    if (hyp_ok) {
        for (int m : m_list) {
            Graph p = cartesian_product(tree, path_graph(m));
            SolverOptions opts;
            opts.node_budget = budget;
            HamVerdict v = find_hamiltonian_cycle(p, opts);
            ordered_json e = verdict_json(v);
            e["m"] = m;
            e["vertices"] = p.vertex_count();
            per_m.push_back(e);
            if (v.outcome == HamVerdict::Outcome::NotHamiltonian) continue;
            if (v.outcome == HamVerdict::Outcome::Unknown && skip_on_budget)
                any_skip = true;
            else
                any_fail = true;
        }
    }
    r.evidence = {{"hypotheses", hyp}, {"instances", per_m}};
    r.verdict = any_fail ? CheckReport::Verdict::Fail
                         : (any_skip ? CheckReport::Verdict::Skipped
                                     : CheckReport::Verdict::Pass);
    if (any_skip && !any_fail) r.skip_reason = "node budget exhausted";
    r.wall_time_s = seconds_since(t0);
    return r;
}

CheckReport check_component_counts(int delta, int m) {
    auto t0 = Clock::now();
    CheckReport r;
    r.check_id = "component-counts";
    r.parameters = {{"delta", delta}, {"m", m}};
    if (delta < 3 || m < 2) throw std::invalid_argument("need Delta >= 3, m >= 2");
    Graph p = cartesian_product(build_t_delta(delta), path_graph(m));
    VertexSet cut(p.vertex_count());
    for (int t = 0; t < 3; ++t)  // spine vertices a=0, b=1, c=2
        for (int c = 0; c < m; ++c) cut.insert(t * m + c);
    auto del = delete_vertices(p, cut);
    auto comps = connected_components(del.graph);
    bool sizes_ok = true;
    for (const auto& comp : comps)
        if (comp.size() != 3 * m) sizes_ok = false;
    r.evidence = {{"components", comps.size()},
                  {"expected_components", 2 * delta - 2},
                  {"component_size_expected", 3 * m},
                  {"sizes_ok", sizes_ok}};
    r.verdict = ((int)comps.size() == 2 * delta - 2 && sizes_ok)
                    ? CheckReport::Verdict::Pass
                    : CheckReport::Verdict::Fail;
    r.wall_time_s = seconds_since(t0);
    return r;
}

CheckReport check_positive_side(const Graph& tree, int n, long long budget) {
    auto t0 = Clock::now();
    CheckReport r;
    r.check_id = "positive-side";
    r.parameters = {{"tree", to_graph6(tree)}, {"n", n}};
    if (!is_tree(tree)) throw std::invalid_argument("positive-side needs a tree");
    int delta = degree_sequence(tree).front();
    if (n % 2 != 0 || n < 4 * delta - 2)
        throw std::invalid_argument("need even n >= 4*max_degree-2");
    if (find_path_factor(tree).outcome != SearchOutcome::Present)
        throw std::invalid_argument("tree has no path factor");
    Graph p = cartesian_product(tree, path_graph(n));
    SolverOptions opts;
    opts.node_budget = budget;
    HamVerdict v = find_hamiltonian_cycle(p, opts);
    bool ok = v.outcome == HamVerdict::Outcome::Found && verify_cycle(p, v.cycle);
    r.evidence = verdict_json(v);
    r.evidence["certified"] = ok;
    r.verdict = ok ? CheckReport::Verdict::Pass : CheckReport::Verdict::Fail;
    r.wall_time_s = seconds_since(t0);
    return r;
}

CheckReport check_tree_times_cycle(int max_tree_n, const std::vector<int>& n_list,
                                   long long budget) {
    auto t0 = Clock::now();
    CheckReport r;
    r.check_id = "tree-times-cycle";
    r.parameters = {{"max_tree_n", max_tree_n}, {"n_list", n_list}};
    if (max_tree_n > 8) throw std::invalid_argument("tree-times-cycle bound is 8");
    int instances = 0;
    ordered_json failures = ordered_json::array();
    for (int sz = 1; sz <= max_tree_n; ++sz) {
        for (const Graph& t : all_trees(sz)) {
            int delta = sz == 1 ? 0 : degree_sequence(t).front();
            for (int n : n_list) {
                ++instances;
                Graph p = cartesian_product(t, cycle_graph(n));
                SolverOptions opts;
                opts.node_budget = budget;
                HamVerdict v = find_hamiltonian_cycle(p, opts);
                bool expected = delta <= n;
                bool got = v.outcome == HamVerdict::Outcome::Found;
                if (v.outcome == HamVerdict::Outcome::Unknown || expected != got)
                    failures.push_back({{"tree6", to_graph6(t)},
                                        {"n", n},
                                        {"expected_hamiltonian", expected},
                                        {"result", verdict_json(v)}});
            }
        }
    }
    r.evidence = {{"instances", instances}, {"failures", failures}};
    r.verdict = failures.empty() ? CheckReport::Verdict::Pass
                                 : CheckReport::Verdict::Fail;
    r.wall_time_s = seconds_since(t0);
    return r;
}

Graph double_star() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

std::vector<CheckReport> run_all(Profile profile, int threads) {
    if (threads <= 0) {
        const char* env = std::getenv("HAMILTONICA_THREADS");
        threads = env ? std::max(1, atoi(env)) : 1;
    }
    std::vector<std::function<CheckReport()>> tasks;
    auto add = [&](std::function<CheckReport()> f) { tasks.push_back(std::move(f)); };
    const bool full = profile == Profile::Full;

    std::vector<int> tail_ns = full ? std::vector<int>{3, 5, 7, 9}
                                    : std::vector<int>{3, 5, 7};
    for (int n : tail_ns)
        for (int k = 1; k <= n; k += 2)
            add([n, k] { return check_strip_cover_tail(n, k); });
    std::vector<int> parity_ns = full ? std::vector<int>{3, 5, 7}
                                      : std::vector<int>{3, 5};
    for (int n : parity_ns)
        add([n] { return check_strip_cover_parity(n); });

    add([full] {
        std::vector<Graph> hs{path_graph(2), path_graph(3)};
        if (full) hs.push_back(star(3));
        return check_no_factor_product(full ? 6 : 5, hs);
    });

    if (full) {
        add([] { return check_tree_family_nonham(3, {2, 3, 4, 5, 6}); });
        add([] {
            return check_tree_family_nonham(3, {7, 8, 9}, 1'000'000'000, true);
        });
        add([] {
            return check_tree_family_nonham(4, {2, 3, 4}, 1'000'000'000, true);
        });
    } else {
        add([] { return check_tree_family_nonham(3, {2, 3, 4, 5}); });
    }

    for (int delta : full ? std::vector<int>{3, 4, 5} : std::vector<int>{3, 4}) {
        for (int m : full ? std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9}
                          : std::vector<int>{2, 5}) {
            add([delta, m] { return check_component_counts(delta, m); });
        }
    }

    add([] { return check_positive_side(path_graph(4), 6); });
    if (full) {
        add([] { return check_positive_side(double_star(), 10); });
        add([] { return check_positive_side(build_t_delta(3), 10); });
    }

    add([full] {
        return check_tree_times_cycle(full ? 7 : 5,
                                      full ? std::vector<int>{3, 4, 5}
                                           : std::vector<int>{3, 4});
    });

    std::vector<CheckReport> reports(tasks.size());
    if (threads <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) reports[i] = tasks[i]();
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    reports[i] = tasks[i]();
                }
            });
        for (auto& th : pool) th.join();
    }
    return reports;
}

std::string summary_table(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        const char* v = r.verdict == CheckReport::Verdict::Pass      ? "PASS"
                        : r.verdict == CheckReport::Verdict::Skipped ? "SKIP"
                                                                     : "FAIL";
        out << v << "  " << r.check_id << " " << r.parameters.dump();
        char buf[32];
        snprintf(buf, sizeof buf, "  %.2fs", r.wall_time_s);
        out << buf;
        if (r.verdict == CheckReport::Verdict::Skipped)
            out << "  (" << r.skip_reason << ")";
        out << "\n";
    }
    return out.str();
}

int summary_exit_code(const std::vector<CheckReport>& reports) {
    bool any_fail = false, any_skip = false;
    for (const auto& r : reports) {
        any_fail |= r.verdict == CheckReport::Verdict::Fail;
        any_skip |= r.verdict == CheckReport::Verdict::Skipped;
    }
    return any_fail ? 1 : (any_skip ? 2 : 0);
}

}  // namespace hamiltonica
