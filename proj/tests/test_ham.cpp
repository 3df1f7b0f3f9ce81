#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hamiltonica/checks.hpp"
#include "hamiltonica/constructions.hpp"
#include "hamiltonica/ham.hpp"
#include "hamiltonica/small_graphs.hpp"

using namespace hamiltonica;

namespace {

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// Brute-force oracle: try every vertex order fixing position 0.
bool ham_oracle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = g.has_edge(perm[n - 1], perm[0]);
        for (int i = 0; ok && i + 1 < n; ++i)
            ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

SolverOptions unpruned() {
    SolverOptions o;
    o.propagate = o.connectivity = o.articulation = o.bipartite_precheck = false;
    return o;
}

}  // namespace

TEST_CASE("verify_cycle semantics") {
    Graph c5 = cycle_graph(5);
    CHECK(verify_cycle(c5, {0, 1, 2, 3, 4}));
    CHECK(verify_cycle(c5, {2, 3, 4, 0, 1}));
    CHECK(!verify_cycle(c5, {0, 1, 2, 3}));        // not spanning
    CHECK(!verify_cycle(c5, {0, 1, 2, 3, 3}));     // repeat
    CHECK(!verify_cycle(c5, {0, 2, 4, 1, 3}));     // non-edges
    CHECK(!verify_cycle(path_graph(3), {0, 1, 2}));
}

TEST_CASE("known verdicts") {
    auto outcome = [](const Graph& g) {
        return find_hamiltonian_cycle(g).outcome;
    };
    CHECK(outcome(cycle_graph(12)) == HamVerdict::Outcome::Found);
    CHECK(outcome(path_graph(5)) == HamVerdict::Outcome::NotHamiltonian);
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(outcome(k4) == HamVerdict::Outcome::Found);
    CHECK(outcome(petersen()) == HamVerdict::Outcome::NotHamiltonian);
    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                  {2, 3}, {2, 4}, {2, 5}});
    CHECK(outcome(k33) == HamVerdict::Outcome::Found);
    CHECK(outcome(star(4)) == HamVerdict::Outcome::NotHamiltonian);
    // 2 x 5 grid is a ladder, hamiltonian
    Graph grid = cartesian_product(path_graph(2), path_graph(5));
    auto v = find_hamiltonian_cycle(grid);
    REQUIRE(v.outcome == HamVerdict::Outcome::Found);
    CHECK(verify_cycle(grid, v.cycle));
    CHECK_THROWS_AS(find_hamiltonian_cycle(path_graph(2)), std::invalid_argument);
}

TEST_CASE("unbalanced bipartite shortcut") {
    auto v = find_hamiltonian_cycle(star(3));
    CHECK(v.outcome == HamVerdict::Outcome::NotHamiltonian);
    CHECK(v.stats.nodes_explored == 0);
    // odd column count keeps the tree product unbalanced
    Graph p = cartesian_product(build_t_delta(3), path_graph(5));
    auto vp = find_hamiltonian_cycle(p);
    CHECK(vp.outcome == HamVerdict::Outcome::NotHamiltonian);
    CHECK(vp.stats.nodes_explored == 0);
}

TEST_CASE("solver matches the permutation oracle") {
    for (int n = 3; n <= 7; ++n) {
        for (const Graph& g : connected_graphs_upto_iso(n)) {
            auto v = find_hamiltonian_cycle(g);
            REQUIRE(v.outcome != HamVerdict::Outcome::Unknown);
            CHECK((v.outcome == HamVerdict::Outcome::Found) == ham_oracle(g));
            if (v.outcome == HamVerdict::Outcome::Found)
                CHECK(verify_cycle(g, v.cycle));
        }
    }
}

TEST_CASE("pruned and unpruned solvers agree") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graphs_upto_iso(n))
            CHECK(find_hamiltonian_cycle(g).outcome ==
                  find_hamiltonian_cycle(g, unpruned()).outcome);
    for (int cols = 2; cols <= 4; ++cols) {
        Graph g = cartesian_product(path_graph(3), path_graph(cols));
        CHECK(find_hamiltonian_cycle(g).outcome ==
              find_hamiltonian_cycle(g, unpruned()).outcome);
    }
}

TEST_CASE("determinism") {
    Graph g = cartesian_product(build_t_delta(3), path_graph(4));
    auto a = find_hamiltonian_cycle(g);
    auto b = find_hamiltonian_cycle(g);
    CHECK(a.outcome == b.outcome);
    CHECK(a.stats.nodes_explored == b.stats.nodes_explored);
    Graph pos = cartesian_product(double_star(), path_graph(4));
    auto c = find_hamiltonian_cycle(pos);
    auto d = find_hamiltonian_cycle(pos);
    CHECK(c.cycle == d.cycle);
}

TEST_CASE("budget exhaustion yields Unknown") {
    Graph g = cartesian_product(build_t_delta(3), path_graph(8));
    SolverOptions o;
    o.node_budget = 10;
    auto v = find_hamiltonian_cycle(g, o);
    CHECK(v.outcome == HamVerdict::Outcome::Unknown);
    CHECK(v.budget == 10);
}

TEST_CASE("forced edges") {
    // on a cycle every edge is forced by the degree-2 rule
    auto f = forced_edges(cycle_graph(6));
    CHECK(!f.infeasible);
    CHECK(f.edges.size() == 6);
    // a vertex of degree 2 whose neighbors already need 2 other edges:
    // K_4 has no forced edges
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(forced_edges(k4).edges.empty());
    // three forced edges at one vertex is infeasible
    CHECK(forced_edges(star(3)).infeasible);
}

TEST_CASE("cut profile on a found cycle") {
    Graph g = cycle_graph(8);
    std::vector<int> cycle{0, 1, 2, 3, 4, 5, 6, 7};
    auto p = cut_profile(g, cycle, make_vertex_set(8, {0, 4}));
    CHECK(p.crossing_edges == 4);
    CHECK(p.components_outside == 2);
    CHECK(p.components_touched == 2);
}
