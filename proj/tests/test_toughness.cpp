#include <doctest.h>

#include "hamiltonica/constructions.hpp"
#include "hamiltonica/small_graphs.hpp"
#include "hamiltonica/toughness.hpp"

using namespace hamiltonica;

namespace {

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2).num == -1);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(4, 3) >= Rational(1, 1));
    CHECK(Rational(3, 1).str() == "3");
    CHECK(Rational(4, 6).str() == "2/3");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("one-toughness witnesses") {
    auto w = is_one_tough(star(3));
    REQUIRE(w.has_value());
    CHECK(w->s.to_vector() == std::vector<int>{0});
    CHECK(w->components_after == 3);
    CHECK(!is_one_tough(cycle_graph(7)).has_value());
    CHECK(!is_one_tough(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))
               .has_value());
    // P_4: removing the 2nd vertex leaves 2 components
    auto wp = is_one_tough(path_graph(4));
    REQUIRE(wp.has_value());
    CHECK(wp->s.to_vector() == std::vector<int>{1});
    CHECK(wp->components_after == 2);
}

TEST_CASE("witness minimality") {
    // K_{2,4}: no single cut vertex, but both left vertices give 4 parts
    Graph k24(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
    auto w = is_one_tough(k24);
    REQUIRE(w.has_value());
    CHECK(w->s.to_vector() == std::vector<int>{0, 1});
    CHECK(w->components_after == 4);
}

TEST_CASE("exact toughness values") {
    CHECK(toughness(cycle_graph(6)) == Rational(1, 1));
    CHECK(toughness(path_graph(5)) == Rational(1, 2));
    CHECK(toughness(star(3)) == Rational(1, 3));
    Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(toughness(k23) == Rational(2, 3));
    CHECK(toughness(petersen()) == Rational(4, 3));
    CHECK_THROWS_AS(toughness(Graph(3, {{0, 1}, {0, 2}, {1, 2}})),
                    std::invalid_argument);  // complete
    CHECK_THROWS_AS(toughness(Graph(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);  // disconnected
}

TEST_CASE("toughness and 1-toughness deciders are consistent") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graphs_upto_iso(n)) {
            bool complete = g.edge_count() == n * (n - 1) / 2;
            if (complete) continue;
            bool one_tough = !is_one_tough(g).has_value();
            CHECK(one_tough == (toughness(g) >= Rational(1, 1)));
        }
}

TEST_CASE("hamiltonian implies 1-tough, petersen included") {
    auto rep = hamiltonian_implies_tough_check(petersen());
    CHECK(rep.ham == HamVerdict::Outcome::NotHamiltonian);
    CHECK(rep.one_tough);
    CHECK(rep.implication_holds);
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graphs_upto_iso(n))
            CHECK(hamiltonian_implies_tough_check(g).implication_holds);
}

TEST_CASE("unbalanced bipartite graphs are not 1-tough") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : connected_graphs_upto_iso(n))
            if (bipartition(g).kind == Bipartition::Kind::Unbalanced)
                CHECK(is_one_tough(g).has_value());
}
