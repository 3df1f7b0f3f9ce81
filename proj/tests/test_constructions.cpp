#include <doctest.h>

#include <map>
#include <set>

#include "hamiltonica/constructions.hpp"
#include "hamiltonica/factors.hpp"
#include "hamiltonica/io.hpp"

using namespace hamiltonica;

namespace {

std::map<int, int> degree_census(const Graph& g) {
    std::map<int, int> c;
    for (int v = 0; v < g.vertex_count(); ++v) ++c[g.degree(v)];
    return c;
}

}  // namespace

TEST_CASE("basic generators") {
    CHECK(path_graph(1).vertex_count() == 1);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK(star(4).edge_count() == 4);
    REQUIRE(path_graph(3).label(0) != nullptr);
    CHECK(path_graph(3).label(0)->text() == "1");
    CHECK(path_graph(3).label(2)->text() == "3");
}

TEST_CASE("tree family structure") {
    for (int d = 3; d <= 8; ++d) {
        Graph t = build_t_delta(d);
        CHECK(t.vertex_count() == 6 * d - 3);
        CHECK(is_tree(t));
        // one degree-2 spine center, two degree-Delta spine ends,
        // 2(Delta-1) degree-3 branch vertices, 4(Delta-1) leaves
        std::map<int, int> expected{{2, 1}, {3, 2 * d - 2}, {1, 4 * d - 4}};
        expected[d] += 2;
        CHECK(degree_census(t) == expected);
    }
    CHECK_THROWS_AS(build_t_delta(2), std::invalid_argument);
}

TEST_CASE("tree family numbering and labels") {
    Graph t = build_t_delta(3);
    CHECK(t.label(0)->text() == "a");
    CHECK(t.label(1)->text() == "b");
    CHECK(t.label(2)->text() == "c");
    CHECK(t.label(3)->text() == "a_1");
    CHECK(t.label(4)->text() == "a_2");
    CHECK(t.label(5)->text() == "c_1");
    CHECK(t.label(6)->text() == "c_2");
    CHECK(t.label(7)->text() == "u_1");
    CHECK(t.label(8)->text() == "v_1");
    CHECK(t.label(9)->text() == "y_1");
    CHECK(t.label(10)->text() == "z_1");
    CHECK(t.label(11)->text() == "u_2");
    // adjacency spot checks: spine, branches, leaves
    CHECK(t.has_edge(0, 1));
    CHECK(t.has_edge(1, 2));
    CHECK(!t.has_edge(0, 2));
    CHECK(t.has_edge(0, 3));
    CHECK(t.has_edge(2, 5));
    CHECK(t.has_edge(3, 7));
    CHECK(t.has_edge(3, 8));
    CHECK(t.has_edge(5, 9));
    CHECK(t.has_edge(5, 10));
}

TEST_CASE("tree family factor paths form a path factor") {
    for (int d : {3, 4, 5}) {
        Graph t = build_t_delta(d);
        auto paths = t_delta_factor_paths(d);
        CHECK((int)paths.size() == 2 * d - 1);  // B plus A_i, C_i
        PathSystem ps = PathSystem::from_paths(t.vertex_count(), paths);
        CHECK(validate_path_factor(t, ps));
    }
}

TEST_CASE("removing interior vertices of the tree isolates the leaves") {
    // a, c and all branch vertices removed: b plus 4D-4 leaves remain alone
    for (int d : {3, 5}) {
        Graph t = build_t_delta(d);
        VertexSet s(t.vertex_count());
        s.insert(0);
        s.insert(2);
        for (int i = 3; i < 3 + 2 * (d - 1); ++i) s.insert(i);
        auto del = delete_vertices(t, s);
        CHECK(isolated_count(del.graph) == 4 * d - 3);
        CHECK(del.graph.edge_count() == 0);
    }
}

TEST_CASE("cartesian product size and adjacency rule") {
    Graph g = cycle_graph(3), h = path_graph(4);
    Graph p = cartesian_product(g, h);
    CHECK(p.vertex_count() == 12);
    // |E| = |E_G|*|V_H| + |V_G|*|E_H|
    CHECK(p.edge_count() == 3 * 4 + 3 * 3);
    // (g,h)-(g',h) iff gg' in G; (g,h)-(g,h') iff hh' in H
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 4; ++i)
            for (int b = 0; b < 3; ++b)
                for (int j = 0; j < 4; ++j) {
                    bool expect = (a == b && h.has_edge(i, j)) ||
                                  (i == j && g.has_edge(a, b));
                    CHECK(p.has_edge(a * 4 + i, b * 4 + j) == expect);
                }
    REQUIRE(p.label(5) != nullptr);
    CHECK(p.label(5)->text() == "(2,2)");
}

TEST_CASE("product size identities for the tree family") {
    Graph p = cartesian_product(build_t_delta(3), path_graph(9));
    CHECK(p.vertex_count() == 135);
    CHECK(p.edge_count() == 14 * 9 + 15 * 8);
    Graph q = cartesian_product(build_t_delta(4), path_graph(2));
    CHECK(q.vertex_count() == 42);
}

TEST_CASE("tree enumeration counts") {
    const int expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK((int)all_trees(n).size() == expected[n]);
    // n=4 classes are P_4 and the 3-star
    auto t4 = all_trees(4);
    std::set<std::string> forms;
    for (const auto& t : t4) forms.insert(tree_canonical_form(t));
    CHECK(forms.size() == 2);
    CHECK(forms.count(tree_canonical_form(path_graph(4))) == 1);
    CHECK(forms.count(tree_canonical_form(star(3))) == 1);
}

TEST_CASE("tree enumeration matches a prufer-sequence sweep") {
    // independent oracle: decode every sequence in [0,n-1]^(n-2) and count
    // distinct canonical forms
    for (int n = 3; n <= 7; ++n) {
        std::set<std::string> forms;
        std::vector<int> seq(n - 2, 0);
        for (;;) {
            std::vector<int> deg(n, 1);
            for (int s : seq) ++deg[s];
            std::vector<std::pair<int, int>> edges;
            for (int s : seq) {
                int leaf = 0;
                while (deg[leaf] != 1) ++leaf;
                edges.emplace_back(leaf, s);
                deg[leaf] = 0;
                --deg[s];
            }
            int u = -1, v = -1;
            for (int w = 0; w < n; ++w)
                if (deg[w] == 1) (u < 0 ? u : v) = w;
            edges.emplace_back(u, v);
            forms.insert(tree_canonical_form(Graph(n, edges)));
            int i = n - 3;
            while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
            if (i < 0) break;
            ++seq[i];
        }
        auto enumerated = all_trees(n);
        CHECK(enumerated.size() == forms.size());
        for (const auto& t : enumerated)
            CHECK(forms.count(tree_canonical_form(t)) == 1);
    }
}

TEST_CASE("tree canonical form is relabeling invariant") {
    Graph t1(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    Graph t2(5, {{4, 3}, {3, 0}, {0, 2}, {0, 1}});  // same shape, relabeled
    CHECK(tree_canonical_form(t1) == tree_canonical_form(t2));
    CHECK(tree_canonical_form(t1) != tree_canonical_form(path_graph(5)));
}

TEST_CASE("fixture path families are paths in the product") {
    for (int d : {3, 4}) {
        for (int m = 4; m <= 9; ++m) {
            Graph p = cartesian_product(build_t_delta(d), path_graph(m));
            auto fixtures = fixture_paths(d, m);
            // ten families; Q, R, U, V split by branch index j
            CHECK((int)fixtures.size() == (m - 3) * (6 + 4 * (d - 1)));
            for (const auto& f : fixtures) {
                REQUIRE(f.vertices.size() >= 2);
                PathSystem ps =
                    PathSystem::from_paths(p.vertex_count(), {f.vertices});
                CHECK(validate_path_system(p, ps));
                // labels resolve to exactly the listed vertex ids
                REQUIRE(f.labels.size() == f.vertices.size());
                for (size_t i = 0; i < f.labels.size(); ++i) {
                    auto v = p.vertex_by_label(f.labels[i]);
                    REQUIRE(v.has_value());
                    CHECK(*v == f.vertices[i]);
                }
            }
        }
    }
}
