#pragma once

#include <string>
#include <vector>

#include "hamiltonica/graph.hpp"

namespace hamiltonica {

// P_n with position labels 1..n (the [n] column convention used by the
// strip constraints).
Graph path_graph(int n);
// C_n, n >= 3, same position labels.
Graph cycle_graph(int n);
// Star K_{1,k}: center 0, leaves 1..k.
Graph star(int k);

// The counterexample tree: spine a-b-c, Delta-1 degree-3 branch vertices
// on each of a and c, each carrying two leaves.  6*Delta-3 vertices.
// Numbering: a=0, b=1, c=2, then a_1..a_{D-1}, c_1..c_{D-1}, then leaf
// groups (u_i, v_i, y_i, z_i) per i.
Graph build_t_delta(int delta);

// Cartesian product with vertex (g,h) -> g*|V(H)|+h and ProductPair labels
// carried over from the factors (unlabeled factor vertices get their index
// as a plain label).
Graph cartesian_product(const Graph& g, const Graph& h);

// One representative per isomorphism class of trees on n vertices
// (1 <= n <= 10), by leaf augmentation deduplicated via AHU canonical form
// (the tests cross-check against a full Prufer-sequence sweep).
std::vector<Graph> all_trees(int n);

// Canonical string for a tree, invariant under isomorphism (rooted AHU
// encoding at the center, min over bicentral rootings).
std::string tree_canonical_form(const Graph& t);

// One of the ten named path families in T_Delta [] P_m.
struct PathFixture {
    std::string name;          // M, N, Q, R, S, T, U, V, X, Z
    int i;                     // layer index, 1-based
    int j;                     // branch index for Q, R, U, V; otherwise -1
    std::vector<VertexLabel> labels;
    std::vector<int> vertices;  // resolved ids in the product graph
};

// All ten families for every valid i in [m-3] (and j in [Delta-1] where
// applicable), with vertex sequences exactly as in the source tree product.
std::vector<PathFixture> fixture_paths(int delta, int m);

// The factor paths of T_Delta: B = a,b,c and A_i = u_i,a_i,v_i,
// C_i = y_i,c_i,z_i, as vertex-id sequences.
std::vector<std::vector<int>> t_delta_factor_paths(int delta);

}  // namespace hamiltonica
