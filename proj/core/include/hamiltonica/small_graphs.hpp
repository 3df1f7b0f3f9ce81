#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hamiltonica/graph.hpp"

namespace hamiltonica {

// Canonical form of a general small graph (n <= 16): the lexicographically
// maximal upper-triangle adjacency bitstring over labelings compatible with
// iterated color refinement.  Equal strings <=> isomorphic graphs.
std::string canonical_code(const Graph& g);

// One representative per isomorphism class of all graphs on n vertices
// (n <= 9 is the practical range), built by vertex augmentation from the
// classes on n-1 vertices.  Deterministic order.
std::vector<Graph> all_graphs_upto_iso(int n);

// Connected members of all_graphs_upto_iso(n).
std::vector<Graph> connected_graphs_upto_iso(int n);

// Uniform-ish random connected graph on n vertices: G(n,p) resampled until
// connected.  Deterministic for a fixed seed.
Graph random_connected_graph(int n, double p, std::mt19937& rng);

}  // namespace hamiltonica
