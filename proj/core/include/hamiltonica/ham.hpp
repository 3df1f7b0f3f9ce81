#pragma once

#include <cstdint>
#include <vector>

#include "hamiltonica/graph.hpp"

namespace hamiltonica {

struct SearchStats {
    long long nodes_explored = 0;
};

struct HamVerdict {
    enum class Outcome { Found, NotHamiltonian, Unknown };
    Outcome outcome;
    std::vector<int> cycle;  // Found only
    SearchStats stats;
    long long budget = 0;
};

struct SolverOptions {
    long long node_budget = 1'000'000'000;
    // Pruning toggles.  All on by default; the unpruned configuration is
    // exercised by the soundness cross-checks.
    bool propagate = true;       // degree-2 / saturation closure
    bool connectivity = true;    // available graph must stay connected
    bool articulation = true;    // ... and 2-connected
    bool bipartite_precheck = true;
};

// Exact decision with certificate.  Deterministic for fixed options.
HamVerdict find_hamiltonian_cycle(const Graph& g, const SolverOptions& opts = {});

// True iff the sequence is a spanning cycle of g (independent of the
// solver; used to certify every Found verdict).
bool verify_cycle(const Graph& g, const std::vector<int>& cycle);

struct CutProfile {
    VertexSet cut_set;
    int crossing_edges;      // cycle edges with exactly one end in the cut
    int components_outside;  // omega(g - cut)
    int components_touched;  // components of g - cut entered by the cycle
};

CutProfile cut_profile(const Graph& g, const std::vector<int>& cycle,
                       const VertexSet& cut);

struct ForcedEdgeResult {
    std::vector<std::pair<int, int>> edges;  // must be in any ham. cycle
    bool infeasible;  // 3 forced edges at a vertex, or a premature subcycle
};

// Fixed-point closure of the degree-2 forcing rule (with exclusion
// propagation), exposed on its own for inspection and tests.
ForcedEdgeResult forced_edges(const Graph& g);

}  // namespace hamiltonica
