#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamiltonica/graph.hpp"

namespace hamiltonica {

// A set of vertex-disjoint paths, each on >= 2 vertices, together with its
// covered set and endpoint set E(P).
struct PathSystem {
    std::vector<std::vector<int>> paths;
    VertexSet covered;
    VertexSet endpoints;

    static PathSystem from_paths(int n, std::vector<std::vector<int>> paths);
};

// True iff ps is structurally valid in g: disjoint, consecutive adjacency,
// every path >= 2 vertices, covered/endpoints consistent.
bool validate_path_system(const Graph& g, const PathSystem& ps);
// Additionally requires covered == V(g).
bool validate_path_factor(const Graph& g, const PathSystem& ps);

// Endpoint-side constraints for path cover enumeration.
struct EndpointConstraint {
    VertexSet allowed;    // endpoints must lie inside
    VertexSet required;   // must be endpoints
    VertexSet forbidden;  // must not be endpoints
    // biconditionals: u in E(P) <=> v in E(P)
    std::vector<std::pair<int, int>> pairing;

    static EndpointConstraint none(int n) {
        return {VertexSet::full(n), VertexSet(n), VertexSet(n), {}};
    }
    void check_well_formed(int n) const;
};

struct NoPathFactorWitness {
    VertexSet s;
    int isolated_after;  // i(G - s), strictly greater than 2|s|
};

enum class SearchOutcome { Present, Absent, Unknown };

struct PathFactorResult {
    SearchOutcome outcome;
    std::optional<PathSystem> factor;  // set iff Present
};

// Exhaustive path-factor search (first solution of the cover enumerator
// with the empty constraint).  node_budget guards large inputs; on
// exhaustion the outcome is Unknown, distinct from Absent.
PathFactorResult find_path_factor(const Graph& g,
                                  long long node_budget = 200'000'000);

// Subset search for S with i(G-S) > 2|S| (exhaustive, |V| <= 20).
// nullopt means every subset passes, i.e. a path factor exists.
std::optional<NoPathFactorWitness> akiyama_witness(const Graph& g);

struct CoverEnumOptions {
    bool prune = true;              // observation-based cuts
    long long node_budget = -1;     // < 0: unlimited
    // Streaming callback; return false to stop early.
    std::function<bool(const PathSystem&)> on_cover;
};

struct CoverCount {
    long long count = 0;
    bool complete = true;  // false when the budget stopped the search
    long long nodes = 0;
};

// Exact number of path covers of g satisfying c, by backtracking over
// lowest-uncovered-vertex path extension.  |V| <= 30 intended.
CoverCount enumerate_path_covers(const Graph& g, const EndpointConstraint& c,
                                 const CoverEnumOptions& opts = {});

// Independent engine: column-profile dynamic program over the strip
// P_rows [] P_cols (rows in {2,3,4}), vertex (r,c) -> r*cols + c.
// Constraints with pairing are outside this engine's scope.
long long count_path_covers_strip(int rows, int cols,
                                  const EndpointConstraint& c);

struct ObservationReport {
    bool pass;
    std::string detail;            // empty when pass
    int violating_vertex = -1;     // degree-1 vertex outside E(P)
    int violating_component = -1;  // component with odd/zero endpoint count
};

// Asserts the two path-factor observations on g minus the chosen paths of a
// valid factor: leftover degree-1 vertices lie in E(P), and every leftover
// component holds a positive even number of E(P) vertices.
ObservationReport observation_checks(const Graph& g, const PathSystem& ps,
                                     const std::vector<int>& removed_paths);

}  // namespace hamiltonica
