#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hamiltonica/labels.hpp"
#include "hamiltonica/vertex_set.hpp"

namespace hamiltonica {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists
// and an optional label sidecar.  Immutable after construction; all
// "mutations" build new graphs, so instances are safe to share across
// concurrently running searches.
class Graph {
public:
    Graph() : n_(0) {}
    // Edges may be given in any order/orientation; duplicates collapse,
    // self-loops are rejected.
    Graph(int n, const std::vector<std::pair<int, int>>& edges,
          std::map<int, VertexLabel> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }
    bool has_edge(int u, int v) const;

    // Sorted (u < v) lexicographic edge list.
    std::vector<std::pair<int, int>> edges() const;

    const std::map<int, VertexLabel>& labels() const { return labels_; }
    const VertexLabel* label(int v) const;
    Graph with_labels(std::map<int, VertexLabel> labels) const;

    // Resolves a label to its vertex index (linear scan; labels are a
    // sidecar, structural code never needs this).
    std::optional<int> vertex_by_label(const VertexLabel& l) const;

private:
    int n_;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::map<int, VertexLabel> labels_;
};

struct DeletionResult {
    Graph graph;
    // old vertex -> new vertex, -1 for deleted ones.
    std::vector<int> index_map;
};

// Induced subgraph on V(g) \ s, labels preserved under reindexing.
DeletionResult delete_vertices(const Graph& g, const VertexSet& s);

// Partition of V(g) into connected parts, ascending by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
int component_count(const Graph& g);

// Number of degree-0 vertices, written i(G) in the path-factor criterion.
int isolated_count(const Graph& g);

struct Bipartition {
    enum class Kind { Balanced, Unbalanced, NotBipartite } kind;
    // Part sizes with part_a <= part_b (meaningless for NotBipartite).
    int part_a = 0, part_b = 0;
};

// 2-coloring check.  For disconnected graphs the per-component colorings
// are flipped so as to minimize the part-size difference, choosing the
// lexicographically least flip vector among minimizers.
Bipartition bipartition(const Graph& g);

// Non-increasing degree list; front() is Delta(g).
std::vector<int> degree_sequence(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace hamiltonica
