#include "hamiltonica/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace hamiltonica {

std::string role_name(TDeltaRole r) {
    switch (r) {
        case TDeltaRole::A: return "a";
        case TDeltaRole::B: return "b";
        case TDeltaRole::C: return "c";
        case TDeltaRole::Ai: return "a_i";
        case TDeltaRole::Ci: return "c_i";
        case TDeltaRole::Ui: return "u_i";
        case TDeltaRole::Vi: return "v_i";
        case TDeltaRole::Yi: return "y_i";
        case TDeltaRole::Zi: return "z_i";
    }
    throw std::logic_error("bad role");
}

TDeltaRole role_from_name(const std::string& s) {
    if (s == "a") return TDeltaRole::A;
    if (s == "b") return TDeltaRole::B;
    if (s == "c") return TDeltaRole::C;
    if (s == "a_i") return TDeltaRole::Ai;
    if (s == "c_i") return TDeltaRole::Ci;
    if (s == "u_i") return TDeltaRole::Ui;
    if (s == "v_i") return TDeltaRole::Vi;
    if (s == "y_i") return TDeltaRole::Yi;
    if (s == "z_i") return TDeltaRole::Zi;
    throw std::invalid_argument("unknown T_Delta role: " + s);
}

std::string VertexLabel::text() const {
    switch (kind_) {
        case Kind::Plain:
            return name_;
        case Kind::TDelta: {
            std::string base = role_name(role_);
            if (role_is_indexed(role_)) {
                base.resize(base.size() - 1);  // drop the 'i' placeholder
                base += std::to_string(index_);
            }
            return base;
        }
        case Kind::ProductPair:
            return "(" + left_->text() + "," + right_->text() + ")";
    }
    throw std::logic_error("bad label kind");
}

bool operator==(const VertexLabel& x, const VertexLabel& y) {
    if (x.kind_ != y.kind_) return false;
    switch (x.kind_) {
        case VertexLabel::Kind::Plain:
            return x.name_ == y.name_;
        case VertexLabel::Kind::TDelta:
            return x.role_ == y.role_ && x.index_ == y.index_;
        case VertexLabel::Kind::ProductPair:
            return *x.left_ == *y.left_ && *x.right_ == *y.right_;
    }
    return false;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::map<int, VertexLabel> labels)
    : n_(n), adj_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m_ += (int)nb.size();
    }
    m_ /= 2;
    for (const auto& [v, l] : labels_)
        if (v < 0 || v >= n)
            throw std::invalid_argument("labeled vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const VertexLabel* Graph::label(int v) const {
    auto it = labels_.find(v);
    return it == labels_.end() ? nullptr : &it->second;
}

Graph Graph::with_labels(std::map<int, VertexLabel> labels) const {
    return Graph(n_, edges(), std::move(labels));
}

std::optional<int> Graph::vertex_by_label(const VertexLabel& l) const {
    for (const auto& [v, lab] : labels_)
        if (lab == l) return v;
    return std::nullopt;
}

DeletionResult delete_vertices(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set universe mismatch");
    const int n = g.vertex_count();
    std::vector<int> index_map(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!s.contains(v)) index_map[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (index_map[u] >= 0 && index_map[v] >= 0)
            edges.emplace_back(index_map[u], index_map[v]);
    std::map<int, VertexLabel> labels;
    for (const auto& [v, l] : g.labels())
        if (index_map[v] >= 0) labels.emplace(index_map[v], l);
    return {Graph(next, edges, std::move(labels)), std::move(index_map)};
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> parts;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet part(n);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            part.insert(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

int component_count(const Graph& g) {
    return (int)connected_components(g).size();
}

int isolated_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) ++c;
    return c;
}

Bipartition bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    // Per-component part sizes (size of the side holding the smallest vertex
    // first).
    std::vector<std::pair<int, int>> comps;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        int a = 0, b = 0;
        std::queue<int> q;
        color[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            (color[u] == 0 ? a : b)++;
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return {Bipartition::Kind::NotBipartite, 0, 0};
                }
            }
        }
        comps.emplace_back(a, b);
    }
    // Choose per-component flips minimizing |part difference|; among
    // minimizers the lexicographically least flip vector wins (it only
    // determines which side is reported first).  Component counts are small
    // at desk scale, so subset-sum over differences is done directly.
    int total = 0;
    for (auto [a, b] : comps) total += a + b;
    std::function<bool(size_t, int, int)> search = [&](size_t i, int d,
                                                       int target) {
        if (i == comps.size()) return std::abs(d) == target;
        int delta = comps[i].first - comps[i].second;
        return search(i + 1, d + delta, target) ||
               search(i + 1, d - delta, target);
    };
    int best_diff = total % 2;
    while (!search(0, 0, best_diff)) best_diff += 2;
    int small = (total - best_diff) / 2;
    int large = total - small;
    auto kind = (small == large) ? Bipartition::Kind::Balanced
                                 : Bipartition::Kind::Unbalanced;
    return {kind, small, large};
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) degs[v] = g.degree(v);
    std::sort(degs.rbegin(), degs.rend());
    return degs;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return component_count(g) == 1;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

}  // namespace hamiltonica
