#include "hamiltonica/constructions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace hamiltonica {

namespace {

std::map<int, VertexLabel> position_labels(int n) {
    std::map<int, VertexLabel> labels;
    for (int v = 0; v < n; ++v)
        labels.emplace(v, VertexLabel::plain(std::to_string(v + 1)));
    return labels;
}

}  // namespace

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges, position_labels(n));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges, position_labels(n));
}

Graph star(int k) {
    if (k < 1) throw std::invalid_argument("star needs k >= 1 leaves");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
    return Graph(k + 1, edges);
}

namespace {

struct TDeltaIndex {
    int delta;
    int a = 0, b = 1, c = 2;
    int ai(int i) const { return 2 + i; }               // i in [delta-1]
    int ci(int i) const { return 1 + delta + i; }
    int leaf_base(int i) const { return 2 * delta + 1 + 4 * (i - 1); }
    int ui(int i) const { return leaf_base(i); }
    int vi(int i) const { return leaf_base(i) + 1; }
    int yi(int i) const { return leaf_base(i) + 2; }
    int zi(int i) const { return leaf_base(i) + 3; }
};

}  // namespace

Graph build_t_delta(int delta) {
    if (delta < 3) throw std::invalid_argument("build_t_delta needs Delta >= 3");
    TDeltaIndex ix{delta};
    std::vector<std::pair<int, int>> edges;
    std::map<int, VertexLabel> labels;
    labels.emplace(ix.a, VertexLabel::tdelta(TDeltaRole::A));
    labels.emplace(ix.b, VertexLabel::tdelta(TDeltaRole::B));
    labels.emplace(ix.c, VertexLabel::tdelta(TDeltaRole::C));
    edges.emplace_back(ix.a, ix.b);
    edges.emplace_back(ix.b, ix.c);
    for (int i = 1; i <= delta - 1; ++i) {
        edges.emplace_back(ix.a, ix.ai(i));
        edges.emplace_back(ix.c, ix.ci(i));
        edges.emplace_back(ix.ai(i), ix.ui(i));
        edges.emplace_back(ix.ai(i), ix.vi(i));
        edges.emplace_back(ix.ci(i), ix.yi(i));
        edges.emplace_back(ix.ci(i), ix.zi(i));
        labels.emplace(ix.ai(i), VertexLabel::tdelta(TDeltaRole::Ai, i));
        labels.emplace(ix.ci(i), VertexLabel::tdelta(TDeltaRole::Ci, i));
        labels.emplace(ix.ui(i), VertexLabel::tdelta(TDeltaRole::Ui, i));
        labels.emplace(ix.vi(i), VertexLabel::tdelta(TDeltaRole::Vi, i));
        labels.emplace(ix.yi(i), VertexLabel::tdelta(TDeltaRole::Yi, i));
        labels.emplace(ix.zi(i), VertexLabel::tdelta(TDeltaRole::Zi, i));
    }
    return Graph(6 * delta - 3, edges, std::move(labels));
}

std::vector<std::vector<int>> t_delta_factor_paths(int delta) {
    TDeltaIndex ix{delta};
    std::vector<std::vector<int>> paths;
    paths.push_back({ix.a, ix.b, ix.c});
    for (int i = 1; i <= delta - 1; ++i) {
        paths.push_back({ix.ui(i), ix.ai(i), ix.vi(i)});
        paths.push_back({ix.yi(i), ix.ci(i), ix.zi(i)});
    }
    return paths;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng == 0 || nh == 0)
        throw std::invalid_argument("cartesian_product of empty factor");
    auto id = [nh](int gv, int hv) { return gv * nh + hv; };
    std::vector<std::pair<int, int>> edges;
    edges.reserve((size_t)g.edge_count() * nh + (size_t)ng * h.edge_count());
    for (auto [u, v] : g.edges())
        for (int hv = 0; hv < nh; ++hv)
            edges.emplace_back(id(u, hv), id(v, hv));
    for (auto [u, v] : h.edges())
        for (int gv = 0; gv < ng; ++gv)
            edges.emplace_back(id(gv, u), id(gv, v));
    auto factor_label = [](const Graph& f, int v) {
        if (const VertexLabel* l = f.label(v)) return *l;
        return VertexLabel::plain(std::to_string(v));
    };
    std::map<int, VertexLabel> labels;
    for (int gv = 0; gv < ng; ++gv)
        for (int hv = 0; hv < nh; ++hv)
            labels.emplace(id(gv, hv),
                           VertexLabel::pair(factor_label(g, gv),
                                             factor_label(h, hv)));
    return Graph(ng * nh, edges, std::move(labels));
}

namespace {

// Rooted AHU encoding: "(" + sorted child encodings + ")".
std::string ahu(const Graph& t, int v, int parent) {
    std::vector<std::string> kids;
    for (int u : t.neighbors(v))
        if (u != parent) kids.push_back(ahu(t, u, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
}

std::vector<int> tree_centers(const Graph& t) {
    const int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int u : t.neighbors(v))
                if (!removed[u] && --deg[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

}  // namespace

std::string tree_canonical_form(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("not a tree");
    std::string best;
    for (int c : tree_centers(t)) {
        std::string enc = ahu(t, c, -1);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

std::vector<Graph> all_trees(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("all_trees supports 1 <= n <= 10");
    if (n == 1) return {Graph(1, {})};
    if (n == 2) return {Graph(2, {{0, 1}})};
    // Grow by attaching a new leaf to every vertex of every class on n-1
    // vertices; every tree on n vertices arises this way.  AHU dedup.
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    for (const Graph& t : all_trees(n - 1)) {
        auto edges = t.edges();
        for (int v = 0; v < n - 1; ++v) {
            edges.emplace_back(v, n - 1);
            Graph bigger(n, edges);
            if (seen.insert(tree_canonical_form(bigger)).second)
                out.push_back(std::move(bigger));
            edges.pop_back();
        }
    }
    return out;
}

namespace {

VertexLabel product_label(const VertexLabel& tpart, int col) {
    return VertexLabel::pair(tpart, VertexLabel::plain(std::to_string(col)));
}

}  // namespace

std::vector<PathFixture> fixture_paths(int delta, int m) {
    if (delta < 3) throw std::invalid_argument("fixture_paths needs Delta >= 3");
    if (m < 4) throw std::invalid_argument("fixture_paths needs m >= 4");
    TDeltaIndex ix{delta};
    auto A = VertexLabel::tdelta(TDeltaRole::A);
    auto B = VertexLabel::tdelta(TDeltaRole::B);
    auto C = VertexLabel::tdelta(TDeltaRole::C);
    auto Aj = [](int j) { return VertexLabel::tdelta(TDeltaRole::Ai, j); };
    auto Cj = [](int j) { return VertexLabel::tdelta(TDeltaRole::Ci, j); };
    // vertex id of (t-vertex, column) with columns 1..m
    auto tid = [&](TDeltaRole role, int j) {
        switch (role) {
            case TDeltaRole::A: return ix.a;
            case TDeltaRole::B: return ix.b;
            case TDeltaRole::C: return ix.c;
            case TDeltaRole::Ai: return ix.ai(j);
            case TDeltaRole::Ci: return ix.ci(j);
            default: throw std::logic_error("unexpected role in fixture");
        }
    };
    auto vid = [&](const VertexLabel& l, int col) {
        int j = role_is_indexed(l.role()) ? l.index() : 0;
        return tid(l.role(), j) * m + (col - 1);
    };
    std::vector<PathFixture> out;
    auto emit = [&](std::string name, int i, int j,
                    std::vector<std::pair<VertexLabel, int>> seq) {
        PathFixture f;
        f.name = std::move(name);
        f.i = i;
        f.j = j;
        for (auto& [l, col] : seq) {
            f.labels.push_back(product_label(l, col));
            f.vertices.push_back(vid(l, col));
        }
        out.push_back(std::move(f));
    };
    for (int i = 1; i <= m - 3; ++i) {
        emit("M", i, -1,
             {{A, i}, {A, i + 1}, {B, i + 1}, {B, i + 2}, {A, i + 2}, {A, i + 3}});
        emit("N", i, -1, {{C, i}, {C, i + 1}, {C, i + 2}, {C, i + 3}});
        emit("S", i, -1,
             {{C, i}, {C, i + 1}, {B, i + 1}, {B, i + 2}, {C, i + 2}, {C, i + 3}});
        emit("T", i, -1, {{A, i}, {A, i + 1}, {A, i + 2}, {A, i + 3}});
        emit("X", i, -1, {{A, i}, {A, i + 1}, {B, i + 1}, {C, i + 1}, {C, i}});
        emit("Z", i, -1,
             {{A, i + 3}, {A, i + 2}, {B, i + 2}, {C, i + 2}, {C, i + 3}});
        for (int j = 1; j <= delta - 1; ++j) {
            emit("Q", i, j, {{C, i}, {C, i + 1}, {Cj(j), i + 1}});
            emit("R", i, j, {{Cj(j), i + 2}, {C, i + 2}, {C, i + 3}});
            emit("U", i, j, {{A, i}, {A, i + 1}, {Aj(j), i + 1}});
            emit("V", i, j, {{Aj(j), i + 2}, {A, i + 2}, {A, i + 3}});
        }
    }
    return out;
}

}  // namespace hamiltonica
