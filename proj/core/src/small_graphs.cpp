#include "hamiltonica/small_graphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hamiltonica {

namespace {

struct CanonSearch {
    int n;
    std::vector<uint32_t> adj;  // adjacency bitmasks
    std::vector<uint8_t> best;  // upper-triangle bits, row by row
    bool best_init = false;
    std::vector<int> perm;      // position -> vertex
    std::vector<uint8_t> cur;

    // One round of color refinement by (color, sorted neighbor colors).
    void refine(std::vector<int>& colors) const {
        for (;;) {
            std::vector<std::pair<std::vector<int>, int>> keys(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> k{colors[v]};
                std::vector<int> nb;
                for (int u = 0; u < n; ++u)
                    if ((adj[v] >> u) & 1) nb.push_back(colors[u]);
                std::sort(nb.begin(), nb.end());
                k.insert(k.end(), nb.begin(), nb.end());
                keys[v] = {std::move(k), v};
            }
            auto sorted = keys;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> next(n);
            int rank = -1;
            const std::vector<int>* prev = nullptr;
            for (const auto& [k, v] : sorted) {
                if (!prev || *prev != k) ++rank;
                prev = &k;
                next[v] = rank;
            }
            if (next == colors) return;
            colors = std::move(next);
        }
    }

    // `better` means cur is already strictly greater than best.
    void dfs(const std::vector<int>& colors, uint32_t placed, int pos,
             bool better) {
        if (pos == n) {
            if (better || !best_init) {
                best = cur;
                best_init = true;
            }
            return;
        }
        int min_color = 0;
        bool found = false;
        for (int v = 0; v < n; ++v)
            if (!((placed >> v) & 1) && (!found || colors[v] < min_color)) {
                min_color = colors[v];
                found = true;
            }
        for (int v = 0; v < n; ++v) {
            if (((placed >> v) & 1) || colors[v] != min_color) continue;
            // Row bits toward already placed vertices.
            size_t mark = cur.size();
            bool b = better, dead = false;
            for (int q = 0; q < pos && !dead; ++q) {
                uint8_t bit = (adj[v] >> perm[q]) & 1;
                if (!b && best_init) {
                    uint8_t bb = best[cur.size()];
                    if (bit < bb) dead = true;
                    else if (bit > bb) b = true;
                }
                cur.push_back(bit);
            }
            if (!dead) {
                perm[pos] = v;
                auto next = colors;
                next[v] = -(pos + 1);  // individualize with a fresh color
                refine(next);
                dfs(next, placed | (uint32_t(1) << v), pos + 1, b);
            }
            cur.resize(mark);
        }
    }
};

}  // namespace

std::string canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("canonical_code supports n <= 16");
    const long long max_edges = (long long)n * (n - 1) / 2;
    // Empty and complete graphs are fixed points; skip the factorial walk.
    if (g.edge_count() == 0 || g.edge_count() == max_edges) {
        std::string code(1, char(n));
        code += std::string((size_t)max_edges, g.edge_count() ? '1' : '0');
        return code;
    }
    CanonSearch cs;
    cs.n = n;
    cs.adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
        cs.adj[u] |= uint32_t(1) << v;
        cs.adj[v] |= uint32_t(1) << u;
    }
    cs.perm.assign(n, -1);
    std::vector<int> colors(n, 0);
    cs.refine(colors);
    cs.dfs(colors, 0, 0, false);
    std::string code(1, char(n));
    for (uint8_t b : cs.best) code += char('0' + b);
    return code;
}

namespace {

Graph graph_from_code(const std::string& code) {
    int n = code[0];
    std::vector<std::pair<int, int>> edges;
    size_t pos = 1;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (code[pos++] == '1') edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

std::vector<Graph> all_graphs_upto_iso(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<std::string> codes{canonical_code(Graph(1, {}))};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::string> next;
        for (const auto& code : codes) {
            Graph base = graph_from_code(code);
            auto base_edges = base.edges();
            for (uint32_t nbhd = 0; nbhd < (uint32_t(1) << (k - 1)); ++nbhd) {
                auto edges = base_edges;
                for (int u = 0; u < k - 1; ++u)
                    if ((nbhd >> u) & 1) edges.emplace_back(u, k - 1);
                next.insert(canonical_code(Graph(k, edges)));
            }
        }
        codes.assign(next.begin(), next.end());
        std::sort(codes.begin(), codes.end());
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(graph_from_code(c));
    return out;
}

std::vector<Graph> connected_graphs_upto_iso(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs_upto_iso(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

Graph random_connected_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
}

}  // namespace hamiltonica
