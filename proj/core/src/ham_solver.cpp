#include "hamiltonica/ham.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamiltonica {

namespace {

constexpr int8_t UNDECIDED = 0, REQUIRED = 1, EXCLUDED = 2;

struct EdgeSolver {
    int n;
    SolverOptions opts;
    std::vector<std::pair<int, int>> edge;
    std::vector<std::vector<std::pair<int, int>>> inc;  // (edge id, other)
    std::vector<int8_t> state;
    std::vector<int> rdeg, adeg;  // required degree, available degree
    std::vector<int> seg_end;     // valid at chain ends (rdeg <= 1)
    std::vector<int> seg_len;     // valid at chain ends
    int req_count = 0;
    long long nodes = 0;
    bool found = false, out_of_budget = false;
    std::vector<int> queue;

    // Undo trail: (array tag, index, old value).
    enum Tag : int8_t { T_STATE, T_RDEG, T_ADEG, T_END, T_LEN, T_REQC };
    struct TrailEntry {
        int8_t tag;
        int index;
        int old_value;
    };
    std::vector<TrailEntry> trail;

    explicit EdgeSolver(const Graph& g, const SolverOptions& o)
        : n(g.vertex_count()), opts(o) {
        inc.resize(n);
        for (auto [u, v] : g.edges()) {
            int e = (int)edge.size();
            edge.emplace_back(u, v);
            inc[u].emplace_back(e, v);
            inc[v].emplace_back(e, u);
        }
        state.assign(edge.size(), UNDECIDED);
        rdeg.assign(n, 0);
        adeg.assign(n, 0);
        for (int v = 0; v < n; ++v) adeg[v] = (int)inc[v].size();
        seg_end.resize(n);
        seg_len.assign(n, 1);
        for (int v = 0; v < n; ++v) seg_end[v] = v;
    }

    void save(int8_t tag, int index, int old_value) {
        trail.push_back({tag, index, old_value});
    }
    void rollback(size_t mark) {
        while (trail.size() > mark) {
            auto [tag, i, old] = trail.back();
            trail.pop_back();
            switch (tag) {
                case T_STATE: state[i] = (int8_t)old; break;
                case T_RDEG: rdeg[i] = old; break;
                case T_ADEG: adeg[i] = old; break;
                case T_END: seg_end[i] = old; break;
                case T_LEN: seg_len[i] = old; break;
                case T_REQC: req_count = old; break;
            }
        }
    }

    int find_edge(int u, int v) const {
        for (auto [e, w] : inc[u])
            if (w == v) return e;
        return -1;
    }

    bool exclude(int e) {
        if (state[e] == EXCLUDED) return true;
        if (state[e] == REQUIRED) return false;
        save(T_STATE, e, state[e]);
        state[e] = EXCLUDED;
        auto [u, v] = edge[e];
        save(T_ADEG, u, adeg[u]);
        save(T_ADEG, v, adeg[v]);
        --adeg[u];
        --adeg[v];
        queue.push_back(u);
        queue.push_back(v);
        return true;
    }

    bool require(int e) {
        if (state[e] == REQUIRED) return true;
        if (state[e] == EXCLUDED) return false;
        auto [u, v] = edge[e];
        if (rdeg[u] >= 2 || rdeg[v] >= 2) return false;
        if (seg_end[u] == v) {
            // closing the chain containing u and v
            if (req_count + 1 != n) return false;  // premature cycle
            save(T_STATE, e, state[e]);
            state[e] = REQUIRED;
            save(T_REQC, -1, req_count);
            ++req_count;
            found = true;
            return true;
        }
        save(T_STATE, e, state[e]);
        state[e] = REQUIRED;
        int eu = seg_end[u], ev = seg_end[v];
        int merged = seg_len[eu] + seg_len[ev];
        save(T_END, eu, seg_end[eu]);
        save(T_END, ev, seg_end[ev]);
        save(T_LEN, eu, seg_len[eu]);
        save(T_LEN, ev, seg_len[ev]);
        seg_end[eu] = ev;
        seg_end[ev] = eu;
        seg_len[eu] = seg_len[ev] = merged;
        save(T_RDEG, u, rdeg[u]);
        save(T_RDEG, v, rdeg[v]);
        ++rdeg[u];
        ++rdeg[v];
        save(T_REQC, -1, req_count);
        ++req_count;
        queue.push_back(u);
        queue.push_back(v);
        // The direct edge between the merged chain's ends would close a
        // short cycle; drop it now.
        if (merged < n) {
            int f = find_edge(eu, ev);
            if (f >= 0 && state[f] == UNDECIDED && !exclude(f)) return false;
        }
        return true;
    }

    // Saturation closure.  Returns false on contradiction; may set `found`.
    bool propagate() {
        while (!queue.empty() && !found) {
            int v = queue.back();
            queue.pop_back();
            if (adeg[v] < 2 || rdeg[v] > 2) return false;
            if (rdeg[v] == 2) {
                for (auto [e, w] : inc[v]) {
                    (void)w;
                    if (state[e] == UNDECIDED && !exclude(e)) return false;
                }
            } else if (adeg[v] == 2) {
                for (auto [e, w] : inc[v]) {
                    (void)w;
                    if (state[e] == UNDECIDED && !require(e)) return false;
                    if (found) return true;
                }
            }
        }
        return true;
    }

    bool seed_propagation() {
        for (int v = 0; v < n; ++v) queue.push_back(v);
        return propagate();
    }

    // Connectivity / biconnectivity of the graph of non-excluded edges.
    // Any spanning cycle lives inside it, so it must be 2-connected.
    bool cut_check() {
        std::vector<int> disc(n, -1), low(n, 0);
        int timer = 0;
        bool has_articulation = false;
        // iterative Tarjan from vertex 0
        struct Frame {
            int v, parent;
            size_t next = 0;
            int children = 0;
        };
        std::vector<Frame> stack{{0, -1}};
        disc[0] = low[0] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < inc[f.v].size()) {
                auto [e, w] = inc[f.v][f.next++];
                if (state[e] == EXCLUDED) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    stack.push_back({w, f.v});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent, children = f.children;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& p = stack.back();
                    low[p.v] = std::min(low[p.v], low[v]);
                    if (p.parent != -1 && low[v] >= disc[p.v])
                        has_articulation = true;
                }
                if (parent == -1 && children > 1) has_articulation = true;
            }
        }
        if (opts.connectivity)
            for (int v = 0; v < n; ++v)
                if (disc[v] == -1) return false;
        if (opts.articulation && has_articulation) return false;
        return true;
    }

    // Lowest-index chain end with the fewest undecided options, else the
    // lowest vertex with any undecided edge.
    int pick_edge() const {
        int best_v = -1, best_opts = 1 << 30;
        for (int v = 0; v < n; ++v) {
            if (rdeg[v] != 1) continue;
            int options = adeg[v] - rdeg[v];
            if (options < best_opts) {
                best_opts = options;
                best_v = v;
            }
        }
        if (best_v == -1)
            for (int v = 0; v < n; ++v)
                if (rdeg[v] == 0 && adeg[v] > 0) {
                    best_v = v;
                    break;
                }
        if (best_v == -1) return -1;
        for (auto [e, w] : inc[best_v]) {
            (void)w;
            if (state[e] == UNDECIDED) return e;
        }
        return -1;
    }

    bool search() {
        if (found) return true;
        ++nodes;
        if (nodes > opts.node_budget) {
            out_of_budget = true;
            return false;
        }
        if ((opts.connectivity || opts.articulation) && !cut_check())
            return false;
        int e = pick_edge();
        if (e < 0) return false;  // no moves left, chains cannot close
        for (int decision = 0; decision < 2 && !out_of_budget; ++decision) {
            size_t mark = trail.size();
            bool ok = decision == 0 ? require(e) : exclude(e);
            if (ok) ok = propagate();
            if (ok && (found || search())) return true;
            found = false;
            rollback(mark);
            queue.clear();
        }
        return false;
    }

    std::vector<int> extract_cycle() const {
        std::vector<int> cyc{0};
        int prev = -1, cur = 0;
        do {
            int next = -1;
            for (auto [e, w] : inc[cur])
                if (state[e] == REQUIRED && w != prev) {
                    next = w;
                    break;
                }
            prev = cur;
            cur = next;
            if (cur != 0) cyc.push_back(cur);
        } while (cur != 0);
        return cyc;
    }
};

// Plain path-extension search, used as the unpruned reference engine.
struct NaiveSolver {
    const Graph& g;
    long long budget, nodes = 0;
    bool out_of_budget = false;
    std::vector<char> visited;
    std::vector<int> path;

    bool dfs() {
        ++nodes;
        if (nodes > budget) {
            out_of_budget = true;
            return false;
        }
        int v = path.back();
        if ((int)path.size() == g.vertex_count())
            return g.has_edge(v, path.front());
        for (int u : g.neighbors(v)) {
            if (visited[u]) continue;
            visited[u] = 1;
            path.push_back(u);
            if (dfs()) return true;
            path.pop_back();
            visited[u] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

HamVerdict find_hamiltonian_cycle(const Graph& g, const SolverOptions& opts) {
    const int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("hamiltonicity needs >= 3 vertices");
    if (opts.bipartite_precheck) {
        Bipartition b = bipartition(g);
        if (b.kind == Bipartition::Kind::Unbalanced)
            return {HamVerdict::Outcome::NotHamiltonian, {}, {0}, opts.node_budget};
    }
    if (!opts.propagate && !opts.connectivity && !opts.articulation) {
        NaiveSolver ns{g, opts.node_budget};
        ns.visited.assign(n, 0);
        ns.visited[0] = 1;
        ns.path = {0};
        bool ok = ns.dfs();
        if (ok) return {HamVerdict::Outcome::Found, ns.path, {ns.nodes},
                        opts.node_budget};
        if (ns.out_of_budget)
            return {HamVerdict::Outcome::Unknown, {}, {ns.nodes}, opts.node_budget};
        return {HamVerdict::Outcome::NotHamiltonian, {}, {ns.nodes},
                opts.node_budget};
    }
    EdgeSolver s(g, opts);
    bool ok;
    if (opts.propagate)
        ok = s.seed_propagation();
    else
        ok = true;
    if (ok && !s.found) ok = s.search();
    if ((s.found || ok) && !s.out_of_budget) {
        std::vector<int> cyc = s.extract_cycle();
        if (!verify_cycle(g, cyc))
            throw std::logic_error("solver produced an invalid certificate");
        return {HamVerdict::Outcome::Found, std::move(cyc), {s.nodes},
                opts.node_budget};
    }
    if (s.out_of_budget)
        return {HamVerdict::Outcome::Unknown, {}, {s.nodes}, opts.node_budget};
    return {HamVerdict::Outcome::NotHamiltonian, {}, {s.nodes}, opts.node_budget};
}

bool verify_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int n = g.vertex_count();
    if ((int)cycle.size() != n || n < 3) return false;
    std::vector<char> seen(n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
    return true;
}

CutProfile cut_profile(const Graph& g, const std::vector<int>& cycle,
                       const VertexSet& cut) {
    if (!verify_cycle(g, cycle))
        throw std::invalid_argument("cut_profile needs a valid cycle");
    auto del = delete_vertices(g, cut);
    auto comps = connected_components(del.graph);
    std::vector<int> comp_of(del.graph.vertex_count(), -1);
    for (size_t i = 0; i < comps.size(); ++i)
        for (int v : comps[i].to_vector()) comp_of[v] = (int)i;
    int crossing = 0;
    std::vector<char> touched(comps.size(), 0);
    const int n = (int)cycle.size();
    for (int i = 0; i < n; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % n];
        if (cut.contains(u) != cut.contains(v)) {
            ++crossing;
            int outside = cut.contains(u) ? v : u;
            touched[comp_of[del.index_map[outside]]] = 1;
        }
    }
    int ntouched = 0;
    for (char t : touched) ntouched += t;
    return {cut, crossing, (int)comps.size(), ntouched};
}

ForcedEdgeResult forced_edges(const Graph& g) {
    if (g.vertex_count() < 3) return {{}, true};
    SolverOptions opts;
    EdgeSolver s(g, opts);
    bool ok = s.seed_propagation();
    ForcedEdgeResult r;
    r.infeasible = !ok;
    for (size_t e = 0; e < s.edge.size(); ++e)
        if (s.state[e] == REQUIRED) r.edges.push_back(s.edge[e]);
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

}  // namespace hamiltonica
