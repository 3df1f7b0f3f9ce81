#include "hamiltonica/factors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamiltonica {

PathSystem PathSystem::from_paths(int n, std::vector<std::vector<int>> paths) {
    PathSystem ps;
    ps.covered = VertexSet(n);
    ps.endpoints = VertexSet(n);
    for (const auto& p : paths) {
        if (p.size() < 2)
            throw std::invalid_argument("every path needs >= 2 vertices");
        for (int v : p) ps.covered.insert(v);
        ps.endpoints.insert(p.front());
        ps.endpoints.insert(p.back());
    }
    ps.paths = std::move(paths);
    return ps;
}

bool validate_path_system(const Graph& g, const PathSystem& ps) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    int covered = 0, endpoints = 0;
    for (const auto& p : ps.paths) {
        if (p.size() < 2) return false;
        for (size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
            ++covered;
            if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1])) return false;
        }
        endpoints += 2;
    }
    if (ps.covered.size() != covered) return false;
    if (ps.endpoints.size() != endpoints) return false;
    for (int v = 0; v < n; ++v)
        if (ps.covered.contains(v) != (bool)seen[v]) return false;
    for (const auto& p : ps.paths)
        if (!ps.endpoints.contains(p.front()) || !ps.endpoints.contains(p.back()))
            return false;
    return true;
}

bool validate_path_factor(const Graph& g, const PathSystem& ps) {
    return validate_path_system(g, ps) &&
           ps.covered.size() == g.vertex_count();
}

void EndpointConstraint::check_well_formed(int n) const {
    if (allowed.universe() != n || required.universe() != n ||
        forbidden.universe() != n)
        throw std::invalid_argument("constraint universe mismatch");
    if (!required.is_subset_of(allowed))
        throw std::invalid_argument("required endpoints must be allowed");
    if (required.intersects(forbidden))
        throw std::invalid_argument("required and forbidden overlap");
    for (auto [u, v] : pairing)
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("pairing vertex out of range");
}

namespace {

// Path-extension backtracking over the lowest-indexed uncovered vertex.
struct CoverSearch {
    const Graph& g;
    const EndpointConstraint& c;
    const CoverEnumOptions& opts;
    int n;
    std::vector<char> covered;        // 0 uncovered, 1 interior, 2 endpoint
    std::vector<std::vector<int>> paths;
    long long count = 0;
    long long nodes = 0;
    bool stopped = false;  // budget hit or callback stop

    static constexpr char INTERIOR = 1, ENDPOINT = 2;

    bool endpoint_ok(int v) const {
        return c.allowed.contains(v) && !c.forbidden.contains(v);
    }

    // Pairing biconditional: reject as soon as both sides are decided and
    // disagree (endpoint vs interior).
    bool pairing_ok() const {
        for (auto [u, v] : c.pairing) {
            if (!covered[u] || !covered[v]) continue;
            if ((covered[u] == ENDPOINT) != (covered[v] == ENDPOINT))
                return false;
        }
        return true;
    }

    // Observation-style cuts on the uncovered remainder.
    bool prune_remainder() const {
        std::vector<int> udeg(n, 0);
        for (int v = 0; v < n; ++v) {
            if (covered[v]) continue;
            for (int u : g.neighbors(v))
                if (!covered[u]) ++udeg[v];
        }
        std::vector<char> seen(n, 0);
        for (int s = 0; s < n; ++s) {
            if (covered[s] || seen[s]) continue;
            // flood the uncovered component of s
            std::vector<int> stack{s};
            seen[s] = 1;
            int candidates = 0, comp_required = 0, comp_size = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++comp_size;
                if (udeg[v] == 0) return true;  // stranded vertex
                if (udeg[v] == 1 && !endpoint_ok(v)) return true;
                if (endpoint_ok(v)) ++candidates;
                if (c.required.contains(v)) ++comp_required;
                for (int u : g.neighbors(v))
                    if (!covered[u] && !seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            if (candidates < 2) return true;
            // If the only endpoint candidates are all required, the
            // component's endpoint count is exactly `candidates`, which
            // must be even.
            if (candidates == comp_required && candidates % 2 == 1)
                return true;
        }
        return false;
    }

    bool budget_ok() {
        ++nodes;
        if (opts.node_budget >= 0 && nodes > opts.node_budget) {
            stopped = true;
            return false;
        }
        return true;
    }

    void accept() {
        // required/pairing already enforced incrementally
        ++count;
        if (opts.on_cover) {
            PathSystem ps = PathSystem::from_paths(n, paths);
            if (!opts.on_cover(ps)) stopped = true;
        }
    }

    int lowest_uncovered() const {
        for (int v = 0; v < n; ++v)
            if (!covered[v]) return v;
        return -1;
    }

    // Finish the current path whose vertex sequence is `path`
    // (path.front() and path.back() are its endpoints).
    void finalize_path(std::vector<int>& path) {
        int a = path.front(), b = path.back();
        if (!endpoint_ok(a) || !endpoint_ok(b)) return;
        covered[a] = ENDPOINT;
        covered[b] = ENDPOINT;
        bool ok = true;
        for (size_t i = 1; i + 1 < path.size(); ++i)
            if (c.required.contains(path[i])) ok = false;
        if (ok) ok = pairing_ok();
        if (ok && (!opts.prune || !prune_remainder())) {
            paths.push_back(path);
            recurse();
            paths.pop_back();
        }
        covered[a] = INTERIOR;
        covered[b] = INTERIOR;
    }

    // Grow the left arm (prepended before s); the right arm is fixed.
    void extend_left(std::vector<int>& path) {
        if (stopped || !budget_ok()) return;
        finalize_path(path);
        int head = path.front();
        for (int u : g.neighbors(head)) {
            if (stopped) return;
            if (covered[u]) continue;
            covered[u] = INTERIOR;
            path.insert(path.begin(), u);
            extend_left(path);
            path.erase(path.begin());
            covered[u] = 0;
        }
    }

    // Grow the right arm from s; at every stop point optionally start a
    // left arm whose first vertex exceeds the right arm's first vertex
    // (canonical orientation, so each path is produced exactly once).
    void extend_right(std::vector<int>& path, int s) {
        if (stopped || !budget_ok()) return;
        if (path.size() >= 2) {
            finalize_path(path);
            // left arm options
            int first_right = path[1];
            for (int u : g.neighbors(s)) {
                if (stopped) return;
                if (covered[u] || u <= first_right) continue;
                covered[u] = INTERIOR;
                path.insert(path.begin(), u);
                extend_left(path);
                path.erase(path.begin());
                covered[u] = 0;
            }
        }
        int tail = path.back();
        for (int u : g.neighbors(tail)) {
            if (stopped) return;
            if (covered[u]) continue;
            covered[u] = INTERIOR;
            path.push_back(u);
            extend_right(path, s);
            path.pop_back();
            covered[u] = 0;
        }
    }

    void recurse() {
        if (stopped) return;
        int s = lowest_uncovered();
        if (s < 0) {
            accept();
            return;
        }
        covered[s] = INTERIOR;
        std::vector<int> path{s};
        extend_right(path, s);
        covered[s] = 0;
    }
};

}  // namespace

CoverCount enumerate_path_covers(const Graph& g, const EndpointConstraint& c,
                                 const CoverEnumOptions& opts) {
    c.check_well_formed(g.vertex_count());
    CoverSearch cs{g, c, opts, g.vertex_count()};
    cs.covered.assign(cs.n, 0);
    cs.recurse();
    bool budget_hit =
        opts.node_budget >= 0 && cs.nodes > opts.node_budget;
    return {cs.count, !budget_hit, cs.nodes};
}

PathFactorResult find_path_factor(const Graph& g, long long node_budget) {
    const int n = g.vertex_count();
    if (n == 0) return {SearchOutcome::Present, PathSystem::from_paths(0, {})};
    std::optional<PathSystem> found;
    CoverEnumOptions opts;
    opts.node_budget = node_budget;
    opts.on_cover = [&](const PathSystem& ps) {
        found = ps;
        return false;  // first solution suffices
    };
    CoverCount r = enumerate_path_covers(g, EndpointConstraint::none(n), opts);
    if (found) return {SearchOutcome::Present, std::move(found)};
    if (!r.complete) return {SearchOutcome::Unknown, std::nullopt};
    return {SearchOutcome::Absent, std::nullopt};
}

std::optional<NoPathFactorWitness> akiyama_witness(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20)
        throw std::invalid_argument("akiyama_witness exhaustive bound is 20");
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= uint32_t(1) << v;
        adj[v] |= uint32_t(1) << u;
    }
    // Ascending cardinality, lexicographically least first within a
    // cardinality, so witnesses are minimal and deterministic.
    std::vector<std::vector<uint32_t>> by_card(n + 1);
    for (uint32_t s = 0; s < (uint32_t(1) << n); ++s)
        by_card[std::popcount(s)].push_back(s);
    for (int card = 0; card <= n; ++card)
        for (uint32_t s : by_card[card]) {
            int iso = 0;
            for (int v = 0; v < n; ++v)
                if (!((s >> v) & 1) && (adj[v] & ~s) == 0) ++iso;
            if (iso > 2 * card) {
                VertexSet set(n);
                for (int v = 0; v < n; ++v)
                    if ((s >> v) & 1) set.insert(v);
                return NoPathFactorWitness{std::move(set), iso};
            }
        }
    return std::nullopt;
}

ObservationReport observation_checks(const Graph& g, const PathSystem& ps,
                                     const std::vector<int>& removed_paths) {
    if (!validate_path_factor(g, ps))
        throw std::invalid_argument("path system is not a factor of g");
    VertexSet removed(g.vertex_count());
    for (int idx : removed_paths) {
        if (idx < 0 || idx >= (int)ps.paths.size())
            throw std::invalid_argument("removed path index out of range");
        for (int v : ps.paths[idx]) removed.insert(v);
    }
    auto del = delete_vertices(g, removed);
    const Graph& r = del.graph;
    // old-vertex view of the remainder
    std::vector<int> old_of(r.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (del.index_map[v] >= 0) old_of[del.index_map[v]] = v;
    for (int v = 0; v < r.vertex_count(); ++v)
        if (r.degree(v) == 1 && !ps.endpoints.contains(old_of[v]))
            return {false, "degree-1 vertex outside E(P)", old_of[v], -1};
    auto comps = connected_components(r);
    for (size_t i = 0; i < comps.size(); ++i) {
        int cnt = 0;
        for (int v : comps[i].to_vector())
            if (ps.endpoints.contains(old_of[v])) ++cnt;
        if (cnt == 0 || cnt % 2 != 0)
            return {false, "component without a positive even endpoint count",
                    -1, (int)i};
    }
    return {true, "", -1, -1};
}

}  // namespace hamiltonica
