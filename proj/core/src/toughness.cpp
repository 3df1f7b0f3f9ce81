#include "hamiltonica/toughness.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace hamiltonica {

namespace {

// Component count of g - s over bitmask subsets, adjacency as masks.
int components_after_removal(const std::vector<uint32_t>& adj, int n,
                             uint32_t s) {
    uint32_t alive = ((uint32_t(1) << n) - 1) & ~s;  // n <= 24 throughout
    int comps = 0;
    uint32_t left = alive;
    while (left) {
        ++comps;
        uint32_t frontier = left & (~left + 1);  // lowest set bit
        uint32_t comp = 0;
        while (frontier) {
            comp |= frontier;
            uint32_t next = 0;
            uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & alive & ~comp;
        }
        left &= ~comp;
    }
    return comps;
}

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= uint32_t(1) << v;
        adj[v] |= uint32_t(1) << u;
    }
    return adj;
}

// Subsets of {0..n-1} with exactly k bits, ascending numeric order (which
// is reverse-lexicographic in vertex lists; we want lexicographically
// least vertex set first, i.e. smallest vertices chosen first).
// Enumerate combinations in lexicographic vertex order directly.
template <typename F>
bool for_each_combination(int n, int k, F&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return false;
    for (;;) {
        if (fn(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::optional<NotOneToughWitness> is_one_tough(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 24)
        throw std::invalid_argument("is_one_tough exhaustive bound is 24");
    auto adj = adjacency_masks(g);
    // ascending cardinality, lexicographically least witness first
    for (int k = 1; k < n; ++k) {
        std::optional<NotOneToughWitness> hit;
        for_each_combination(n, k, [&](const std::vector<int>& idx) {
            uint32_t s = 0;
            for (int v : idx) s |= uint32_t(1) << v;
            int omega = components_after_removal(adj, n, s);
            if (omega >= 2 && omega > k) {
                VertexSet set(n);
                for (int v : idx) set.insert(v);
                hit = NotOneToughWitness{std::move(set), omega};
                return true;
            }
            return false;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

Rational toughness(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 18) throw std::invalid_argument("toughness exhaustive bound is 18");
    if (!is_connected(g)) throw std::invalid_argument("toughness needs a connected graph");
    auto adj = adjacency_masks(g);
    bool complete = g.edge_count() == (long long)n * (n - 1) / 2;
    if (complete)
        throw std::invalid_argument("toughness undefined for complete graphs");
    std::optional<Rational> best;
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        int k = std::popcount(s);
        if (k == n) continue;
        int omega = components_after_removal(adj, n, s);
        if (omega < 2) continue;
        Rational r(k, omega);
        if (!best || r < *best) best = r;
    }
    return *best;  // non-complete connected graphs have a separating set
}

ToughnessReport hamiltonian_implies_tough_check(const Graph& g,
                                                const SolverOptions& opts) {
    HamVerdict v = find_hamiltonian_cycle(g, opts);
    bool tough = !is_one_tough(g).has_value();
    bool holds = v.outcome != HamVerdict::Outcome::Found || tough;
    return {v.outcome, tough, holds};
}

}  // namespace hamiltonica
