#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hamiltonica {

// Fixed-universe bitset over vertices 0..n-1.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v) { words_[v >> 6] |= uint64_t(1) << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    bool is_subset_of(const VertexSet& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    int n_;
    std::vector<uint64_t> words_;
};

inline VertexSet make_vertex_set(int n, const std::vector<int>& vs) {
    VertexSet s(n);
    for (int v : vs) s.insert(v);
    return s;
}

}  // namespace hamiltonica
