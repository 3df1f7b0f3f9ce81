#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "hamiltonica/factors.hpp"

namespace hamiltonica {

namespace {

// Frontier slot states for the strip DP.  A slot holds the newest cell of
// its row still able to receive edges from unprocessed cells.
//   ABSENT  - no cell yet (first column)
//   FRESH   - degree 0, a single-vertex partial path
//   INNER   - degree 2, interior of some path
//   HALF    - degree 1, the path's other end already closed off-frontier
//   PAIR+p  - degree 1, the path's other end is frontier slot p
constexpr int8_t ABSENT = 0, FRESH = 1, INNER = 2, HALF = 3, PAIR = 4;

using State = std::array<int8_t, 4>;

struct StripDP {
    int rows, cols;
    const EndpointConstraint& c;
    std::map<State, long long> cur;

    int vid(int r, int col) const { return r * cols + col; }
    bool endpoint_ok(int v) const {
        return c.allowed.contains(v) && !c.forbidden.contains(v);
    }

    // Close the open end sitting in slot `r` of `st` (its cell leaves the
    // frontier with degree 1).  Returns false when that completes nothing
    // valid; `st` is updated in place.
    static bool close_end(State& st, int r) {
        int8_t s = st[r];
        if (s == HALF) return true;  // both ends now closed: path complete
        if (s >= PAIR) {
            st[s - PAIR] = HALF;
            return true;
        }
        return false;  // FRESH has degree 0 here; caller rejects separately
    }

    // Connect frontier cells x and y (each must currently have degree <=1).
    // Returns false on a premature cycle or degree overflow; interior
    // checks are the caller's job via the out parameters.
    static bool connect(State& st, int x, int y, bool& x_inner, bool& y_inner) {
        int8_t sx = st[x], sy = st[y];
        if (sx == INNER || sy == INNER) return false;
        if (sx >= PAIR && sx - PAIR == y) return false;  // closes a cycle
        // other ends before the merge
        int ox = (sx == FRESH) ? x : (sx == HALF ? -1 : sx - PAIR);
        int oy = (sy == FRESH) ? y : (sy == HALF ? -1 : sy - PAIR);
        x_inner = (sx != FRESH);
        y_inner = (sy != FRESH);
        if (x_inner) st[x] = INNER;
        if (y_inner) st[y] = INNER;
        if (ox >= 0 && oy >= 0) {
            st[ox] = int8_t(PAIR + oy);
            st[oy] = int8_t(PAIR + ox);
        } else if (ox >= 0) {
            st[ox] = HALF;
        } else if (oy >= 0) {
            st[oy] = HALF;
        }
        // both ends closed: complete path; nothing to record
        return true;
    }

    long long run() {
        cur.clear();
        State init;
        init.fill(ABSENT);
        cur[init] = 1;
        for (int col = 0; col < cols; ++col)
            for (int r = 0; r < rows; ++r) step(r, col);
        // Flush the last column: every slot leaves the frontier.
        long long total = 0;
        for (auto& [st, cnt] : cur) {
            State s = st;
            bool ok = true;
            for (int r = 0; r < rows && ok; ++r) {
                int8_t v = s[r];
                if (v == FRESH) ok = false;  // stranded single vertex
                else if (v == INNER) continue;
                else {
                    if (!endpoint_ok(vid(r, cols - 1))) ok = false;
                    else ok = close_end(s, r);
                }
            }
            if (ok) total += cnt;
        }
        return total;
    }

    void step(int r, int col) {
        std::map<State, long long> next;
        for (const auto& [st, cnt] : cur) {
            for (int el = 0; el <= (col > 0 ? 1 : 0); ++el)
                for (int eu = 0; eu <= (r > 0 ? 1 : 0); ++eu)
                    transition(st, cnt, r, col, el, eu, next);
        }
        cur = std::move(next);
    }

    void transition(State st, long long cnt, int r, int col, int el, int eu,
                    std::map<State, long long>& next) {
        // 1. retire the left neighbor (r, col-1), currently in slot r
        if (col > 0) {
            int old_v = vid(r, col - 1);
            int8_t s = st[r];
            int old_deg = (s == FRESH) ? 0 : (s == INNER ? 2 : 1);
            int fin = old_deg + el;
            if (fin == 0 || fin > 2) return;
            if (fin == 1) {
                if (!endpoint_ok(old_v)) return;
                if (el) {
                    // FRESH cell closing toward the new cell: the new cell
                    // becomes the path's open end (handled below).
                } else if (!close_end(st, r)) {
                    return;
                }
            } else {  // fin == 2: interior
                if (c.required.contains(old_v)) return;
                // el == 1 with s in {HALF, PAIR}: the open end migrates to
                // the new cell (handled below); s == INNER needs el == 0.
                if (s == INNER && el) return;
            }
            // install the new cell in slot r, linked per el
            if (!el) {
                st[r] = FRESH;
            } else if (s == FRESH) {
                // old is a closed endpoint, new cell is the open end
                st[r] = HALF;
            } else if (s == HALF) {
                st[r] = HALF;
            } else {  // PAIR
                int p = s - PAIR;
                st[r] = int8_t(PAIR + p);
                st[p] = int8_t(PAIR + r);
            }
        } else {
            st[r] = FRESH;
        }
        // 2. optional edge up to (r-1, col) in slot r-1
        if (eu) {
            bool x_inner = false, y_inner = false;
            if (!connect(st, r, r - 1, x_inner, y_inner)) return;
            if (x_inner && c.required.contains(vid(r, col))) return;
            if (y_inner && c.required.contains(vid(r - 1, col))) return;
        }
        next[st] += cnt;
    }
};

}  // namespace

long long count_path_covers_strip(int rows, int cols,
                                  const EndpointConstraint& c) {
    if (rows < 2 || rows > 4)
        throw std::invalid_argument("strip DP supports 2..4 rows");
    if (cols < 1) throw std::invalid_argument("need cols >= 1");
    c.check_well_formed(rows * cols);
    if (!c.pairing.empty())
        throw std::invalid_argument("pairing constraints are outside the strip DP");
    StripDP dp{rows, cols, c};
    return dp.run();
}

}  // namespace hamiltonica
