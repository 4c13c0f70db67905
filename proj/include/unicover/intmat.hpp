#pragma once

// Exact integer matrix routines used for abelianization facts: Smith normal
// form diagonal (rank + torsion) and row-lattice membership (Hermite-style
// elimination). Sizes here are small; entries are guarded against overflow.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace unicover {

struct IntOverflow : std::runtime_error {
    IntOverflow() : std::runtime_error("integer matrix entry overflow") {}
};

namespace detail {

inline long long checked(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) / 4 || v < static_cast<__int128>(INT64_MIN) / 4)
        throw IntOverflow();
    return static_cast<long long>(v);
}

} // namespace detail

using IntMatrix = std::vector<std::vector<long long>>;

// Diagonal of the Smith normal form (nonnegative, divisibility ordered).
inline std::vector<long long> smithDiagonal(IntMatrix a) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<long long> diag;
    size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // pick the entry with smallest absolute value as pivot
        size_t pr = rows, pc = cols;
        long long best = 0;
        for (size_t r = r0; r < rows; ++r)
            for (size_t c = c0; c < cols; ++c) {
                long long v = a[r][c];
                if (v != 0 && (best == 0 || std::llabs(v) < std::llabs(best))) {
                    best = v; pr = r; pc = c;
                }
            }
        if (best == 0) break;
        std::swap(a[r0], a[pr]);
        for (size_t r = 0; r < rows; ++r) std::swap(a[r][c0], a[r][pc]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t r = r0 + 1; r < rows; ++r) {
                if (a[r][c0] == 0) continue;
                long long q = a[r][c0] / a[r0][c0];
                for (size_t c = c0; c < cols; ++c)
                    a[r][c] = detail::checked(static_cast<__int128>(a[r][c]) -
                                              static_cast<__int128>(q) * a[r0][c]);
                if (a[r][c0] != 0) { std::swap(a[r0], a[r]); dirty = true; }
            }
            for (size_t c = c0 + 1; c < cols; ++c) {
                if (a[r0][c] == 0) continue;
                long long q = a[r0][c] / a[r0][c0];
                for (size_t r = r0; r < rows; ++r)
                    a[r][c] = detail::checked(static_cast<__int128>(a[r][c]) -
                                              static_cast<__int128>(q) * a[r][c0]);
                if (a[r0][c] != 0) {
                    for (size_t r = r0; r < rows; ++r) std::swap(a[r][c0], a[r][c]);
                    dirty = true;
                }
            }
        }
        // pivot must divide the rest of the block for true SNF divisibility
        long long p = std::llabs(a[r0][c0]);
        bool fixup = false;
        for (size_t r = r0 + 1; r < rows && !fixup; ++r)
            for (size_t c = c0 + 1; c < cols && !fixup; ++c)
                if (a[r][c] % p != 0) {
                    for (size_t cc = c0; cc < cols; ++cc)
                        a[r0][cc] = detail::checked(static_cast<__int128>(a[r0][cc]) + a[r][cc]);
                    fixup = true;
                }
        if (fixup) continue;   // redo the block with the merged row
        diag.push_back(p);
        ++r0; ++c0;
    }
    return diag;
}

// rank over Q = number of nonzero SNF diagonal entries
inline int latticeRank(const IntMatrix& a) {
    auto d = smithDiagonal(a);
    int r = 0;
    for (long long v : d)
        if (v != 0) ++r;
    return r;
}

// Row echelon basis of the integer row lattice (in place, Euclidean).
inline IntMatrix rowLatticeBasis(IntMatrix a) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        // Euclidean shrink within the column
        while (true) {
            size_t pr = rows;
            long long best = 0;
            for (size_t r = rank; r < rows; ++r)
                if (a[r][c] != 0 && (best == 0 || std::llabs(a[r][c]) < std::llabs(best))) {
                    best = a[r][c]; pr = r;
                }
            if (best == 0) break;
            std::swap(a[rank], a[pr]);
            bool others = false;
            for (size_t r = rank + 1; r < rows; ++r) {
                if (a[r][c] == 0) continue;
                long long q = a[r][c] / a[rank][c];
                for (size_t cc = 0; cc < cols; ++cc)
                    a[r][cc] = detail::checked(static_cast<__int128>(a[r][cc]) -
                                               static_cast<__int128>(q) * a[rank][cc]);
                if (a[r][c] != 0) others = true;
            }
            if (!others) { ++rank; break; }
        }
    }
    a.resize(rank);
    return a;
}

// true when v lies in the integer row span of basis (as from rowLatticeBasis)
inline bool inRowLattice(const IntMatrix& basis, std::vector<long long> v) {
    for (const auto& row : basis) {
        size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size()) continue;
        if (v[c] == 0) continue;
        if (v[c] % row[c] != 0) return false;
        long long q = v[c] / row[c];
        for (size_t cc = c; cc < v.size(); ++cc)
            v[cc] = detail::checked(static_cast<__int128>(v[cc]) -
                                    static_cast<__int128>(q) * row[cc]);
    }
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

} // namespace unicover
