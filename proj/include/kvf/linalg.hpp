#pragma once

#include <stdexcept>
#include <vector>

#include "kvf/rational.hpp"

namespace kvf::linalg {

using RatVec = std::vector<Rat>;
using RatRows = std::vector<RatVec>;  // rectangular, row-major

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(RatRows& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = int(m.size()), cols = int(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int k = r; k < rows; ++k)
            if (!m[k][c].is_zero()) {
                piv = k;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        const Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int k = 0; k < rows; ++k) {
            if (k == r || m[k][c].is_zero()) continue;
            const Rat f = m[k][c];
            for (int j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of { x : M x = 0 }, returned as rows.
inline RatRows kernel_basis(RatRows m) {
    if (m.empty()) return {};
    const int cols = int(m[0].size());
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    RatRows basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = Rat(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            // row r reads x[pivots[r]] + sum coeff * x[free cols] = 0
            v[pivots[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve A x = b for square nonsingular A.
inline RatVec solve(RatRows A, RatVec b) {
    const int n = int(A.size());
    for (int i = 0; i < n; ++i) {
        if (int(A[i].size()) != n) throw std::invalid_argument("solve: matrix is not square");
        A[i].push_back(b[i]);
    }
    auto pivots = rref(A);
    if (int(pivots.size()) != n || pivots.back() != n - 1) {
        // Rank < n or the augmented column became a pivot.
        for (int c : pivots)
            if (c == n) throw std::invalid_argument("solve: inconsistent system");
        throw std::invalid_argument("solve: singular system");
    }
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = A[i][n];
    return x;
}

inline RatRows inverse(RatRows A) {
    const int n = int(A.size());
    for (int i = 0; i < n; ++i) {
        if (int(A[i].size()) != n) throw std::invalid_argument("inverse: matrix is not square");
        for (int j = 0; j < n; ++j) A[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    auto pivots = rref(A);
    if (int(pivots.size()) != n || pivots.back() != n - 1)
        throw std::invalid_argument("inverse: singular matrix");
    RatRows inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = A[i][n + j];
    return inv;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s(0);
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

inline RatVec matvec(const RatRows& A, const RatVec& x) {
    RatVec y(A.size(), Rat(0));
    for (size_t i = 0; i < A.size(); ++i) y[i] = dot(A[i], x);
    return y;
}

inline int rank(RatRows m) { return int(rref(m).size()); }

}  // namespace kvf::linalg
