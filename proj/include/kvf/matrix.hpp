#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kvf/hypercomplex.hpp"

namespace kvf {

// Dense square matrix over R/C/H (octonions are non-associative, so no
// matrices over O). Row-major; entries act on column vectors from the left.
template <class S>
struct Matrix {
    Field field = Field::R;
    int n = 0;
    std::vector<HyperComplex<S>> e;

    Matrix() = default;
    Matrix(Field f, int size) : field(f), n(size), e(size_t(size) * size, HyperComplex<S>(f)) {
        if (f == Field::O) throw std::invalid_argument("no matrices over the octonions");
        if (size <= 0) throw std::invalid_argument("matrix size must be positive");
    }

    static Matrix zero(Field f, int size) { return Matrix(f, size); }
    static Matrix identity(Field f, int size) {
        Matrix m(f, size);
        for (int i = 0; i < size; ++i) m.at(i, i) = HyperComplex<S>::one(f);
        return m;
    }

    HyperComplex<S>& at(int i, int j) { return e[size_t(i) * n + j]; }
    const HyperComplex<S>& at(int i, int j) const { return e[size_t(i) * n + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r(a.field, a.n);
        for (size_t k = 0; k < r.e.size(); ++k) r.e[k] = a.e[k] + b.e[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r(a.field, a.n);
        for (size_t k = 0; k < r.e.size(); ++k) r.e[k] = a.e[k] - b.e[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r(field, n);
        for (size_t k = 0; k < e.size(); ++k) r.e[k] = -e[k];
        return r;
    }
    friend Matrix operator*(const S& s, const Matrix& a) {
        Matrix r(a.field, a.n);
        for (size_t k = 0; k < r.e.size(); ++k) r.e[k] = s * a.e[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r(a.field, a.n);
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < a.n; ++j) {
                HyperComplex<S> acc(a.field);
                for (int k = 0; k < a.n; ++k) acc += hc_mul(a.at(i, k), b.at(k, j));
                r.at(i, j) = acc;
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field == b.field && a.n == b.n && a.e == b.e;
    }

    // Conjugate transpose U* = conj(U)^T.
    Matrix adjoint() const {
        Matrix r(field, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(i, j) = hc_conj(at(j, i));
        return r;
    }

    HyperComplex<S> trace() const {
        HyperComplex<S> t(field);
        for (int i = 0; i < n; ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : e)
            if (!v.is_zero()) return false;
        return true;
    }

    // U + U* = 0, decided exactly on the entries.
    bool is_skew_hermitian() const {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (!(at(i, j) + hc_conj(at(j, i))).is_zero()) return false;
        return true;
    }

    // Apply to a column vector.
    std::vector<HyperComplex<S>> apply(const std::vector<HyperComplex<S>>& x) const {
        if (int(x.size()) != n) throw std::invalid_argument("matrix/vector size mismatch");
        std::vector<HyperComplex<S>> y(n, HyperComplex<S>(field));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) y[i] += hc_mul(at(i, j), x[j]);
        return y;
    }

    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.field != b.field) throw std::invalid_argument("matrix field tag mismatch");
        if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
    }
};

using RatMatrix = Matrix<Rat>;
using DMatrix = Matrix<double>;

// Ad(G)-invariant inner product <U,V> = (1/2) Re trace(U V*).
template <class S>
S inner(const Matrix<S>& U, const Matrix<S>& V) {
    Matrix<S>::check_same(U, V);
    S acc = detail::scalar_zero<S>();
    for (int i = 0; i < U.n; ++i)
        for (int j = 0; j < U.n; ++j) {
            // Re(U_ij * conj(V_ij)) = sum of componentwise products.
            const auto& a = U.at(i, j);
            const auto& b = V.at(i, j);
            for (int k = 0; k < a.dim(); ++k) acc += a.c[k] * b.c[k];
        }
    return acc / S(2);
}

template <class S>
Matrix<S> bracket(const Matrix<S>& U, const Matrix<S>& V) {
    if (U.field == Field::O) throw std::invalid_argument("bracket undefined over octonions");
    return U * V - V * U;
}

namespace detail {
// Left-multiplication matrix of a scalar of F on F viewed as R^d, column
// convention: column k holds q * e_k.
template <class S>
void left_mult_block(const HyperComplex<S>& q, std::vector<S>& block) {
    const int d = q.dim();
    block.assign(size_t(d) * d, scalar_zero<S>());
    for (int k = 0; k < d; ++k) {
        HyperComplex<S> col = hc_mul(q, HyperComplex<S>::unit(q.field, k));
        for (int r = 0; r < d; ++r) block[size_t(r) * d + k] = col.c[r];
    }
}
}  // namespace detail

// Standard realification: the (n*d) x (n*d) real matrix of U acting on the
// realified column space. Skew-Hermitian maps to skew-symmetric and
// realify(UV) = realify(U) realify(V).
template <class S>
Matrix<S> realify(const Matrix<S>& U) {
    if (U.field == Field::R) return U;
    const int d = field_dim(U.field);
    Matrix<S> R(Field::R, U.n * d);
    std::vector<S> block;
    for (int i = 0; i < U.n; ++i)
        for (int j = 0; j < U.n; ++j) {
            detail::left_mult_block(U.at(i, j), block);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    R.at(i * d + r, j * d + c).c[0] = block[size_t(r) * d + c];
        }
    return R;
}

// Read a matrix over `f` back out of its realification.
template <class S>
Matrix<S> unrealify(const Matrix<S>& R, Field f, int n) {
    const int d = field_dim(f);
    if (R.field != Field::R || R.n != n * d) throw std::invalid_argument("unrealify shape mismatch");
    Matrix<S> U(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            HyperComplex<S> q(f);
            for (int r = 0; r < d; ++r) q.c[r] = R.at(i * d + r, j * d).c[0];
            U.at(i, j) = q;
        }
    return U;
}

inline DMatrix to_double(const RatMatrix& m) {
    DMatrix r(m.field, m.n);
    for (size_t k = 0; k < m.e.size(); ++k) r.e[k] = hc_to_double(m.e[k]);
    return r;
}

inline double frobenius_norm(const DMatrix& m) {
    double s = 0;
    for (const auto& v : m.e)
        for (int k = 0; k < v.dim(); ++k) s += v.c[k] * v.c[k];
    return std::sqrt(s);
}

inline double max_abs_entry(const DMatrix& m) {
    double s = 0;
    for (const auto& v : m.e)
        for (int k = 0; k < v.dim(); ++k) s = std::max(s, std::abs(v.c[k]));
    return s;
}

}  // namespace kvf
