#include "kvf/killing.hpp"

#include <cmath>
#include <stdexcept>

#include "kvf/eigen.hpp"

namespace kvf {

namespace {

template <class S>
Matrix<S> scale_entrywise(const HyperComplex<S>& q, const Matrix<S>& m) {
    Matrix<S> r(m.field, m.n);
    for (size_t k = 0; k < m.e.size(); ++k) r.e[k] = hc_mul(q, m.e[k]);
    return r;
}

double hc_abs(const HyperComplex<double>& v) {
    double s = 0;
    for (int k = 0; k < v.dim(); ++k) s += v.c[k] * v.c[k];
    return std::sqrt(s);
}

}  // namespace

std::optional<LengthCertificate> constant_length_test(const RatMatrix& U) {
    if (!U.is_skew_hermitian()) throw std::invalid_argument("field matrix must be skew-Hermitian");
    const RatMatrix S = U * U;
    const Rat s = S.at(0, 0).re();
    for (int i = 0; i < U.n; ++i)
        for (int j = 0; j < U.n; ++j) {
            const auto& v = S.at(i, j);
            if (i == j) {
                if (!v.is_real() || !(v.re() == s)) return std::nullopt;
            } else if (!v.is_zero()) {
                return std::nullopt;
            }
        }
    if (s.sgn() > 0) return std::nullopt;
    LengthCertificate cert;
    cert.c2 = -s;
    cert.c = std::sqrt(cert.c2.to_double());
    cert.residual = 0.0;
    cert.exact = true;
    cert.unit_group_member = (U * U.adjoint() == RatMatrix::identity(U.field, U.n));
    return cert;
}

std::optional<LengthCertificate> constant_length_test(const DMatrix& U, double tol) {
    DMatrix sym = U + U.adjoint();
    const double scale = std::max(1.0, frobenius_norm(U));
    if (frobenius_norm(sym) > tol * scale)
        throw std::invalid_argument("field matrix must be skew-Hermitian");
    const DMatrix S = U * U;
    double diag = 0;
    for (int i = 0; i < U.n; ++i) diag += S.at(i, i).c[0];
    diag /= U.n;
    const double s2 = scale * scale;
    for (int i = 0; i < U.n; ++i)
        for (int j = 0; j < U.n; ++j) {
            const auto& v = S.at(i, j);
            if (i == j) {
                if (std::abs(v.c[0] - diag) > tol * std::max(1.0, s2)) return std::nullopt;
                for (int k = 1; k < v.dim(); ++k)
                    if (std::abs(v.c[k]) > tol * std::max(1.0, s2)) return std::nullopt;
            } else if (hc_abs(v) > tol * std::max(1.0, s2)) {
                return std::nullopt;
            }
        }
    if (diag > tol) return std::nullopt;
    LengthCertificate cert;
    cert.c2 = Rat::from_double_exact(std::max(0.0, -diag));
    cert.c = std::sqrt(std::max(0.0, -diag));
    DMatrix R = S;
    for (int i = 0; i < U.n; ++i) R.at(i, i).c[0] -= diag;
    cert.residual = frobenius_norm(R);
    cert.exact = false;
    auto gid = U * U.adjoint() - DMatrix::identity(U.field, U.n);
    cert.unit_group_member = frobenius_norm(gid) < tol * std::max(1.0, s2);
    return cert;
}

namespace {

// Shared input validation; returns n (the block size).
template <class S>
int cw_check_shape(Field f, const std::vector<HyperComplex<S>>& v) {
    if (v.empty()) throw std::invalid_argument("tangent vector is empty");
    if (f == Field::O) throw std::invalid_argument("no matrix fields over the octonions");
    for (const auto& x : v)
        if (x.field != f) throw std::invalid_argument("tangent entries carry the wrong field tag");
    return int(v.size()) - 1;
}

}  // namespace

RatMatrix cw_field(Field f, const std::vector<HyperComplex<Rat>>& v) {
    const int n = cw_check_shape(f, v);
    const HyperComplex<Rat> u1 = v[0];
    if (!u1.is_imaginary())
        throw std::invalid_argument("v[0] must be purely imaginary (tangency at the base point)");
    if (f == Field::R && !u1.is_zero())
        throw std::invalid_argument("over R the corner component must vanish");
    if (f == Field::R && (n + 1) % 2 != 0)
        throw std::invalid_argument("over R constant-length fields need n+1 even");

    RatMatrix U(f, n + 1);
    U.at(0, 0) = u1;
    Rat u_norm2(0);
    bool u_zero = true;
    for (int k = 1; k <= n; ++k) {
        U.at(k, 0) = v[k];
        U.at(0, k) = -hc_conj(v[k]);
        u_norm2 += v[k].norm2();
        u_zero = u_zero && v[k].is_zero();
    }
    const Rat c2 = u1.norm2() + u_norm2;

    if (u_zero) {
        if (u1.is_zero()) return U;  // zero vector: the zero field
        // Diagonal completion with alternating entries of modulus |u1|.
        for (int k = 1; k <= n; ++k) U.at(k, k) = (k % 2 == 1) ? -u1 : u1;
        return U;
    }

    if (f == Field::R) {
        auto u_len = u_norm2.sqrt_exact();
        if (!u_len)
            throw std::invalid_argument(
                "exact construction over R needs |u| rational; use the numeric overload");
        const Rat c = *u_len;
        // Aligned completion diag(0, B, ..., B) with B the c-rotation block.
        RatMatrix Unn(Field::R, n);
        for (int b = 1; b + 1 < n; b += 2) {
            Unn.at(b, b + 1).c[0] = -c;
            Unn.at(b + 1, b).c[0] = c;
        }
        // Householder reflection taking e1 to w = u/|u| (it fixes the
        // orthogonal complement of span{e1, w}).
        std::vector<Rat> w(n);
        for (int k = 1; k <= n; ++k) w[k - 1] = v[k].re() / c;
        std::vector<Rat> h(n);
        h[0] = Rat(1) - w[0];
        for (int k = 1; k < n; ++k) h[k] = -w[k];
        Rat h2(0);
        for (const auto& x : h) h2 += x * x;
        RatMatrix R = RatMatrix::identity(Field::R, n);
        if (!h2.is_zero()) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) R.at(a, b).c[0] -= Rat(2) * h[a] * h[b] / h2;
        }
        RatMatrix N = R * Unn * R.adjoint();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) U.at(a + 1, b + 1) = N.at(a, b);
        return U;
    }

    if (f == Field::C) {
        // Rank-one closed form of the rotated diagonal completion:
        // N = -u1 u u*/|u|^2 + iC (Id - u u*/|u|^2); rational whenever C is.
        auto c_exact = c2.sqrt_exact();
        if (!c_exact)
            throw std::invalid_argument(
                "exact construction over C needs ||v|| rational; use the numeric overload");
        const HyperComplex<Rat> iC = *c_exact * HyperComplex<Rat>::unit(f, 1);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                HyperComplex<Rat> rank1 = hc_mul(v[a], hc_conj(v[b]));
                HyperComplex<Rat> entry =
                    (Rat(-1) / u_norm2) * hc_mul(u1 + iC, rank1);
                if (a == b) entry += iC;
                U.at(a, b) = entry;
            }
        return U;
    }

    // Quaternions: the exact path requires the aligned case (the rotated
    // completion is irrational in general).
    bool aligned = v[1].is_real();
    for (int k = 2; k <= n; ++k) aligned = aligned && v[k].is_zero();
    if (!aligned)
        throw std::invalid_argument(
            "exact construction over H needs an aligned tangent vector; use the numeric overload");
    auto c_exact = c2.sqrt_exact();
    if (!c_exact)
        throw std::invalid_argument(
            "exact construction over H needs ||v|| rational; use the numeric overload");
    U.at(1, 1) = -u1;
    const HyperComplex<Rat> iC = *c_exact * HyperComplex<Rat>::unit(f, 1);
    for (int k = 2; k <= n; ++k) U.at(k, k) = (k % 2 == 0) ? iC : -iC;
    return U;
}

namespace {

// Unitary with first column w (modified Gram-Schmidt completion; right
// coefficients keep quaternionic columns orthonormal).
DMatrix unitary_with_first_column(Field f, const std::vector<HyperComplex<double>>& w) {
    const int n = int(w.size());
    std::vector<std::vector<HyperComplex<double>>> cols;
    cols.push_back(w);
    for (int cand = 0; cand < n && int(cols.size()) < n; ++cand) {
        std::vector<HyperComplex<double>> v(n, HyperComplex<double>(f));
        v[cand] = HyperComplex<double>::one(f);
        for (const auto& c : cols) {
            HyperComplex<double> coef(f);  // <c, v> = sum conj(c_i) v_i
            for (int i = 0; i < n; ++i) coef += hc_mul(hc_conj(c[i]), v[i]);
            for (int i = 0; i < n; ++i) v[i] -= hc_mul(c[i], coef);
        }
        double norm = 0;
        for (const auto& x : v) norm += x.norm2();
        norm = std::sqrt(norm);
        if (norm < 1e-8) continue;
        for (auto& x : v) x = (1.0 / norm) * x;
        cols.push_back(std::move(v));
    }
    if (int(cols.size()) != n) throw std::runtime_error("failed to complete a unitary frame");
    DMatrix g(f, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) g.at(i, j) = cols[j][i];
    return g;
}

}  // namespace

DMatrix cw_field(Field f, const std::vector<HyperComplex<double>>& v, double tol) {
    const int n = cw_check_shape(f, v);
    HyperComplex<double> u1 = v[0];
    if (std::abs(u1.re()) > tol)
        throw std::invalid_argument("v[0] must be purely imaginary (tangency at the base point)");
    u1.c[0] = 0.0;
    if (f == Field::R && hc_abs(u1) > tol)
        throw std::invalid_argument("over R the corner component must vanish");
    if (f == Field::R && (n + 1) % 2 != 0)
        throw std::invalid_argument("over R constant-length fields need n+1 even");

    DMatrix U(f, n + 1);
    U.at(0, 0) = u1;
    double u_norm2 = 0;
    for (int k = 1; k <= n; ++k) {
        U.at(k, 0) = v[k];
        U.at(0, k) = -hc_conj(v[k]);
        u_norm2 += v[k].norm2();
    }
    const double c2 = u1.norm2() + u_norm2;
    const double C = std::sqrt(c2);
    const double u_len = std::sqrt(u_norm2);

    if (u_len <= tol) {
        if (C <= tol) return U;
        for (int k = 1; k <= n; ++k) {
            auto d = u1;
            if (k % 2 == 1) d = -d;
            U.at(k, k) = d;
        }
        return U;
    }

    if (f == Field::R) {
        DMatrix Unn(Field::R, n);
        for (int b = 1; b + 1 < n; b += 2) {
            Unn.at(b, b + 1).c[0] = -u_len;
            Unn.at(b + 1, b).c[0] = u_len;
        }
        std::vector<double> w(n), h(n);
        for (int k = 1; k <= n; ++k) w[k - 1] = v[k].c[0] / u_len;
        h[0] = 1.0 - w[0];
        for (int k = 1; k < n; ++k) h[k] = -w[k];
        double h2 = 0;
        for (double x : h) h2 += x * x;
        DMatrix R = DMatrix::identity(Field::R, n);
        if (h2 > tol)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) R.at(a, b).c[0] -= 2.0 * h[a] * h[b] / h2;
        DMatrix N = R * Unn * R.adjoint();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) U.at(a + 1, b + 1) = N.at(a, b);
        return U;
    }

    // Aligned diagonal completion rotated onto u by a unitary frame.
    DMatrix Unn(f, n);
    Unn.at(0, 0) = -u1;
    Unn.at(0, 0).c[0] = 0.0;
    for (int k = 1; k < n; ++k) {
        auto d = C * HyperComplex<double>::unit(f, 1);
        if (k % 2 == 1) d = -d;
        Unn.at(k, k) = d;
    }
    std::vector<HyperComplex<double>> w(n);
    for (int k = 1; k <= n; ++k) w[k - 1] = (1.0 / u_len) * v[k];
    DMatrix g = unitary_with_first_column(f, w);
    DMatrix N = g * Unn * g.adjoint();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) U.at(a + 1, b + 1) = N.at(a, b);
    // The first column must reproduce v bit for bit.
    for (int k = 1; k <= n; ++k) {
        U.at(k, 0) = v[k];
        U.at(0, k) = -hc_conj(v[k]);
    }
    return U;
}

RatMatrix su_delta_field(const std::vector<HyperComplex<Rat>>& v) {
    const int n = cw_check_shape(Field::C, v);
    const HyperComplex<Rat> u1 = v[0];
    if (!u1.is_imaginary()) throw std::invalid_argument("v[0] must be purely imaginary");
    RatMatrix U(Field::C, n + 1);
    U.at(0, 0) = u1;
    Rat u_norm2(0);
    for (int k = 1; k <= n; ++k) {
        U.at(k, 0) = v[k];
        U.at(0, k) = -hc_conj(v[k]);
        u_norm2 += v[k].norm2();
    }
    if (u_norm2.is_zero()) {
        U.at(1, 1) = -u1;  // B(u1) completion
        return U;
    }
    // Ad(g)(B(u1)) = -u1 u u*/|u|^2 for any unitary g with g e1 = u/|u|.
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            U.at(a, b) = (Rat(-1) / u_norm2) * hc_mul(u1, hc_mul(v[a], hc_conj(v[b])));
    return U;
}

DMatrix su_delta_field(const std::vector<HyperComplex<double>>& v, double tol) {
    const int n = cw_check_shape(Field::C, v);
    HyperComplex<double> u1 = v[0];
    if (std::abs(u1.re()) > tol) throw std::invalid_argument("v[0] must be purely imaginary");
    u1.c[0] = 0.0;
    DMatrix U(Field::C, n + 1);
    U.at(0, 0) = u1;
    double u_norm2 = 0;
    for (int k = 1; k <= n; ++k) {
        U.at(k, 0) = v[k];
        U.at(0, k) = -hc_conj(v[k]);
        u_norm2 += v[k].norm2();
    }
    if (u_norm2 <= tol * tol) {
        if (n >= 1) U.at(1, 1) = -u1;
        return U;
    }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            U.at(a, b) = (-1.0 / u_norm2) * hc_mul(u1, hc_mul(v[a], hc_conj(v[b])));
    return U;
}

DeltaResult round_delta_test(const RatMatrix& U) {
    if (!U.is_skew_hermitian()) throw std::invalid_argument("field matrix must be skew-Hermitian");
    DeltaResult out;
    const RatMatrix S = -(U * U);
    const int n = U.n - 1;
    for (int j = 1; j <= n; ++j)
        if (!S.at(0, j).is_zero() || !S.at(j, 0).is_zero()) {
            out.accepted = false;
            out.reason = "-U^2 is not block diagonal at the base point";
            return out;
        }
    if (!S.at(0, 0).is_real()) throw std::logic_error("corner of -U^2 is not real");
    const Rat lambda2 = S.at(0, 0).re();
    out.lambda = std::sqrt(std::max(0.0, lambda2.to_double()));
    // M = lambda^2 Id - B, PSD checked exactly on the realification.
    RatMatrix M(U.field, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            M.at(a, b) = -S.at(a + 1, b + 1);
            if (a == b) M.at(a, b).c[0] += lambda2;
        }
    const RatMatrix MR = realify(M);
    out.exact_psd = psd_exact(MR);
    auto w = sym_eigvals(to_double(MR), 1e-6);
    out.psd_margin = w.empty() ? 0.0 : w.front();
    out.accepted = out.exact_psd;
    if (!out.accepted) out.reason = "spectrum of B exceeds the corner eigenvalue";
    return out;
}

DeltaResult round_delta_test(const DMatrix& U, double tol) {
    DMatrix sym = U + U.adjoint();
    const double scale = std::max(1.0, frobenius_norm(U));
    if (frobenius_norm(sym) > tol * scale)
        throw std::invalid_argument("field matrix must be skew-Hermitian");
    DeltaResult out;
    const DMatrix S = -(U * U);
    const int n = U.n - 1;
    const double s2 = std::max(1.0, scale * scale);
    for (int j = 1; j <= n; ++j)
        if (hc_abs(S.at(0, j)) > tol * s2 || hc_abs(S.at(j, 0)) > tol * s2) {
            out.accepted = false;
            out.reason = "-U^2 is not block diagonal at the base point";
            return out;
        }
    const double lambda2 = S.at(0, 0).c[0];
    out.lambda = std::sqrt(std::max(0.0, lambda2));
    DMatrix M(U.field, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            M.at(a, b) = -S.at(a + 1, b + 1);
            if (a == b) M.at(a, b).c[0] += lambda2;
        }
    auto w = sym_eigvals(realify(M), 1e-6);
    out.psd_margin = w.empty() ? 0.0 : w.front();
    out.exact_psd = false;
    out.accepted = out.psd_margin >= -tol * s2;
    if (!out.accepted) out.reason = "spectrum of B exceeds the corner eigenvalue";
    return out;
}

OrbitLabel orbit_label_u(const RatMatrix& U) {
    if (U.field != Field::C) throw std::invalid_argument("orbit labels live in u(n+1)");
    auto cert = constant_length_test(U);
    if (!cert || !(cert->c2 == Rat(1)))
        throw std::invalid_argument("orbit labels require a unit constant-length field");
    const int m = U.n;
    // trace(U) = i (2l - m); exact.
    const auto tr = U.trace();
    const Rat l2 = (tr.c[1] + Rat(m)) / Rat(2);
    OrbitLabel out;
    out.l = int((long long)(l2.num() / l2.den()));
    if (!(Rat(out.l) == l2)) throw std::logic_error("eigenvalue multiplicity is not integral");
    out.alpha = Rat(2 * out.l, m) - Rat(1);
    return out;
}

OrbitLabel orbit_label_u(const DMatrix& U, double tol) {
    if (U.field != Field::C) throw std::invalid_argument("orbit labels live in u(n+1)");
    auto cert = constant_length_test(U, tol);
    if (!cert || std::abs(cert->c - 1.0) > tol)
        throw std::invalid_argument("orbit labels require a unit constant-length field");
    // Realified spectrum of the Hermitian matrix iU: eigenvalue -1 with
    // multiplicity 2l.
    DMatrix iU(U.field, U.n);
    auto i_unit = HyperComplex<double>::unit(Field::C, 1);
    for (size_t k = 0; k < U.e.size(); ++k) iU.e[k] = hc_mul(i_unit, U.e[k]);
    auto w = sym_eigvals(realify(iU), 1e-6);
    int count = 0;
    for (double v : w) count += v < 0 ? 1 : 0;
    OrbitLabel out;
    out.l = count / 2;
    out.alpha = Rat(2 * out.l, U.n) - Rat(1);
    return out;
}

}  // namespace kvf
