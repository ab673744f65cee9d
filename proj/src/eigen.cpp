#include "kvf/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kvf {

namespace {

void check_real(const DMatrix& S) {
    if (S.field != Field::R) throw std::invalid_argument("expected a real matrix");
}

double sym_defect(const DMatrix& S) {
    double d = 0;
    for (int i = 0; i < S.n; ++i)
        for (int j = i + 1; j < S.n; ++j)
            d = std::max(d, std::abs(S.at(i, j).c[0] - S.at(j, i).c[0]));
    return d;
}

// Cyclic Jacobi on a dense symmetric matrix; rotates V along if nonnull.
void jacobi(std::vector<double>& a, int n, std::vector<double>* v) {
    auto A = [&](int i, int j) -> double& { return a[size_t(i) * n + j]; };
    if (v) {
        v->assign(size_t(n) * n, 0.0);
        for (int i = 0; i < n; ++i) (*v)[size_t(i) * n + i] = 1.0;
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
        if (off < 1e-28 * std::max(1.0, double(n))) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                const double app = A(p, p), aqq = A(q, q);
                if (std::abs(apq) < 1e-300) {
                    A(p, q) = A(q, p) = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                if (v)
                    for (int k = 0; k < n; ++k) {
                        double& vkp = (*v)[size_t(k) * n + p];
                        double& vkq = (*v)[size_t(k) * n + q];
                        const double tp = vkp, tq = vkq;
                        vkp = c * tp - s * tq;
                        vkq = s * tp + c * tq;
                    }
            }
    }
}

}  // namespace

void sym_eig(const DMatrix& S, std::vector<double>& w, DMatrix& V, double sym_tol) {
    check_real(S);
    if (sym_defect(S) > sym_tol) throw std::invalid_argument("matrix is not symmetric");
    const int n = S.n;
    std::vector<double> a(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[size_t(i) * n + j] = 0.5 * (S.at(i, j).c[0] + S.at(j, i).c[0]);
    std::vector<double> vec;
    jacobi(a, n, &vec);
    std::vector<std::pair<double, int>> order(n);
    for (int i = 0; i < n; ++i) order[i] = {a[size_t(i) * n + i], i};
    std::sort(order.begin(), order.end());
    w.resize(n);
    V = DMatrix(Field::R, n);
    for (int k = 0; k < n; ++k) {
        w[k] = order[k].first;
        for (int r = 0; r < n; ++r) V.at(r, k).c[0] = vec[size_t(r) * n + order[k].second];
    }
}

std::vector<double> sym_eigvals(const DMatrix& S, double sym_tol) {
    check_real(S);
    if (sym_defect(S) > sym_tol) throw std::invalid_argument("matrix is not symmetric");
    const int n = S.n;
    std::vector<double> a(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[size_t(i) * n + j] = 0.5 * (S.at(i, j).c[0] + S.at(j, i).c[0]);
    jacobi(a, n, nullptr);
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = a[size_t(i) * n + i];
    std::sort(w.begin(), w.end());
    return w;
}

DMatrix spd_inverse(const DMatrix& A, double cond_limit) {
    std::vector<double> w;
    DMatrix V(Field::R, A.n);
    sym_eig(A, w, V, 1e-9);
    const double lo = w.front(), hi = w.back();
    if (lo <= 0) throw std::invalid_argument("matrix is not positive definite");
    if (hi / lo > cond_limit) throw std::invalid_argument("matrix too ill-conditioned to invert");
    DMatrix R(Field::R, A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            double s = 0;
            for (int k = 0; k < A.n; ++k) s += V.at(i, k).c[0] * V.at(j, k).c[0] / w[k];
            R.at(i, j).c[0] = s;
        }
    return R;
}

bool psd_exact(const RatMatrix& S) {
    if (S.field != Field::R) throw std::invalid_argument("psd_exact expects a real matrix");
    const int n = S.n;
    std::vector<Rat> a(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[size_t(i) * n + j] = S.at(i, j).c[0];
            if (!(S.at(i, j).c[0] == S.at(j, i).c[0]))
                throw std::invalid_argument("psd_exact expects a symmetric matrix");
        }
    auto A = [&](int i, int j) -> Rat& { return a[size_t(i) * n + j]; };
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    // Diagonal-pivoted elimination: PSD iff every pivot is nonnegative and a
    // zero pivot has a zero row.
    for (int step = 0; step < n; ++step) {
        int best = step;
        for (int k = step + 1; k < n; ++k)
            if (A(idx[k], idx[k]) > A(idx[best], idx[best])) best = k;
        std::swap(idx[step], idx[best]);
        const int p = idx[step];
        const Rat piv = A(p, p);
        if (piv.is_negative()) return false;
        if (piv.is_zero()) {
            // Remaining diagonal is <= 0; the block must vanish entirely.
            for (int r = step; r < n; ++r)
                for (int c = step; c < n; ++c)
                    if (!A(idx[r], idx[c]).is_zero()) return false;
            return true;
        }
        for (int r = step + 1; r < n; ++r) {
            const Rat f = A(idx[r], p) / piv;
            if (f.is_zero()) continue;
            for (int c = step + 1; c < n; ++c) A(idx[r], idx[c]) -= f * A(p, idx[c]);
        }
    }
    return true;
}

namespace {

DMatrix real_mul(const DMatrix& a, const DMatrix& b) { return a * b; }

// Solve A X = B for real square A (partial pivoting), X overwrites B.
DMatrix lu_solve(DMatrix A, DMatrix B) {
    const int n = A.n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(A.at(r, col).c[0]) > std::abs(A.at(piv, col).c[0])) piv = r;
        if (piv != col)
            for (int c = 0; c < n; ++c) {
                std::swap(A.at(col, c), A.at(piv, c));
                std::swap(B.at(col, c), B.at(piv, c));
            }
        const double d = A.at(col, col).c[0];
        if (d == 0.0) throw std::runtime_error("singular matrix in exp solve");
        for (int r = col + 1; r < n; ++r) {
            const double f = A.at(r, col).c[0] / d;
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) A.at(r, c).c[0] -= f * A.at(col, c).c[0];
            for (int c = 0; c < n; ++c) B.at(r, c).c[0] -= f * B.at(col, c).c[0];
        }
    }
    for (int col = n - 1; col >= 0; --col) {
        const double d = A.at(col, col).c[0];
        for (int c = 0; c < n; ++c) {
            double s = B.at(col, c).c[0];
            for (int k = col + 1; k < n; ++k) s -= A.at(col, k).c[0] * B.at(k, c).c[0];
            B.at(col, c).c[0] = s / d;
        }
    }
    return B;
}

double norm1(const DMatrix& a) {
    double best = 0;
    for (int j = 0; j < a.n; ++j) {
        double col = 0;
        for (int i = 0; i < a.n; ++i) col += std::abs(a.at(i, j).c[0]);
        best = std::max(best, col);
    }
    return best;
}

DMatrix real_exp(const DMatrix& A0) {
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
    DMatrix A = A0;
    int squarings = 0;
    const double nrm = norm1(A);
    if (nrm > 5.371920351148152) {
        squarings = std::max(0, int(std::ceil(std::log2(nrm / 5.371920351148152))));
        const double scale = std::ldexp(1.0, -squarings);
        for (auto& v : A.e) v.c[0] *= scale;
    }
    const int n = A.n;
    const DMatrix I = DMatrix::identity(Field::R, n);
    const DMatrix A2 = real_mul(A, A);
    const DMatrix A4 = real_mul(A2, A2);
    const DMatrix A6 = real_mul(A2, A4);
    auto axpy = [&](double c, const DMatrix& M, DMatrix& acc) {
        for (size_t k = 0; k < acc.e.size(); ++k) acc.e[k].c[0] += c * M.e[k].c[0];
    };
    DMatrix W1(Field::R, n), W2(Field::R, n);
    axpy(b[13], A6, W1);
    axpy(b[11], A4, W1);
    axpy(b[9], A2, W1);
    W1 = real_mul(A6, W1);
    axpy(b[7], A6, W1);
    axpy(b[5], A4, W1);
    axpy(b[3], A2, W1);
    axpy(b[1], I, W1);
    DMatrix U = real_mul(A, W1);
    axpy(b[12], A6, W2);
    axpy(b[10], A4, W2);
    axpy(b[8], A2, W2);
    W2 = real_mul(A6, W2);
    axpy(b[6], A6, W2);
    axpy(b[4], A4, W2);
    axpy(b[2], A2, W2);
    axpy(b[0], I, W2);
    DMatrix R = lu_solve(W2 - U, W2 + U);
    for (int s = 0; s < squarings; ++s) R = real_mul(R, R);
    return R;
}

}  // namespace

DMatrix matrix_exp(const DMatrix& A) {
    if (A.field == Field::R) return real_exp(A);
    return unrealify(real_exp(realify(A)), A.field, A.n);
}

}  // namespace kvf
