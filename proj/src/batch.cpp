#include "kvf/batch.hpp"

#include <cmath>
#include <stdexcept>

#include "kvf/eigen.hpp"
#include "kvf/killing.hpp"
#include "kvf/sampling.hpp"
#include "kvf/spin9.hpp"

namespace kvf {

namespace {

// Uniform random element of the family's Lie algebra (double coefficients).
DMatrix random_algebra_element(Rng& rng, const Decomposition& D) {
    const Field f = D.field();
    const int msize = D.matrix_size();
    if (D.family().kind == FamilyKind::Spin9) {
        DMatrix Z(f, msize);
        for (Part p : {Part::H, Part::P1, Part::P2})
            for (const auto& b : D.basis_d(p)) {
                const double c = rng.sym();
                for (size_t k = 0; k < Z.e.size(); ++k) Z.e[k].c[0] += c * b.e[k].c[0];
            }
        return Z;
    }
    DMatrix out(f, msize);
    for (int i = 0; i < msize; ++i) {
        for (int j = i + 1; j < msize; ++j) {
            HyperComplex<double> v(f);
            for (int q = 0; q < v.dim(); ++q) v.c[q] = rng.sym();
            out.at(i, j) = v;
            out.at(j, i) = -hc_conj(v);
        }
        HyperComplex<double> d(f);
        for (int q = 1; q < d.dim(); ++q) d.c[q] = rng.sym();
        out.at(i, i) = d;
    }
    if (D.family().kind == FamilyKind::SU) {
        auto tr = out.trace();
        for (int i = 0; i < msize; ++i)
            for (int q = 0; q < tr.dim(); ++q) out.at(i, i).c[q] -= tr.c[q] / msize;
    }
    return out;
}

double orbit_margin(const DMatrix& W, const Metric& m, const Decomposition& D, double base,
                    uint64_t sample_seed) {
    Rng rng(sample_seed);
    DMatrix Z = random_algebra_element(rng, D);
    DMatrix a = matrix_exp(Z);
    DMatrix AdW = a * W * a.adjoint();
    return metric_p_norm2(m, D, AdW) - base;
}

}  // namespace

OrbitScanResult orbit_scan(const DMatrix& W, const Metric& m, const Decomposition& D, int samples,
                           uint64_t seed, double tol, bool parallel) {
    OrbitScanResult out;
    out.samples = samples;
    out.base_norm2 = metric_p_norm2(m, D, W);
    const double cutoff = tol * std::max(1.0, out.base_norm2);
    double worst = -1e300;
    int violations = 0;
    if (parallel) {
#ifdef KVF_HAVE_OPENMP
#pragma omp parallel for reduction(max : worst) reduction(+ : violations) schedule(static)
#endif
        for (int i = 0; i < samples; ++i) {
            const double margin = orbit_margin(W, m, D, out.base_norm2, Rng::stream_seed(seed, i));
            worst = std::max(worst, margin);
            violations += margin > cutoff ? 1 : 0;
        }
    } else {
        for (int i = 0; i < samples; ++i) {
            const double margin = orbit_margin(W, m, D, out.base_norm2, Rng::stream_seed(seed, i));
            worst = std::max(worst, margin);
            violations += margin > cutoff ? 1 : 0;
        }
    }
    out.worst_margin = samples > 0 ? worst : 0.0;
    out.violations = violations;
    return out;
}

namespace {

std::vector<HyperComplex<double>> random_dyadic_tangent(Rng& rng, Field f, int nplus1) {
    std::vector<HyperComplex<Rat>> v(nplus1, HyperComplex<Rat>(f));
    bool nonzero = false;
    while (!nonzero) {
        for (int k = 0; k < nplus1; ++k) {
            v[k] = random_hc<Rat>(rng, f);
            if (k == 0) {
                v[k].c[0] = Rat(0);
                if (f == Field::R) v[k] = HyperComplex<Rat>(f);
            }
            nonzero = nonzero || !v[k].is_zero();
        }
    }
    std::vector<HyperComplex<double>> out;
    for (const auto& x : v) out.push_back(hc_to_double(x));
    return out;
}

struct CwSample {
    bool column_ok = true;
    double residual = 0.0;
};

CwSample cw_one(Field f, int nplus1, uint64_t sample_seed) {
    Rng rng(sample_seed);
    auto v = random_dyadic_tangent(rng, f, nplus1);
    DMatrix U = cw_field(f, v);
    CwSample s;
    for (int k = 0; k < nplus1; ++k) {
        const auto& e = U.at(k, 0);
        for (int q = 0; q < e.dim(); ++q) s.column_ok = s.column_ok && e.c[q] == v[k].c[q];
    }
    double c2 = 0;
    for (const auto& x : v) c2 += x.norm2();
    DMatrix R = U * U + c2 * DMatrix::identity(f, nplus1);
    s.residual = frobenius_norm(R);
    return s;
}

}  // namespace

CwBatchResult cw_certify_batch(Field f, int nplus1, int count, uint64_t seed, bool parallel) {
    if (f == Field::R && nplus1 % 2 != 0)
        throw std::invalid_argument("over R the batch needs n+1 even");
    CwBatchResult out;
    out.count = count;
    double worst = 0.0;
    int mismatches = 0;
    if (parallel) {
#ifdef KVF_HAVE_OPENMP
#pragma omp parallel for reduction(max : worst) reduction(+ : mismatches) schedule(static)
#endif
        for (int i = 0; i < count; ++i) {
            auto s = cw_one(f, nplus1, Rng::stream_seed(seed, i));
            worst = std::max(worst, s.residual);
            mismatches += s.column_ok ? 0 : 1;
        }
    } else {
        for (int i = 0; i < count; ++i) {
            auto s = cw_one(f, nplus1, Rng::stream_seed(seed, i));
            worst = std::max(worst, s.residual);
            mismatches += s.column_ok ? 0 : 1;
        }
    }
    out.max_residual = worst;
    out.first_column_mismatches = mismatches;
    return out;
}

namespace {

struct Spin9Sample {
    bool exact = false;
    int eq_failures = 0;
    double residual = 0.0;
};

Spin9Sample spin9_one(uint64_t sample_seed) {
    Rng rng(sample_seed);
    std::vector<Rat> u(16, Rat(0));
    bool nonzero = false;
    while (!nonzero)
        for (int k = 1; k < 16; ++k) {
            u[k] = rng.rat_small(8, 1);
            nonzero = nonzero || !u[k].is_zero();
        }
    auto cert = SpinEmbedding::get().cw_field(u);
    Spin9Sample s;
    s.exact = cert.exact;
    s.eq_failures = cert.block_equation_failures;
    s.residual = cert.residual;
    return s;
}

}  // namespace

Spin9BatchResult spin9_certify_batch(int count, uint64_t seed, bool parallel) {
    // Touch the singleton before spawning threads.
    (void)SpinEmbedding::get();
    Spin9BatchResult out;
    out.count = count;
    double worst = 0.0;
    int exact_failures = 0, eq_failures = 0;
    if (parallel) {
#ifdef KVF_HAVE_OPENMP
#pragma omp parallel for reduction(max : worst) reduction(+ : exact_failures, eq_failures) \
    schedule(static)
#endif
        for (int i = 0; i < count; ++i) {
            auto s = spin9_one(Rng::stream_seed(seed, i));
            worst = std::max(worst, s.residual);
            exact_failures += s.exact ? 0 : 1;
            eq_failures += s.eq_failures;
        }
    } else {
        for (int i = 0; i < count; ++i) {
            auto s = spin9_one(Rng::stream_seed(seed, i));
            worst = std::max(worst, s.residual);
            exact_failures += s.exact ? 0 : 1;
            eq_failures += s.eq_failures;
        }
    }
    out.max_residual = worst;
    out.exact_failures = exact_failures;
    out.block_equation_failures = eq_failures;
    return out;
}

}  // namespace kvf
