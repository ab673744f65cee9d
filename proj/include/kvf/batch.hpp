#pragma once

#include <cstdint>

#include "kvf/homspace.hpp"

namespace kvf {

// Data-parallel sampling kernels. Every kernel exists in a serial reference
// form and an OpenMP form; per-sample generators are seeded independently
// (counter-based), so both produce bit-identical results.

// Monte-Carlo necessary test over the adjoint orbit: samples a = exp(Z) with
// Z uniform in the family's algebra and compares the metric norm of the p
// component of Ad(a) W against that of W. Any positive margin beyond tol
// certifies that W does not realize its maximal displacement at the base
// point.
struct OrbitScanResult {
    int samples = 0;
    int violations = 0;
    double worst_margin = 0.0;  // max over samples of ||Ad(a)W|_p||^2 - ||W|_p||^2
    double base_norm2 = 0.0;
};

OrbitScanResult orbit_scan(const DMatrix& W, const Metric& m, const Decomposition& D, int samples,
                           uint64_t seed, double tol = 1e-8, bool parallel = true);

// Batch certification of the constant-length construction over random
// tangent vectors (entries are dyadic rationals, so the double image is the
// exact input). The first column must reproduce the vector bit for bit;
// the squared field must sit within residual of -||v||^2 Id.
struct CwBatchResult {
    int count = 0;
    int first_column_mismatches = 0;
    double max_residual = 0.0;
};

CwBatchResult cw_certify_batch(Field f, int nplus1, int count, uint64_t seed,
                               bool parallel = true);

// Same certification for the spinor family on S^15, in exact arithmetic:
// residuals are identically zero and all lower-block scalar equations hold.
struct Spin9BatchResult {
    int count = 0;
    int exact_failures = 0;
    int block_equation_failures = 0;
    double max_residual = 0.0;
};

Spin9BatchResult spin9_certify_batch(int count, uint64_t seed, bool parallel = true);

}  // namespace kvf
