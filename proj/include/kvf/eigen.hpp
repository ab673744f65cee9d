#pragma once

#include <vector>

#include "kvf/matrix.hpp"

namespace kvf {

// Eigenvalues of a real symmetric matrix in ascending order (cyclic Jacobi).
// Throws if the input is not symmetric within sym_tol.
std::vector<double> sym_eigvals(const DMatrix& S, double sym_tol = 1e-10);

// Full symmetric eigendecomposition: S = V diag(w) V^T, eigenvalues ascending,
// V orthogonal with eigenvectors in columns.
void sym_eig(const DMatrix& S, std::vector<double>& w, DMatrix& V, double sym_tol = 1e-10);

// Inverse of a symmetric positive definite matrix through its
// eigendecomposition. Rejects condition numbers above cond_limit.
DMatrix spd_inverse(const DMatrix& A, double cond_limit = 1e12);

// Exact positive-semidefiniteness of a rational symmetric real matrix
// (pivoted LDL^T; all pivots nonnegative and no nonzero row at a zero pivot).
bool psd_exact(const RatMatrix& S);

// Matrix exponential (scaling and squaring with the order-13 Pade
// approximant). For C/H input the computation runs on the realification.
DMatrix matrix_exp(const DMatrix& A);

}  // namespace kvf
