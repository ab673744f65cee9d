#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kvf/matrix.hpp"

namespace kvf {

// Constant-length certificate: U^2 = -c2 Id. `exact` marks a certificate
// established in rational arithmetic (residual identically zero).
struct LengthCertificate {
    Rat c2;
    double c = 0.0;
    double residual = 0.0;
    bool exact = false;
    bool unit_group_member = false;  // U U* = Id, i.e. c = 1
};

// Empty when U^2 is not a nonpositive scalar multiple of the identity.
// Throws when U is not skew-Hermitian.
std::optional<LengthCertificate> constant_length_test(const RatMatrix& U);
std::optional<LengthCertificate> constant_length_test(const DMatrix& U, double tol = 1e-9);

// Field of constant length ||v|| through the tangent vector v = (u1, u)^T at
// x0 = (1,0,...,0)^T; v[0] must be imaginary (zero over R, where n+1 must be
// even). The first column of the result reproduces v entry for entry.
//
// Exact overload requirements beyond the above: ||v|| must be rational
// (R also needs |u| rational; H additionally needs u aligned with the first
// coordinate). The numeric overload handles every tangent vector.
RatMatrix cw_field(Field f, const std::vector<HyperComplex<Rat>>& v);
DMatrix cw_field(Field f, const std::vector<HyperComplex<double>>& v, double tol = 1e-12);

// Traceless field through v whose -U^2 is diag(lambda^2, B) with
// lambda^2 Id - B positive semidefinite (the base point realizes the maximal
// pointwise norm). Works for every tangent vector, exactly over the
// rationals.
RatMatrix su_delta_field(const std::vector<HyperComplex<Rat>>& v);
DMatrix su_delta_field(const std::vector<HyperComplex<double>>& v, double tol = 1e-12);

// Maximal-displacement test at the base point for the round metric:
// accepts iff -U^2 = diag(lambda^2, B) with lambda^2 Id - B PSD.
struct DeltaResult {
    bool accepted = false;
    double lambda = 0.0;
    double psd_margin = 0.0;  // min eigenvalue of lambda^2 Id - B
    bool exact_psd = false;   // PSD certified by exact elimination
    std::string reason;
};
DeltaResult round_delta_test(const RatMatrix& U);
DeltaResult round_delta_test(const DMatrix& U, double tol = 1e-9);

// Orbit label of a unit field in u(n+1): l = multiplicity of the eigenvalue
// +i, alpha = 2l/(n+1) - 1 the coefficient of the central part.
struct OrbitLabel {
    int l = 0;
    Rat alpha;
};
OrbitLabel orbit_label_u(const RatMatrix& U);
OrbitLabel orbit_label_u(const DMatrix& U, double tol = 1e-6);

}  // namespace kvf
