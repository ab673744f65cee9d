#pragma once

#include <vector>

#include "kvf/matrix.hpp"

namespace kvf {

// Ellipsoid { v : (v, A v) <= 1 } for symmetric positive definite A.
struct Ellipsoid {
    DMatrix A;
};

// Validates symmetry and positive definiteness.
Ellipsoid make_ellipsoid(const DMatrix& A);

// Support function h(u) = max{ (u,v) : v in E } = sqrt((u, A^{-1} u)).
double support(const Ellipsoid& E, const std::vector<double>& u);

// M_p(h1,h2) = ((1-theta) h1^p + theta h2^p)^(1/p); the support value of the
// dual p-mean body. Requires p >= 1 and theta in [0,1].
double dual_p_mean_support(double h1, double h2, double p, double theta);

// The dual 2-mean of two ellipsoids is the ellipsoid of
// A = ((1-theta) A1^{-1} + theta A2^{-1})^{-1}.
Ellipsoid dual_2_mean(const Ellipsoid& E1, const Ellipsoid& E2, double theta);

// Diagonal metric coefficients (x_1, ..., x_l), exact.
struct MetricParams {
    std::vector<Rat> x;
};

// Componentwise harmonic interpolation
// ((1-theta) x_i^{-1} + theta y_i^{-1})^{-1}; this is the coefficient form of
// the dual 2-mean on diagonal metrics.
MetricParams combine_metrics(const MetricParams& x, const MetricParams& y, const Rat& theta);

// Componentwise inverse; an involution conjugating combine_metrics to the
// straight line (1-theta) x + theta y.
MetricParams dual_params(const MetricParams& x);

// theta realizing the straight-line parameter r between beta and gamma:
// theta = r gamma / ((1-r) beta + r gamma).
Rat theta_from_r(const Rat& r, const Rat& beta, const Rat& gamma);

// Backward interpolation parameter for the two-parameter sphere family:
// for 1/2 < t < 1 and 0 < s < t, the pair (t,s) is the combination of
// (1/2, s1) and (1,1) at theta = (2t-1)/t with s1 = s(1-t)/(t-(2t-1)s),
// which lies in (0, 1/2).
Rat s1_for_target(const Rat& t, const Rat& s);

}  // namespace kvf
