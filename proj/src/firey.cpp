#include "kvf/firey.hpp"

#include <cmath>
#include <stdexcept>

#include "kvf/eigen.hpp"

namespace kvf {

Ellipsoid make_ellipsoid(const DMatrix& A) {
    if (A.field != Field::R) throw std::invalid_argument("ellipsoid matrix must be real");
    auto w = sym_eigvals(A, 1e-12 * std::max(1.0, max_abs_entry(A)));
    if (w.front() <= 0) throw std::invalid_argument("ellipsoid matrix must be positive definite");
    return Ellipsoid{A};
}

double support(const Ellipsoid& E, const std::vector<double>& u) {
    if (int(u.size()) != E.A.n) throw std::invalid_argument("support: dimension mismatch");
    const DMatrix Ainv = spd_inverse(E.A);
    double s = 0;
    for (int i = 0; i < E.A.n; ++i)
        for (int j = 0; j < E.A.n; ++j) s += u[i] * Ainv.at(i, j).c[0] * u[j];
    return std::sqrt(std::max(0.0, s));
}

double dual_p_mean_support(double h1, double h2, double p, double theta) {
    if (p < 1.0) throw std::invalid_argument("dual p-means need p >= 1");
    if (theta < 0.0 || theta > 1.0) throw std::invalid_argument("theta must lie in [0,1]");
    if (h1 < 0.0 || h2 < 0.0) throw std::invalid_argument("support values are nonnegative");
    return std::pow((1.0 - theta) * std::pow(h1, p) + theta * std::pow(h2, p), 1.0 / p);
}

Ellipsoid dual_2_mean(const Ellipsoid& E1, const Ellipsoid& E2, double theta) {
    if (E1.A.n != E2.A.n) throw std::invalid_argument("dual_2_mean: dimension mismatch");
    if (theta < 0.0 || theta > 1.0) throw std::invalid_argument("theta must lie in [0,1]");
    const DMatrix inv1 = spd_inverse(E1.A);
    const DMatrix inv2 = spd_inverse(E2.A);
    DMatrix mix(Field::R, E1.A.n);
    for (size_t k = 0; k < mix.e.size(); ++k)
        mix.e[k].c[0] = (1.0 - theta) * inv1.e[k].c[0] + theta * inv2.e[k].c[0];
    return Ellipsoid{spd_inverse(mix)};
}

MetricParams combine_metrics(const MetricParams& x, const MetricParams& y, const Rat& theta) {
    if (x.x.size() != y.x.size()) throw std::invalid_argument("combine_metrics: length mismatch");
    if (theta < Rat(0) || theta > Rat(1)) throw std::invalid_argument("theta must lie in [0,1]");
    MetricParams out;
    for (size_t k = 0; k < x.x.size(); ++k) {
        if (x.x[k].sgn() <= 0 || y.x[k].sgn() <= 0)
            throw std::invalid_argument("metric coefficients must be positive");
        out.x.push_back(Rat(1) / ((Rat(1) - theta) / x.x[k] + theta / y.x[k]));
    }
    return out;
}

MetricParams dual_params(const MetricParams& x) {
    MetricParams out;
    for (const auto& v : x.x) {
        if (v.sgn() <= 0) throw std::invalid_argument("metric coefficients must be positive");
        out.x.push_back(Rat(1) / v);
    }
    return out;
}

Rat theta_from_r(const Rat& r, const Rat& beta, const Rat& gamma) {
    return r * gamma / ((Rat(1) - r) * beta + r * gamma);
}

Rat s1_for_target(const Rat& t, const Rat& s) {
    if (!(Rat(1, 2) < t && t < Rat(1)))
        throw std::invalid_argument("s1_for_target needs 1/2 < t < 1");
    if (!(Rat(0) < s && s < t)) throw std::invalid_argument("s1_for_target needs 0 < s < t");
    const Rat s1 = s * (Rat(1) - t) / (t - (Rat(2) * t - Rat(1)) * s);
    // Positivity and s1 < 1/2 are equivalent to the input constraints.
    if (!(Rat(0) < s1 && s1 < Rat(1, 2))) throw std::logic_error("s1 left its interval");
    return s1;
}

}  // namespace kvf
