#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kvf/eigen.hpp"
#include "kvf/firey.hpp"
#include "kvf/sampling.hpp"

using namespace kvf;

namespace {

DMatrix diag(const std::vector<double>& d) {
    DMatrix m(Field::R, int(d.size()));
    for (size_t k = 0; k < d.size(); ++k) m.at(int(k), int(k)).c[0] = d[k];
    return m;
}

DMatrix random_spd(Rng& rng, int n) {
    DMatrix B(Field::R, n);
    for (auto& v : B.e) v.c[0] = rng.sym();
    DMatrix A = B * B.adjoint();
    for (int i = 0; i < n; ++i) A.at(i, i).c[0] += 0.5;
    return A;
}

// Independent support oracle: maximize (u,v) over boundary samples
// v = A^{-1/2} s with random unit s.
double support_oracle(const Ellipsoid& E, const std::vector<double>& u, Rng& rng, int samples) {
    std::vector<double> w;
    DMatrix V(Field::R, E.A.n);
    sym_eig(E.A, w, V);
    double best = 0;
    const int n = E.A.n;
    for (int trial = 0; trial < samples; ++trial) {
        std::vector<double> s(n), v(n, 0.0);
        double norm = 0;
        for (auto& x : s) {
            x = rng.sym();
            norm += x * x;
        }
        norm = std::sqrt(norm);
        if (norm < 1e-12) continue;
        for (auto& x : s) x /= norm;
        // v = V diag(1/sqrt(w)) V^T s
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0;
                for (int k = 0; k < n; ++k)
                    acc += V.at(i, k).c[0] * V.at(j, k).c[0] / std::sqrt(w[k]);
                v[i] += acc * s[j];
            }
        double dot = 0;
        for (int i = 0; i < n; ++i) dot += u[i] * v[i];
        best = std::max(best, dot);
    }
    return best;
}

std::vector<double> random_unit(Rng& rng, int n) {
    std::vector<double> u(n);
    double norm = 0;
    for (auto& x : u) {
        x = rng.sym();
        norm += x * x;
    }
    norm = std::sqrt(norm);
    for (auto& x : u) x /= std::max(norm, 1e-12);
    return u;
}

}  // namespace

TEST_CASE("support of the unit ball is the Euclidean norm") {
    auto E = make_ellipsoid(diag({1, 1, 1}));
    CHECK(support(E, {3, 4, 0}) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("support of diag(4,1) at (1,0) is 1/2, matching the boundary oracle") {
    auto E = make_ellipsoid(diag({4, 1}));
    CHECK(support(E, {1, 0}) == doctest::Approx(0.5).epsilon(1e-12));
    Rng rng(3);
    CHECK(support_oracle(E, {1, 0}, rng, 10000) == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("support is positively homogeneous and convex") {
    Rng rng(5);
    auto E = make_ellipsoid(random_spd(rng, 4));
    for (int trial = 0; trial < 1000; ++trial) {
        auto u1 = random_unit(rng, 4);
        auto u2 = random_unit(rng, 4);
        const double lam = rng.real01() * 3.0;
        std::vector<double> scaled(4), mix(4);
        const double th = rng.real01();
        for (int i = 0; i < 4; ++i) {
            scaled[i] = lam * u1[i];
            mix[i] = (1 - th) * u1[i] + th * u2[i];
        }
        CHECK(support(E, scaled) == doctest::Approx(lam * support(E, u1)).epsilon(1e-9));
        CHECK(support(E, mix) <= (1 - th) * support(E, u1) + th * support(E, u2) + 1e-9);
    }
}

TEST_CASE("singular matrices are rejected") {
    CHECK_THROWS_AS(make_ellipsoid(diag({1, 0})), std::invalid_argument);
}

TEST_CASE("dual p-mean support values") {
    CHECK(dual_p_mean_support(3, 4, 2, 0) == doctest::Approx(3.0));
    CHECK(dual_p_mean_support(3, 4, 2, 0.5) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-12));
    for (double p : {1.0, 2.0, 5.0})
        for (double th : {0.0, 0.3, 1.0})
            CHECK(dual_p_mean_support(2.5, 2.5, p, th) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK_THROWS_AS(dual_p_mean_support(1, 1, 0.5, 0.5), std::invalid_argument);
    // Monotone in each argument.
    CHECK(dual_p_mean_support(3, 4, 2, 0.5) < dual_p_mean_support(3.5, 4, 2, 0.5));
    CHECK(dual_p_mean_support(3, 4, 2, 0.5) < dual_p_mean_support(3, 4.5, 2, 0.5));
}

TEST_CASE("dual 2-mean of ellipsoids") {
    SUBCASE("idempotent and endpoint cases") {
        Rng rng(7);
        auto A = random_spd(rng, 3);
        auto E = make_ellipsoid(A);
        auto M = dual_2_mean(E, E, 0.37);
        CHECK(frobenius_norm(M.A - A) < 1e-9);
        auto B = random_spd(rng, 3);
        auto M1 = dual_2_mean(E, make_ellipsoid(B), 1.0);
        CHECK(frobenius_norm(M1.A - B) < 1e-9);
    }
    SUBCASE("diag(1,1) and diag(1/2,1/2) mix to diag(2/3,2/3) at theta = 1/2") {
        auto M = dual_2_mean(make_ellipsoid(diag({1, 1})), make_ellipsoid(diag({0.5, 0.5})), 0.5);
        CHECK(M.A.at(0, 0).c[0] == doctest::Approx(2.0 / 3).epsilon(1e-12));
        CHECK(M.A.at(1, 1).c[0] == doctest::Approx(2.0 / 3).epsilon(1e-12));
    }
    SUBCASE("support of the mean is the 2-mean of the supports") {
        Rng rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            auto E1 = make_ellipsoid(random_spd(rng, 3));
            auto E2 = make_ellipsoid(random_spd(rng, 3));
            const double th = rng.real01();
            auto M = dual_2_mean(E1, E2, th);
            for (int k = 0; k < 5; ++k) {
                auto u = random_unit(rng, 3);
                const double lhs = support(M, u);
                const double rhs = dual_p_mean_support(support(E1, u), support(E2, u), 2, th);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
            }
        }
    }
    SUBCASE("projection commutes with the dual 2-mean, eigenvalue-wise") {
        Rng rng(13);
        const int n = 5, m = 3;
        for (int trial = 0; trial < 50; ++trial) {
            auto A1 = random_spd(rng, n);
            auto A2 = random_spd(rng, n);
            const double th = rng.real01();
            // Orthonormal rows spanning a random m-plane.
            std::vector<std::vector<double>> P;
            while (int(P.size()) < m) {
                auto v = random_unit(rng, n);
                for (const auto& p : P) {
                    double dot = 0;
                    for (int i = 0; i < n; ++i) dot += p[i] * v[i];
                    for (int i = 0; i < n; ++i) v[i] -= dot * p[i];
                }
                double norm = 0;
                for (double x : v) norm += x * x;
                norm = std::sqrt(norm);
                if (norm < 1e-6) continue;
                for (auto& x : v) x /= norm;
                P.push_back(v);
            }
            auto project_body = [&](const DMatrix& A) {
                // Support restriction: projected body has inverse matrix
                // P A^{-1} P^T in plane coordinates.
                auto Ainv = spd_inverse(A);
                DMatrix small(Field::R, m);
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b) {
                        double acc = 0;
                        for (int i = 0; i < n; ++i)
                            for (int j = 0; j < n; ++j)
                                acc += P[a][i] * Ainv.at(i, j).c[0] * P[b][j];
                        small.at(a, b).c[0] = acc;
                        small.at(b, a).c[0] = acc;
                    }
                return Ellipsoid{spd_inverse(small)};
            };
            auto mean_then_project = project_body(dual_2_mean(make_ellipsoid(A1), make_ellipsoid(A2), th).A);
            auto project_then_mean = dual_2_mean(project_body(A1), project_body(A2), th);
            auto w1 = sym_eigvals(mean_then_project.A, 1e-8);
            auto w2 = sym_eigvals(project_then_mean.A, 1e-8);
            for (int k = 0; k < m; ++k) CHECK(w1[k] == doctest::Approx(w2[k]).epsilon(1e-9));
        }
    }
}

TEST_CASE("combine_metrics") {
    SUBCASE("idempotent on equal inputs") {
        MetricParams x{{Rat(1, 2), Rat(3)}};
        auto r = combine_metrics(x, x, Rat(2, 5));
        CHECK(r.x == x.x);
    }
    SUBCASE("beta = 1/2, gamma = 1 at theta = 2/3 lands on 3/4") {
        MetricParams x{{Rat(1, 2)}}, y{{Rat(1)}};
        auto r = combine_metrics(x, y, Rat(2, 3));
        CHECK(r.x[0] == Rat(3, 4));
        // The straight-line parameter r = 1/2 corresponds to theta = 2/3.
        CHECK(theta_from_r(Rat(1, 2), Rat(1, 2), Rat(1)) == Rat(2, 3));
        CHECK((Rat(1) - Rat(1, 2)) * Rat(1, 2) + Rat(1, 2) * Rat(1) == Rat(3, 4));
    }
    SUBCASE("the combined value sweeps exactly [min, max] monotonically") {
        const Rat beta(1, 2), gamma(2);
        Rat prev = beta;
        for (int k = 1; k <= 20; ++k) {
            auto r = combine_metrics(MetricParams{{beta}}, MetricParams{{gamma}}, Rat(k, 20));
            CHECK(prev < r.x[0]);
            prev = r.x[0];
        }
        CHECK(prev == gamma);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(combine_metrics(MetricParams{{Rat(1)}}, MetricParams{{Rat(1), Rat(1)}}, Rat(0)),
                        std::invalid_argument);
        CHECK_THROWS_AS(combine_metrics(MetricParams{{Rat(-1)}}, MetricParams{{Rat(1)}}, Rat(0)),
                        std::invalid_argument);
    }
}

TEST_CASE("dual_params is a scaling-contravariant involution") {
    MetricParams x{{Rat(1), Rat(2)}};
    CHECK(dual_params(x).x == std::vector<Rat>{Rat(1), Rat(1, 2)});
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        MetricParams p;
        for (int k = 0; k < 4; ++k) {
            Rat v = rng.rat_small(6, 2).abs();
            p.x.push_back(v.is_zero() ? Rat(1) : v);
        }
        CHECK(dual_params(dual_params(p)).x == p.x);
        const Rat alpha(3);
        MetricParams scaled;
        for (const auto& v : p.x) scaled.x.push_back(alpha * v);
        auto lhs = dual_params(scaled);
        auto rhs = dual_params(p);
        for (size_t k = 0; k < p.x.size(); ++k) CHECK(lhs.x[k] == rhs.x[k] / alpha);
    }
}

TEST_CASE("s1_for_target") {
    SUBCASE("printed value: t = 3/4, s = 1/2 gives s1 = 1/4") {
        CHECK(s1_for_target(Rat(3, 4), Rat(1, 2)) == Rat(1, 4));
    }
    SUBCASE("s near t pushes s1 toward 1/2") {
        CHECK(s1_for_target(Rat(3, 4), Rat(74, 100)) < Rat(1, 2));
        CHECK(s1_for_target(Rat(3, 4), Rat(74, 100)) > Rat(2, 5));
    }
    SUBCASE("round trip through combine_metrics at theta = (2t-1)/t") {
        Rng rng(19);
        for (int trial = 0; trial < 200; ++trial) {
            const Rat t(rng.int_in(51, 99), 100);
            Rat s(rng.int_in(1, 99), 100);
            if (!(s < t)) s = t / Rat(2);
            const Rat s1 = s1_for_target(t, s);
            const Rat theta = (Rat(2) * t - Rat(1)) / t;
            auto r = combine_metrics(MetricParams{{Rat(1, 2), s1}}, MetricParams{{Rat(1), Rat(1)}},
                                     theta);
            CHECK(r.x[0] == t);
            CHECK(r.x[1] == s);
        }
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(s1_for_target(Rat(1, 2), Rat(1, 4)), std::invalid_argument);
        CHECK_THROWS_AS(s1_for_target(Rat(3, 4), Rat(3, 4)), std::invalid_argument);
    }
}
