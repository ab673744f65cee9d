#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kvf/clifford.hpp"
#include "kvf/sampling.hpp"

using namespace kvf;

namespace {

Clifford gen(int i) { return Clifford::generator(9, i); }

std::vector<Rat> random_rat_vec(Rng& rng, int n) {
    std::vector<Rat> v(n);
    for (auto& x : v) x = rng.rat_small(4, 1);
    return v;
}

Clifford random_clifford(Rng& rng, int n, int terms) {
    Clifford x(n);
    for (int t = 0; t < terms; ++t) {
        uint16_t mask = uint16_t(rng.u64() & ((1u << n) - 1));
        x = x + Clifford::monomial(n, mask, rng.rat_small(3, 1));
    }
    return x;
}

}  // namespace

TEST_CASE("defining relation on generators") {
    CHECK(cl_mul(gen(1), gen(1)) == Clifford::scalar(9, Rat(-1)));
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j)
            CHECK(cl_mul(gen(i), gen(j)) == -cl_mul(gen(j), gen(i)));
}

TEST_CASE("defining relation x.y + y.x = -2(x,y) for random grade-1 elements") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto v = random_rat_vec(rng, 9);
        auto w = random_rat_vec(rng, 9);
        Rat dot(0);
        for (int i = 0; i < 9; ++i) dot += v[i] * w[i];
        auto x = Clifford::vector(9, v), y = Clifford::vector(9, w);
        CHECK(cl_mul(x, y) + cl_mul(y, x) == Clifford::scalar(9, Rat(-2) * dot));
    }
}

TEST_CASE("(e1 e2)^2 = -1") {
    auto w = cl_mul(gen(1), gen(2));
    CHECK(cl_mul(w, w) == Clifford::scalar(9, Rat(-1)));
}

TEST_CASE("W = e1e2 + e3e4 squares to -2 + 2 e1e2e3e4") {
    auto W = cl_mul(gen(1), gen(2)) + cl_mul(gen(3), gen(4));
    auto expect = Clifford::scalar(9, Rat(-2)) + Clifford::monomial(9, 0b1111, Rat(2));
    CHECK(cl_mul(W, W) == expect);
}

TEST_CASE("associativity on random triples, exactly") {
    Rng rng(13);
    for (int trial = 0; trial < 1000; ++trial) {
        auto a = random_clifford(rng, 6, 3);
        auto b = random_clifford(rng, 6, 3);
        auto c = random_clifford(rng, 6, 3);
        CHECK(cl_mul(cl_mul(a, b), c) == cl_mul(a, cl_mul(b, c)));
    }
}

TEST_CASE("bivector_from_vectors matches the grade-1 Clifford product") {
    SUBCASE("basis pair") {
        auto b = bivector_from_vectors({Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)});
        CHECK(b.component(1, 2) == Rat(1));
        CHECK(b.gamma().size() == 1);
    }
    SUBCASE("v = f1 + f3, w = f2") {
        auto b = bivector_from_vectors({Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)});
        CHECK(b.component(1, 2) == Rat(1));
        CHECK(b.component(2, 3) == Rat(-1));
    }
    SUBCASE("random orthogonal pairs agree with cl_mul") {
        Rng rng(23);
        int done = 0;
        while (done < 100) {
            auto v = random_rat_vec(rng, 9);
            // Build w orthogonal to v by swapping a nonzero coordinate pair.
            std::vector<Rat> w(9, Rat(0));
            int a = -1, b = -1;
            for (int i = 0; i < 9 && b < 0; ++i)
                if (!v[i].is_zero()) (a < 0 ? a : b) = i;
            if (b < 0) continue;
            w[a] = v[b];
            w[b] = -v[a];
            auto biv = bivector_from_vectors(v, w);
            CHECK(biv.to_clifford() == cl_mul(Clifford::vector(9, v), Clifford::vector(9, w)));
            ++done;
        }
    }
    SUBCASE("non-orthogonal input is rejected") {
        CHECK_THROWS_AS(bivector_from_vectors({Rat(1), Rat(1)}, {Rat(1), Rat(0)}),
                        std::invalid_argument);
    }
}

TEST_CASE("is_simple") {
    SUBCASE("X1-like combination is not simple") {
        auto W = Bivector::basis(9, 7, 8) - Bivector::basis(9, 1, 2) - Bivector::basis(9, 3, 4) -
                 Bivector::basis(9, 5, 6);
        CHECK(!is_simple(W).has_value());
    }
    SUBCASE("4 e7e8 is simple with C = 4") {
        auto W = Rat(4) * Bivector::basis(9, 7, 8);
        auto c = is_simple(W);
        REQUIRE(c.has_value());
        CHECK(c->c2 == Rat(16));
        CHECK(c->c == 4.0);
    }
    SUBCASE("zero bivector is simple with C = 0") {
        auto c = is_simple(Bivector(9));
        REQUIRE(c.has_value());
        CHECK(c->c2 == Rat(0));
    }
    SUBCASE("products of orthogonal vectors certify |v||w|") {
        Rng rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            auto v = random_rat_vec(rng, 9);
            std::vector<Rat> w(9, Rat(0));
            int a = -1, b = -1;
            for (int i = 0; i < 9 && b < 0; ++i)
                if (!v[i].is_zero()) (a < 0 ? a : b) = i;
            if (b < 0) continue;
            w[a] = v[b];
            w[b] = -v[a];
            auto cert = is_simple(bivector_from_vectors(v, w));
            REQUIRE(cert.has_value());
            Rat v2(0), w2(0);
            for (int i = 0; i < 9; ++i) {
                v2 += v[i] * v[i];
                w2 += w[i] * w[i];
            }
            CHECK(cert->c2 == v2 * w2);
        }
    }
    SUBCASE("two independent blocks are never simple") {
        Rng rng(37);
        for (int trial = 0; trial < 100; ++trial) {
            Rat a1 = rng.rat_small(4, 1), a2 = rng.rat_small(4, 1);
            if (a1.is_zero() || a2.is_zero()) continue;
            auto W = a1 * Bivector::basis(9, 1, 2) + a2 * Bivector::basis(9, 3, 4);
            CHECK(!is_simple(W).has_value());
        }
    }
}

TEST_CASE("spin_to_so is the stated map and preserves brackets") {
    SUBCASE("f1 f2 -> 2(E21 - E12)") {
        auto m = spin_to_so(Bivector::basis(9, 1, 2));
        CHECK(m.at(1, 0).c[0] == Rat(2));
        CHECK(m.at(0, 1).c[0] == Rat(-2));
    }
    SUBCASE("zero maps to zero") { CHECK(spin_to_so(Bivector(9)).is_zero()); }
    SUBCASE("[f1f2, f1f3] = 2 f2f3 maps to 4 F32") {
        auto br = bivector_bracket(Bivector::basis(9, 1, 2), Bivector::basis(9, 1, 3));
        CHECK(br == Rat(2) * Bivector::basis(9, 2, 3));
        auto m = spin_to_so(br);
        CHECK(m.at(2, 1).c[0] == Rat(4));
    }
    SUBCASE("bracket preservation on all basis pairs, exactly") {
        std::vector<Bivector> basis;
        for (int i = 1; i <= 9; ++i)
            for (int j = i + 1; j <= 9; ++j) basis.push_back(Bivector::basis(9, i, j));
        for (const auto& a : basis)
            for (const auto& b : basis)
                CHECK(spin_to_so(bivector_bracket(a, b)) == bracket(spin_to_so(a), spin_to_so(b)));
    }
}

TEST_CASE("spin9_inner on the printed vectors") {
    CHECK(spin9_inner(Bivector::basis(9, 2, 5), Bivector::basis(9, 2, 5)) == Rat(8));
    auto X1 = Bivector::basis(9, 7, 8) - Bivector::basis(9, 1, 2) - Bivector::basis(9, 3, 4) -
              Bivector::basis(9, 5, 6);
    CHECK(spin9_inner(X1, X1) == Rat(32));
    auto Z = Rat(-3) * Bivector::basis(9, 1, 2) + Bivector::basis(9, 3, 4) +
             Bivector::basis(9, 5, 6) - Bivector::basis(9, 7, 8);
    CHECK(spin9_inner(Z, Z) == Rat(96));
}

TEST_CASE("clifford text format round-trips exactly") {
    auto X = parse_clifford("-3*e1e2 + e3e4 - 1/2", 9);
    CHECK(X.coeff(0b11) == Rat(-3));
    CHECK(X.coeff(0b1100) == Rat(1));
    CHECK(X.coeff(0) == Rat(-1, 2));
    CHECK(parse_clifford(X.str(), 9) == X);
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto r = random_clifford(rng, 9, 4);
        CHECK(parse_clifford(r.str(), 9) == r);
    }
    // Out-of-order and repeated generators normalize through the relations.
    CHECK(parse_clifford("e2e1", 9) == -cl_mul(gen(1), gen(2)));
    CHECK(parse_clifford("e1e1", 9) == Clifford::scalar(9, Rat(-1)));
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(cl_mul(Clifford::generator(4, 1), Clifford::generator(5, 1)),
                    std::invalid_argument);
}
