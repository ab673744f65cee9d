#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kvf/hypercomplex.hpp"
#include "kvf/sampling.hpp"

using namespace kvf;

using RH = HyperComplex<Rat>;

namespace {
RH unit(Field f, int k) { return RH::unit(f, k); }
}  // namespace

TEST_CASE("quaternion table i*j = k") {
    const auto i = unit(Field::H, 1), j = unit(Field::H, 2), k = unit(Field::H, 3);
    CHECK(hc_mul(i, j) == k);
    CHECK(hc_mul(j, k) == i);
    CHECK(hc_mul(k, i) == j);
    CHECK(hc_mul(j, i) == -k);
    CHECK(hc_mul(i, i) == -RH::one(Field::H));
}

TEST_CASE("imaginary units square to -1") {
    for (Field f : {Field::C, Field::H, Field::O})
        for (int k = 1; k < field_dim(f); ++k)
            CHECK(hc_mul(unit(f, k), unit(f, k)) == -RH::one(f));
}

TEST_CASE("octonions are non-associative: (e1 e2) e4 vs e1 (e2 e4)") {
    const auto e1 = unit(Field::O, 1), e2 = unit(Field::O, 2), e4 = unit(Field::O, 4);
    const auto lhs = hc_mul(hc_mul(e1, e2), e4);
    const auto rhs = hc_mul(e1, hc_mul(e2, e4));
    CHECK(lhs == -rhs);
    CHECK(!(lhs == rhs));
}

TEST_CASE("quaternions and complexes associate") {
    Rng rng(11);
    for (Field f : {Field::C, Field::H})
        for (int trial = 0; trial < 200; ++trial) {
            auto a = random_hc<Rat>(rng, f);
            auto b = random_hc<Rat>(rng, f);
            auto c = random_hc<Rat>(rng, f);
            CHECK(hc_mul(hc_mul(a, b), c) == hc_mul(a, hc_mul(b, c)));
        }
}

TEST_CASE("composition law norm(ab) = norm(a) norm(b), exactly") {
    Rng rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        auto a = random_hc<Rat>(rng, Field::O);
        auto b = random_hc<Rat>(rng, Field::O);
        CHECK(hc_mul(a, b).norm2() == a.norm2() * b.norm2());
    }
}

TEST_CASE("conjugation is an involution and reverses products") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_hc<Rat>(rng, Field::O);
        auto b = random_hc<Rat>(rng, Field::O);
        CHECK(hc_conj(hc_conj(a)) == a);
        CHECK(hc_conj(hc_mul(a, b)) == hc_mul(hc_conj(b), hc_conj(a)));
    }
}

TEST_CASE("alternativity x(x y) = (x x) y in the octonions") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto x = random_hc<Rat>(rng, Field::O);
        auto y = random_hc<Rat>(rng, Field::O);
        CHECK(hc_mul(x, hc_mul(x, y)) == hc_mul(hc_mul(x, x), y));
        CHECK(hc_mul(hc_mul(y, x), x) == hc_mul(y, hc_mul(x, x)));
    }
}

TEST_CASE("tag mismatch is rejected") {
    CHECK_THROWS_AS(hc_mul(RH::one(Field::C), RH::one(Field::H)), std::invalid_argument);
}

TEST_CASE("widening cast embeds R into C into H") {
    auto x = RH(Field::R, Rat(3, 2));
    auto y = hc_cast(x, Field::H);
    CHECK(y.field == Field::H);
    CHECK(y.re() == Rat(3, 2));
    CHECK(y.is_real());
    CHECK_THROWS_AS(hc_cast(RH::one(Field::H), Field::C), std::invalid_argument);
}
