#pragma once

#include <cstdint>
#include <vector>

#include "kvf/matrix.hpp"

namespace kvf {

// Small counter-based generator (splitmix64). Cheap to seed per sample, which
// keeps parallel batch runs bit-identical to serial ones.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1).
    double real01() { return double(u64() >> 11) * 0x1.0p-53; }
    // Uniform in [-1,1].
    double sym() { return 2.0 * real01() - 1.0; }
    // Uniform integer in [lo, hi].
    long long int_in(long long lo, long long hi) {
        return lo + (long long)(u64() % (unsigned long long)(hi - lo + 1));
    }

    // Small exact rational with a power-of-two denominator, so the double
    // image is exact as well.
    Rat rat_small(int max_num = 8, int den_pow = 2) {
        long long num = int_in(-max_num, max_num);
        long long den = 1LL << int_in(0, den_pow);
        return Rat(num, den);
    }

    static uint64_t stream_seed(uint64_t seed, uint64_t index) {
        uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    uint64_t state_;
};

template <class S>
HyperComplex<S> random_hc(Rng& rng, Field f);

template <>
inline HyperComplex<double> random_hc<double>(Rng& rng, Field f) {
    HyperComplex<double> h(f);
    for (int k = 0; k < h.dim(); ++k) h.c[k] = rng.sym();
    return h;
}

template <>
inline HyperComplex<Rat> random_hc<Rat>(Rng& rng, Field f) {
    HyperComplex<Rat> h(f);
    for (int k = 0; k < h.dim(); ++k) h.c[k] = rng.rat_small();
    return h;
}

template <class S>
Matrix<S> random_skew_hermitian(Rng& rng, Field f, int n) {
    Matrix<S> m(f, n);
    for (int i = 0; i < n; ++i) {
        auto d = random_hc<S>(rng, f);
        d.c[0] = detail::scalar_zero<S>();
        m.at(i, i) = d;
        for (int j = i + 1; j < n; ++j) {
            auto v = random_hc<S>(rng, f);
            m.at(i, j) = v;
            m.at(j, i) = -hc_conj(v);
        }
    }
    return m;
}

// Rational point on the unit sphere of Q^dim (stereographic parametrization:
// (2r, |r|^2 - 1) / (|r|^2 + 1) is a unit vector for any rational r).
inline std::vector<Rat> rational_unit_vector(Rng& rng, int dim) {
    while (true) {
        std::vector<Rat> r(dim - 1);
        Rat n2(0);
        for (auto& v : r) {
            v = rng.rat_small(4, 1);
            n2 += v * v;
        }
        const Rat denom = n2 + Rat(1);
        std::vector<Rat> out(dim);
        for (int k = 0; k + 1 < dim; ++k) out[k] = Rat(2) * r[k] / denom;
        out[dim - 1] = (n2 - Rat(1)) / denom;
        bool nonzero = false;
        for (auto& v : out) nonzero = nonzero || !v.is_zero();
        if (nonzero) return out;
    }
}

}  // namespace kvf
