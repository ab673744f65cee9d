#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "kvf/rational.hpp"

namespace kvf {

// The four normed division algebras reachable by Cayley-Dickson doubling.
enum class Field : uint8_t { R = 0, C = 1, H = 2, O = 3 };

constexpr int field_dim(Field f) { return 1 << static_cast<int>(f); }

inline const char* field_name(Field f) {
    switch (f) {
        case Field::R: return "R";
        case Field::C: return "C";
        case Field::H: return "H";
        case Field::O: return "O";
    }
    return "?";
}

namespace detail {
template <class S> inline S scalar_zero() { return S(0); }
template <class S> inline S scalar_one() { return S(1); }
template <class S> inline bool scalar_is_zero(const S& v) { return v == S(0); }
template <class S> inline double scalar_to_double(const S& v) { return double(v); }
template <> inline double scalar_to_double<Rat>(const Rat& v) { return v.to_double(); }
}  // namespace detail

// A scalar of R/C/H/O as a coefficient vector, multiplied by the
// Cayley-Dickson rule (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
// S is the coefficient type: Rat for exact work, double for numerics.
template <class S>
struct HyperComplex {
    Field field = Field::R;
    std::array<S, 8> c{};

    HyperComplex() { c.fill(detail::scalar_zero<S>()); }
    explicit HyperComplex(Field f) : field(f) { c.fill(detail::scalar_zero<S>()); }
    HyperComplex(Field f, const S& real) : HyperComplex(f) { c[0] = real; }

    int dim() const { return field_dim(field); }

    static HyperComplex zero(Field f) { return HyperComplex(f); }
    static HyperComplex one(Field f) { return HyperComplex(f, detail::scalar_one<S>()); }
    // Basis unit e_k, 0 <= k < dim (e_0 is the real unit).
    static HyperComplex unit(Field f, int k) {
        HyperComplex h(f);
        if (k < 0 || k >= h.dim()) throw std::invalid_argument("hypercomplex unit index");
        h.c[k] = detail::scalar_one<S>();
        return h;
    }

    const S& re() const { return c[0]; }

    bool is_zero() const {
        for (int k = 0; k < dim(); ++k)
            if (!detail::scalar_is_zero(c[k])) return false;
        return true;
    }
    bool is_real() const {
        for (int k = 1; k < dim(); ++k)
            if (!detail::scalar_is_zero(c[k])) return false;
        return true;
    }
    bool is_imaginary() const { return detail::scalar_is_zero(c[0]); }

    S norm2() const {
        S s = detail::scalar_zero<S>();
        for (int k = 0; k < dim(); ++k) s += c[k] * c[k];
        return s;
    }

    double abs() const { return std::sqrt(detail::scalar_to_double(norm2())); }

    friend HyperComplex operator+(const HyperComplex& a, const HyperComplex& b) {
        check_same(a, b);
        HyperComplex r(a.field);
        for (int k = 0; k < r.dim(); ++k) r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    friend HyperComplex operator-(const HyperComplex& a, const HyperComplex& b) {
        check_same(a, b);
        HyperComplex r(a.field);
        for (int k = 0; k < r.dim(); ++k) r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    HyperComplex operator-() const {
        HyperComplex r(field);
        for (int k = 0; k < dim(); ++k) r.c[k] = -c[k];
        return r;
    }
    HyperComplex& operator+=(const HyperComplex& b) { return *this = *this + b; }
    HyperComplex& operator-=(const HyperComplex& b) { return *this = *this - b; }

    friend HyperComplex operator*(const S& s, const HyperComplex& a) {
        HyperComplex r(a.field);
        for (int k = 0; k < r.dim(); ++k) r.c[k] = s * a.c[k];
        return r;
    }

    friend bool operator==(const HyperComplex& a, const HyperComplex& b) {
        if (a.field != b.field) return false;
        for (int k = 0; k < a.dim(); ++k)
            if (!(a.c[k] == b.c[k])) return false;
        return true;
    }
    friend bool operator!=(const HyperComplex& a, const HyperComplex& b) { return !(a == b); }

    static void check_same(const HyperComplex& a, const HyperComplex& b) {
        if (a.field != b.field) throw std::invalid_argument("hypercomplex field tag mismatch");
    }
};

namespace detail {

template <class S>
void cd_conj(const S* in, S* out, int len) {
    out[0] = in[0];
    for (int k = 1; k < len; ++k) out[k] = -in[k];
}

// Recursive Cayley-Dickson product on coefficient blocks of length len.
template <class S>
void cd_mul(const S* a, const S* b, S* out, int len) {
    if (len == 1) {
        out[0] = a[0] * b[0];
        return;
    }
    const int h = len / 2;
    const S* a1 = a;
    const S* a2 = a + h;
    const S* b1 = b;
    const S* b2 = b + h;
    std::array<S, 4> buf1{}, buf2{}, conj{};
    // out1 = a1*b1 - conj(b2)*a2
    cd_mul(a1, b1, out, h);
    cd_conj(b2, conj.data(), h);
    cd_mul(conj.data(), a2, buf1.data(), h);
    for (int k = 0; k < h; ++k) out[k] = out[k] - buf1[k];
    // out2 = b2*a1 + a2*conj(b1)
    cd_mul(b2, a1, out + h, h);
    cd_conj(b1, conj.data(), h);
    cd_mul(a2, conj.data(), buf2.data(), h);
    for (int k = 0; k < h; ++k) out[h + k] = out[h + k] + buf2[k];
}

}  // namespace detail

template <class S>
HyperComplex<S> hc_mul(const HyperComplex<S>& a, const HyperComplex<S>& b) {
    HyperComplex<S>::check_same(a, b);
    HyperComplex<S> r(a.field);
    detail::cd_mul(a.c.data(), b.c.data(), r.c.data(), a.dim());
    return r;
}

template <class S>
HyperComplex<S> hc_conj(const HyperComplex<S>& a) {
    HyperComplex<S> r(a.field);
    detail::cd_conj(a.c.data(), r.c.data(), a.dim());
    return r;
}

// Widen a scalar into a larger field (R c C c H c O).
template <class S>
HyperComplex<S> hc_cast(const HyperComplex<S>& a, Field f) {
    if (field_dim(f) < a.dim()) throw std::invalid_argument("hypercomplex narrowing cast");
    HyperComplex<S> r(f);
    for (int k = 0; k < a.dim(); ++k) r.c[k] = a.c[k];
    return r;
}

inline HyperComplex<double> hc_to_double(const HyperComplex<Rat>& a) {
    HyperComplex<double> r(a.field);
    for (int k = 0; k < a.dim(); ++k) r.c[k] = a.c[k].to_double();
    return r;
}

}  // namespace kvf
