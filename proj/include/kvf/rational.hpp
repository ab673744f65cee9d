#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace kvf {

// Exact rational arithmetic on 128-bit numerator/denominator. Every value is
// stored reduced with a positive denominator. Operations that would leave the
// 128-bit range throw instead of wrapping, so a result that comes back is
// always exact.
class Rat {
  public:
    using Int = __int128;

    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) { assign(Int(n), Int(d)); }

    static Rat from_int128(Int n, Int d) {
        Rat r;
        r.assign(n, d);
        return r;
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    int sgn() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from_int128(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                           checked_mul(a.den_, b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from_int128(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                           checked_mul(a.den_, b.den_));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        // Cross-reduce first to keep the products small.
        Int g1 = gcd128(abs128(a.num_), b.den_);
        Int g2 = gcd128(abs128(b.num_), a.den_);
        return from_int128(checked_mul(a.num_ / g1, b.num_ / g2),
                           checked_mul(a.den_ / g2, b.den_ / g1));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        Int g1 = gcd128(abs128(a.num_), abs128(b.num_));
        Int g2 = gcd128(b.den_, a.den_);
        Int n = checked_mul(a.num_ / g1, b.den_ / g2);
        Int d = checked_mul(a.den_ / g2, b.num_ / g1);
        return from_int128(n, d);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        std::string s = int128_str(num_);
        if (den_ != 1) s += "/" + int128_str(den_);
        return s;
    }

    // Exact square root when the value is a perfect square of a rational.
    std::optional<Rat> sqrt_exact() const {
        if (num_ < 0) return std::nullopt;
        auto rn = isqrt128(num_);
        auto rd = isqrt128(den_);
        if (!rn || !rd) return std::nullopt;
        return from_int128(*rn, *rd);
    }

    // Exact conversion of a finite double (doubles are dyadic rationals).
    static Rat from_double_exact(double x);

    static Int gcd_int(Int a, Int b) { return gcd128(a, b); }

    static std::string int128_str(Int v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
        std::string s;
        while (u > 0) {
            s.insert(s.begin(), char('0' + int(u % 10)));
            u /= 10;
        }
        if (neg) s.insert(s.begin(), '-');
        return s;
    }

  private:
    Int num_, den_;

    void assign(Int n, Int d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Int g = gcd128(abs128(n), d);
        num_ = n / g;
        den_ = d / g;
    }

    static Int abs128(Int v) { return v < 0 ? -v : v; }

    static Int gcd128(Int a, Int b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static Int checked_mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow (mul)");
        return r;
    }
    static Int checked_add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow (add)");
        return r;
    }
    static Int checked_sub(Int a, Int b) {
        Int r;
        if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("rational overflow (sub)");
        return r;
    }

    static std::optional<Int> isqrt128(Int v) {
        if (v < 0) return std::nullopt;
        if (v == 0) return Int(0);
        // Newton iteration seeded from a double estimate.
        Int x = Int(__builtin_sqrt(double(v))) + 1;
        while (x * x > v) x = (x + v / x) / 2;
        if (x * x == v) return x;
        if ((x + 1) * (x + 1) == v) return x + 1;
        return std::nullopt;
    }
};

inline Rat Rat::from_double_exact(double x) {
    if (x == 0.0) return Rat(0);
    // Decompose x = m * 2^e with integral m.
    int e = 0;
    double m = std::frexp(x, &e);
    // 53 mantissa bits make m * 2^53 integral.
    m = std::ldexp(m, 53);
    e -= 53;
    Int num = Int(m);
    if (e >= 0) {
        for (int i = 0; i < e; ++i) num = checked_mul(num, 2);
        return from_int128(num, 1);
    }
    Int den = 1;
    for (int i = 0; i < -e; ++i) den = checked_mul(den, 2);
    return from_int128(num, den);
}

}  // namespace kvf
