#include "kvf/clifford.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "kvf/textio.hpp"

namespace kvf {

Clifford::Clifford(int n) : n_(n) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("Clifford dimension out of range");
}

Clifford Clifford::scalar(int n, const Rat& value) {
    Clifford x(n);
    x.set(0, value);
    return x;
}

Clifford Clifford::generator(int n, int i) {
    Clifford x(n);
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
    x.set(uint16_t(1u << (i - 1)), Rat(1));
    return x;
}

Clifford Clifford::monomial(int n, uint16_t mask, const Rat& coeff) {
    Clifford x(n);
    if (mask >= (1u << n)) throw std::invalid_argument("basis mask out of range");
    x.set(mask, coeff);
    return x;
}

Clifford Clifford::vector(int n, const std::vector<Rat>& v) {
    if (int(v.size()) != n) throw std::invalid_argument("vector length mismatch");
    Clifford x(n);
    for (int i = 0; i < n; ++i) x.set(uint16_t(1u << i), v[i]);
    return x;
}

Rat Clifford::coeff(uint16_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Clifford::set(uint16_t mask, const Rat& value) {
    if (value.is_zero())
        terms_.erase(mask);
    else
        terms_[mask] = value;
}

std::optional<Rat> Clifford::scalar_part_if_pure() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
    return std::nullopt;
}

bool Clifford::is_grade(int g) const {
    for (const auto& [mask, _] : terms_)
        if (std::popcount(unsigned(mask)) != g) return false;
    return true;
}

int Clifford::max_grade() const {
    int g = 0;
    for (const auto& [mask, _] : terms_) g = std::max(g, std::popcount(unsigned(mask)));
    return g;
}

void Clifford::check_same(const Clifford& a, const Clifford& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Clifford dimension mismatch");
}

Clifford operator+(const Clifford& a, const Clifford& b) {
    Clifford::check_same(a, b);
    Clifford r = a;
    for (const auto& [mask, c] : b.terms_) r.set(mask, r.coeff(mask) + c);
    return r;
}

Clifford operator-(const Clifford& a, const Clifford& b) {
    Clifford::check_same(a, b);
    Clifford r = a;
    for (const auto& [mask, c] : b.terms_) r.set(mask, r.coeff(mask) - c);
    return r;
}

Clifford Clifford::operator-() const {
    Clifford r(n_);
    for (const auto& [mask, c] : terms_) r.terms_[mask] = -c;
    return r;
}

Clifford operator*(const Rat& s, const Clifford& a) {
    Clifford r(a.n_);
    if (s.is_zero()) return r;
    for (const auto& [mask, c] : a.terms_) r.terms_[mask] = s * c;
    return r;
}

bool operator==(const Clifford& a, const Clifford& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::pair<uint16_t, int> basis_mul(uint16_t a, uint16_t b) {
    // Walk the generators of b in ascending order; each one hops over the
    // generators of a that are strictly greater (one transposition each),
    // then either squares against its copy in a (e_i e_i = -1) or joins.
    int swaps = 0;
    uint16_t acc = a;
    uint16_t rest = b;
    while (rest) {
        const int i = std::countr_zero(unsigned(rest));
        rest &= uint16_t(rest - 1);
        swaps += std::popcount(unsigned(acc) >> (i + 1));
        if (acc & (1u << i)) {
            swaps += 1;  // the square contributes -1
            acc &= uint16_t(~(1u << i));
        } else {
            acc |= uint16_t(1u << i);
        }
    }
    return {acc, (swaps & 1) ? -1 : +1};
}

Clifford cl_mul(const Clifford& x, const Clifford& y) {
    Clifford::check_same(x, y);
    Clifford r(x.n_);
    for (const auto& [ma, ca] : x.terms_)
        for (const auto& [mb, cb] : y.terms_) {
            auto [mask, sign] = basis_mul(ma, mb);
            Rat add = ca * cb;
            if (sign < 0) add = -add;
            r.set(mask, r.coeff(mask) + add);
        }
    return r;
}

std::string Clifford::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mask, c] : terms_) {
        const Rat a = c.abs();
        if (out.empty())
            out += c.is_negative() ? "-" : "";
        else
            out += c.is_negative() ? " - " : " + ";
        std::string mono;
        for (int i = 0; i < n_; ++i)
            if (mask & (1u << i)) mono += "e" + std::to_string(i + 1);
        if (mono.empty()) {
            out += a.str();
        } else {
            if (!(a == Rat(1))) out += a.str() + "*";
            out += mono;
        }
    }
    return out;
}

Clifford parse_clifford(const std::string& s0, int n) {
    std::string s;
    for (char ch : s0)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s.empty()) throw std::invalid_argument("empty Clifford literal");
    Clifford r(n);
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::string num;
        while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '/')) num += s[pos++];
        if (pos < s.size() && s[pos] == '*') ++pos;
        std::vector<int> idx;
        while (pos < s.size() && s[pos] == 'e') {
            ++pos;
            if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
                throw std::invalid_argument("bad Clifford literal: " + s0);
            idx.push_back(s[pos] - '0');
            ++pos;
        }
        // Normalize the monomial through the algebra itself so out-of-order
        // or repeated generators still parse.
        Clifford mono = Clifford::scalar(n, Rat(1));
        for (int i : idx) mono = cl_mul(mono, Clifford::generator(n, i));
        Rat coef = num.empty() ? Rat(1) : parse_rat(num);
        if (num.empty() && idx.empty()) throw std::invalid_argument("bad Clifford literal: " + s0);
        if (sign < 0) coef = -coef;
        r = r + coef * mono;
    }
    return r;
}

Bivector Bivector::from_clifford(const Clifford& x) {
    Bivector b(x.dim());
    for (const auto& [mask, c] : x.terms()) {
        if (std::popcount(unsigned(mask)) != 2)
            throw std::invalid_argument("not a bivector: " + x.str());
        const int i = std::countr_zero(unsigned(mask));
        const int j = std::countr_zero(unsigned(mask) & ~(1u << i));
        b.gamma_[{i + 1, j + 1}] = c;
    }
    return b;
}

Bivector Bivector::basis(int n, int i, int j) {
    Bivector b(n);
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("bivector basis indices");
    b.gamma_[{i, j}] = Rat(1);
    return b;
}

Rat Bivector::component(int i, int j) const {
    if (i == j) return Rat(0);
    if (i < j) {
        auto it = gamma_.find({i, j});
        return it == gamma_.end() ? Rat(0) : it->second;
    }
    return -component(j, i);
}

void Bivector::set(int i, int j, const Rat& value) {
    if (!(1 <= i && i < j && j <= n_)) throw std::invalid_argument("bivector component indices");
    if (value.is_zero())
        gamma_.erase({i, j});
    else
        gamma_[{i, j}] = value;
}

Clifford Bivector::to_clifford() const {
    Clifford x(n_);
    for (const auto& [ij, c] : gamma_)
        x.set(uint16_t((1u << (ij.first - 1)) | (1u << (ij.second - 1))), c);
    return x;
}

Bivector operator+(const Bivector& a, const Bivector& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("bivector dimension mismatch");
    Bivector r = a;
    for (const auto& [ij, c] : b.gamma_) {
        Rat v = r.component(ij.first, ij.second) + c;
        r.set(ij.first, ij.second, v);
    }
    return r;
}

Bivector operator-(const Bivector& a, const Bivector& b) { return a + (-b); }

Bivector Bivector::operator-() const {
    Bivector r(n_);
    for (const auto& [ij, c] : gamma_) r.gamma_[ij] = -c;
    return r;
}

Bivector operator*(const Rat& s, const Bivector& a) {
    Bivector r(a.n_);
    if (s.is_zero()) return r;
    for (const auto& [ij, c] : a.gamma_) r.gamma_[ij] = s * c;
    return r;
}

bool operator==(const Bivector& a, const Bivector& b) {
    return a.n_ == b.n_ && a.gamma_ == b.gamma_;
}

Bivector bivector_from_vectors(const std::vector<Rat>& v, const std::vector<Rat>& w) {
    if (v.size() != w.size()) throw std::invalid_argument("vector length mismatch");
    const int n = int(v.size());
    Rat dot(0);
    for (int i = 0; i < n; ++i) dot += v[i] * w[i];
    if (!dot.is_zero())
        throw std::invalid_argument(
            "vectors are not orthogonal; the product would carry the scalar term -2(v,w)");
    Bivector b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.set(i, j, v[i - 1] * w[j - 1] - w[i - 1] * v[j - 1]);
    return b;
}

Bivector bivector_bracket(const Bivector& a, const Bivector& b) {
    const Clifford pa = a.to_clifford(), pb = b.to_clifford();
    return Bivector::from_clifford(cl_mul(pa, pb) - cl_mul(pb, pa));
}

std::optional<SimpleCertificate> is_simple(const Bivector& W) {
    const Clifford sq = cl_mul(W.to_clifford(), W.to_clifford());
    auto s = sq.scalar_part_if_pure();
    if (!s) return std::nullopt;
    if (s->sgn() > 0) return std::nullopt;
    const Rat c2 = -*s;
    return SimpleCertificate{c2, std::sqrt(c2.to_double())};
}

RatMatrix spin_to_so(const Bivector& W) {
    RatMatrix m(Field::R, W.dim());
    for (const auto& [ij, g] : W.gamma()) {
        const int i = ij.first - 1, j = ij.second - 1;
        // f_i f_j -> 2 F_{ji} = 2(E_{ji} - E_{ij})
        m.at(j, i).c[0] += Rat(2) * g;
        m.at(i, j).c[0] -= Rat(2) * g;
    }
    return m;
}

Rat spin9_inner(const Bivector& U, const Bivector& V) {
    if (U.dim() != 9 || V.dim() != 9) throw std::invalid_argument("spin9_inner needs n = 9");
    Rat acc(0);
    for (const auto& [ij, g] : U.gamma()) acc += Rat(8) * g * V.component(ij.first, ij.second);
    return acc;
}

}  // namespace kvf
