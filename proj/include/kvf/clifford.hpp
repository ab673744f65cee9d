#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kvf/matrix.hpp"

namespace kvf {

// Exact element of the Clifford algebra Cl^n (n <= 9) for the negative of the
// standard form: generators satisfy e_i e_i = -1, e_i e_j = -e_j e_i. Basis
// monomials are subsets of {1..n} stored as bitmasks (bit i-1 marks e_i); the
// empty subset is the scalar 1.
class Clifford {
  public:
    static constexpr int kMaxDim = 9;

    Clifford() = default;
    explicit Clifford(int n);
    static Clifford scalar(int n, const Rat& value);
    static Clifford generator(int n, int i);  // e_i, 1-based
    static Clifford monomial(int n, uint16_t mask, const Rat& coeff);
    // Grade-1 embedding of a vector of R^n.
    static Clifford vector(int n, const std::vector<Rat>& v);

    int dim() const { return n_; }
    const std::map<uint16_t, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Nonzero only on subsets of a single grade?

    Rat coeff(uint16_t mask) const;
    void set(uint16_t mask, const Rat& value);  // drops explicit zeros

    std::optional<Rat> scalar_part_if_pure() const;  // value iff supported on {} only
    bool is_grade(int g) const;
    int max_grade() const;

    friend Clifford operator+(const Clifford& a, const Clifford& b);
    friend Clifford operator-(const Clifford& a, const Clifford& b);
    Clifford operator-() const;
    friend Clifford operator*(const Rat& s, const Clifford& a);
    friend bool operator==(const Clifford& a, const Clifford& b);

    std::string str() const;

  private:
    int n_ = kMaxDim;
    std::map<uint16_t, Rat> terms_;

    static void check_same(const Clifford& a, const Clifford& b);
    friend Clifford cl_mul(const Clifford&, const Clifford&);
};

// Product in Cl^n; associative, determined by the defining relation.
Clifford cl_mul(const Clifford& x, const Clifford& y);

// Product of two basis monomials: resulting mask and sign.
std::pair<uint16_t, int> basis_mul(uint16_t a, uint16_t b);

Clifford parse_clifford(const std::string& s, int n);

// Grade-2 element of Cl^n recorded by its components gamma_{ij}, i < j.
class Bivector {
  public:
    Bivector() = default;
    explicit Bivector(int n) : n_(n) {}
    static Bivector from_clifford(const Clifford& x);  // throws unless grade 2 (or zero)
    static Bivector basis(int n, int i, int j);        // e_i e_j, i < j

    int dim() const { return n_; }
    const std::map<std::pair<int, int>, Rat>& gamma() const { return gamma_; }
    Rat component(int i, int j) const;  // antisymmetric lookup
    void set(int i, int j, const Rat& value);

    Clifford to_clifford() const;
    bool is_zero() const { return gamma_.empty(); }

    friend Bivector operator+(const Bivector& a, const Bivector& b);
    friend Bivector operator-(const Bivector& a, const Bivector& b);
    Bivector operator-() const;
    friend Bivector operator*(const Rat& s, const Bivector& a);
    friend bool operator==(const Bivector& a, const Bivector& b);

    std::string str() const { return to_clifford().str(); }

  private:
    int n_ = Clifford::kMaxDim;
    std::map<std::pair<int, int>, Rat> gamma_;
};

// v.w for orthogonal v, w (the components follow the bivector rule
// gamma_ij = v_i w_j - w_i v_j). Throws when (v,w) != 0.
Bivector bivector_from_vectors(const std::vector<Rat>& v, const std::vector<Rat>& w);

// Lie bracket [W,V] = W.V - V.W, computed in Cl^n; closed on bivectors.
Bivector bivector_bracket(const Bivector& a, const Bivector& b);

// Simplicity certificate: W is a product of two orthogonal vectors iff
// W.W = -C^2 with C >= 0; c2 is exact, c its numeric square root.
struct SimpleCertificate {
    Rat c2;
    double c;
};
std::optional<SimpleCertificate> is_simple(const Bivector& W);

// The Lie isomorphism spin(n) -> so(n), f_i f_j -> 2(E_ji - E_ij).
RatMatrix spin_to_so(const Bivector& W);

// <U,V> = 8 sum gamma^U_ij gamma^V_ij on spin(9).
Rat spin9_inner(const Bivector& U, const Bivector& V);

}  // namespace kvf
