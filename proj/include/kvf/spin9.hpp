#pragma once

#include <vector>

#include "kvf/clifford.hpp"
#include "kvf/report.hpp"

namespace kvf {

// Certificate for a constructed constant-length field on S^15: W in spin(9)
// with theta(W) x0 = u and theta(W)^2 = -c2 Id, verified exactly.
struct Spin9FieldCert {
    Bivector W;
    Rat c2;
    bool exact = false;      // residual identically zero in rational arithmetic
    double residual = 0.0;   // max |entry| of theta(W)^2 + c2 Id
    int block_equations = 0;       // scalar equations checked on the lower 15x15 block
    int block_equation_failures = 0;
};

// The spinor embedding theta: spin(9) -> so(16), realized through the action
// of the octonions on O + O:  phi(x)(a,b) = (x b, -conj(x) a).  Grade-1
// generators of Cl^8 are the eight octonion basis units (the real unit
// included), theta(e_i e_9) = phi(i-1) and theta(e_i e_j) = phi(i-1) phi(j-1).
// Everything is integer-valued and verified at construction.
class SpinEmbedding {
  public:
    // Built once on first use; immutable afterwards.
    static const SpinEmbedding& get();

    // Octonion structure.
    const HyperComplex<Rat>& oct_product(int p, int q) const { return oct_[p][q]; }
    std::string octonion_table_text() const;

    const RatMatrix& phi(int p) const;  // p in 0..7
    const RatMatrix& theta_pair(int i, int j) const;  // 1 <= i < j <= 9

    // Linear extension over the 36 basis bivectors; bracket-preserving.
    RatMatrix theta(const Bivector& W) const;
    DMatrix theta_d(const Bivector& W) const;

    // Orthogonal decomposition spin(9) = h + p2 + p1 with h the stabilizer
    // of x0 = (1,0,...,0), p2 its orthocomplement inside spin(8), and
    // p1 = span{ e_i e_9 }.
    const std::vector<Bivector>& h_basis() const { return h_basis_; }
    const std::vector<Bivector>& p2_basis() const { return p2_basis_; }
    const std::vector<Bivector>& p1_basis() const { return p1_basis_; }

    // gamma-orthogonal projections onto the parts (the invariant inner
    // product is 8 x the gamma dot product, so they coincide).
    Bivector project_h(const Bivector& W) const;
    Bivector project_p1(const Bivector& W) const;
    Bivector project_p2(const Bivector& W) const;

    // theta(W) x0 as a 16-vector.
    std::vector<Rat> tangent_of(const Bivector& W) const;
    // Inverse of W in p -> theta(W) x0 (u must have u[0] = 0).
    Bivector bivector_from_tangent(const std::vector<Rat>& u) const;

    // Constant-length field through a given tangent vector at x0.
    Spin9FieldCert cw_field(const std::vector<Rat>& u) const;

    // The printed spin(9) identities, checked in exact arithmetic.
    std::vector<CheckRecord> verify_identities() const;

  private:
    SpinEmbedding();

    HyperComplex<Rat> oct_[8][8];
    std::vector<RatMatrix> phi_;                 // 8 generators
    std::vector<std::vector<RatMatrix>> theta_;  // theta_[i][j], 1-based, i < j
    std::vector<Bivector> h_basis_, p2_basis_, p1_basis_;
    std::vector<std::vector<Rat>> tangent_inv_;  // 15x15 inverse of the p -> tangent map
    std::vector<std::vector<Rat>> h_gram_inv_, p2_gram_inv_;

    void build_octonions();
    void build_phi();
    void build_theta();
    void verify_build() const;
    void build_parts();
    std::vector<Rat> gamma_coords(const Bivector& W, bool spin8_only) const;
};

// Named vectors used by the printed identities.
Bivector spin9_X1();      // e7e8 - e1e2 - e3e4 - e5e6, spans a p2 direction
Bivector spin9_Y_comp();  // (e1e2+e7e8) + (e3e4+e7e8) + (e5e6+e7e8), in h
Bivector spin9_Z();       // -3e1e2 + e3e4 + e5e6 - e7e8, in h

// Product bivector of two orthogonal vectors of R^8 inside spin(9).
Bivector bivector_from_vectors_extended(const std::vector<Rat>& v8, const std::vector<Rat>& z8);

}  // namespace kvf
