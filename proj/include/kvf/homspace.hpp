#pragma once

#include <string>
#include <vector>

#include "kvf/matrix.hpp"

namespace kvf {

// Sphere presentations handled by the toolkit. `n` is the subscript in
// U_F(n+1)/U_F(n); the Spin9 family is fixed at S^15 inside so(16).
enum class FamilyKind { SO, U, SU, Sp, SpSplit, Spin9 };

struct Family {
    FamilyKind kind = FamilyKind::U;
    int n = 1;
};

Field family_field(FamilyKind kind);
std::string family_name(const Family& f);
// CLI names: so, u, su, sp, sp-split, spin9.
Family parse_family(const std::string& name, int n);
// Dimension of the sphere the family acts on.
int family_sphere_dim(const Family& f);

enum class Part { H, P1, P2, P21, P22 };

// Orthogonal reductive decomposition g = h + p1 + p2 (+ the split of p2 for
// the Sp(n+1) x U(1) family). Bases are exact and orthogonal across parts;
// h annihilates the base point x0 = (1,0,...,0)^T.
class Decomposition {
  public:
    explicit Decomposition(Family family);

    const Family& family() const { return family_; }
    Field field() const { return field_; }
    int matrix_size() const { return msize_; }

    const std::vector<RatMatrix>& basis(Part p) const;
    const std::vector<DMatrix>& basis_d(Part p) const;

    RatMatrix project(const RatMatrix& U, Part p) const;
    DMatrix project(const DMatrix& U, Part p) const;

    // Component of the h part; used to validate p-membership.
    bool in_p(const RatMatrix& U) const;
    double h_component_norm(const DMatrix& U) const;

    // x0 as a column over the family's field.
    std::vector<HyperComplex<Rat>> base_point() const;

    bool has_part(Part p) const { return !basis(p).empty(); }

  private:
    Family family_;
    Field field_;
    int msize_;
    std::vector<RatMatrix> h_, p1_, p2_, p21_, p22_;
    std::vector<DMatrix> hd_, p1d_, p2d_, p21d_, p22d_;
    std::vector<std::vector<Rat>> gram_inv_[5];

    void build_matrix_family();
    void build_spin9();
    void finish_build();
    void verify_build() const;
};

// Diagonal invariant metric on p. The coefficient pattern per family:
//   so:        <.,.> on p1
//   u, sp:     <.,.>|p1 + 2t <.,.>|p2
//   su:        <.,.>|p1 + (2nt/(n+1)) <.,.>|p2
//   sp-split:  <.,.>|p1 + 2t <.,.>|p21 + 2s <.,.>|p22
//   spin9:     (1/8) <.,.>|p1 + (t/2) <.,.>|p2
struct Metric {
    Family family;
    Rat t = Rat(1);
    Rat s = Rat(1);
};

Rat metric_coeff(const Metric& m, Part p);

// Inner product of two p-elements under the metric; throws when an argument
// has an h component (beyond 1e-9 in the numeric overload).
Rat metric_inner(const Metric& m, const Decomposition& D, const RatMatrix& X, const RatMatrix& Y);
double metric_inner(const Metric& m, const Decomposition& D, const DMatrix& X, const DMatrix& Y);

// Squared metric norm of the p component (no membership requirement).
Rat metric_p_norm2(const Metric& m, const Decomposition& D, const RatMatrix& W);
double metric_p_norm2(const Metric& m, const Decomposition& D, const DMatrix& W);

// Metric pairing of the p components of two ambient elements.
Rat metric_p_pairing(const Metric& m, const Decomposition& D, const RatMatrix& A,
                     const RatMatrix& B);

// Shared immutable decompositions, built once per family.
const Decomposition& cached_decomposition(const Family& f);

}  // namespace kvf
