#include "kvf/homspace.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <type_traits>

#include "kvf/linalg.hpp"
#include "kvf/spin9.hpp"

namespace kvf {

Field family_field(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::SO: return Field::R;
        case FamilyKind::U: return Field::C;
        case FamilyKind::SU: return Field::C;
        case FamilyKind::Sp: return Field::H;
        case FamilyKind::SpSplit: return Field::H;
        case FamilyKind::Spin9: return Field::R;
    }
    throw std::logic_error("bad family kind");
}

std::string family_name(const Family& f) {
    switch (f.kind) {
        case FamilyKind::SO: return "so";
        case FamilyKind::U: return "u";
        case FamilyKind::SU: return "su";
        case FamilyKind::Sp: return "sp";
        case FamilyKind::SpSplit: return "sp-split";
        case FamilyKind::Spin9: return "spin9";
    }
    return "?";
}

Family parse_family(const std::string& name, int n) {
    Family f;
    f.n = n;
    if (name == "so")
        f.kind = FamilyKind::SO;
    else if (name == "u")
        f.kind = FamilyKind::U;
    else if (name == "su")
        f.kind = FamilyKind::SU;
    else if (name == "sp")
        f.kind = FamilyKind::Sp;
    else if (name == "sp-split")
        f.kind = FamilyKind::SpSplit;
    else if (name == "spin9")
        f.kind = FamilyKind::Spin9;
    else
        throw std::invalid_argument("unknown family: " + name);
    if (f.kind != FamilyKind::Spin9 && n < 1) throw std::invalid_argument("family needs n >= 1");
    return f;
}

int family_sphere_dim(const Family& f) {
    if (f.kind == FamilyKind::Spin9) return 15;
    return field_dim(family_field(f.kind)) * (f.n + 1) - 1;
}

namespace {

RatMatrix p1_element(Field f, int msize, int row, int unit) {
    RatMatrix X(f, msize);
    auto u = HyperComplex<Rat>::unit(f, unit);
    X.at(row, 0) = u;
    X.at(0, row) = -hc_conj(u);
    return X;
}

}  // namespace

Decomposition::Decomposition(Family family) : family_(family) {
    field_ = family_field(family.kind);
    if (family.kind == FamilyKind::Spin9) {
        msize_ = 16;
        build_spin9();
    } else {
        msize_ = family.n + 1;
        build_matrix_family();
    }
    finish_build();
    verify_build();
}

void Decomposition::build_matrix_family() {
    const int n = family_.n;
    const Field f = field_;
    const int d = field_dim(f);

    // p1 = first-column blocks over F^n.
    for (int row = 1; row <= n; ++row)
        for (int unit = 0; unit < d; ++unit) p1_.push_back(p1_element(f, msize_, row, unit));

    // p2 = imaginary corner entries (absent over R), split for sp-split.
    switch (family_.kind) {
        case FamilyKind::SO: break;
        case FamilyKind::U: {
            RatMatrix Y(f, msize_);
            Y.at(0, 0) = HyperComplex<Rat>::unit(f, 1);
            p2_.push_back(Y);
            break;
        }
        case FamilyKind::SU: {
            RatMatrix Y(f, msize_);
            Y.at(0, 0) = Rat(n) * HyperComplex<Rat>::unit(f, 1);
            for (int a = 1; a <= n; ++a) Y.at(a, a) = -HyperComplex<Rat>::unit(f, 1);
            p2_.push_back(Y);
            break;
        }
        case FamilyKind::Sp:
        case FamilyKind::SpSplit: {
            for (int unit = 1; unit <= 3; ++unit) {
                RatMatrix Y(f, msize_);
                Y.at(0, 0) = HyperComplex<Rat>::unit(f, unit);
                p2_.push_back(Y);
                if (family_.kind == FamilyKind::SpSplit) {
                    if (unit == 1)
                        p22_.push_back(Y);  // R i
                    else
                        p21_.push_back(Y);  // R j + R k
                }
            }
            break;
        }
        case FamilyKind::Spin9: break;
    }

    // h = the isotropy block on rows/columns 1..n.
    auto push_h = [&](const RatMatrix& m) { h_.push_back(m); };
    const bool su = family_.kind == FamilyKind::SU;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            RatMatrix A(f, msize_);
            A.at(a, b) = HyperComplex<Rat>::one(f);
            A.at(b, a) = -HyperComplex<Rat>::one(f);
            push_h(A);
            for (int unit = 1; unit < d; ++unit) {
                RatMatrix B(f, msize_);
                B.at(a, b) = HyperComplex<Rat>::unit(f, unit);
                B.at(b, a) = HyperComplex<Rat>::unit(f, unit);
                push_h(B);
            }
        }
    if (su) {
        for (int a = 1; a < n; ++a) {
            RatMatrix Dg(f, msize_);
            Dg.at(a, a) = HyperComplex<Rat>::unit(f, 1);
            Dg.at(a + 1, a + 1) = -HyperComplex<Rat>::unit(f, 1);
            push_h(Dg);
        }
    } else {
        for (int a = 1; a <= n; ++a)
            for (int unit = 1; unit < d; ++unit) {
                RatMatrix Dg(f, msize_);
                Dg.at(a, a) = HyperComplex<Rat>::unit(f, unit);
                push_h(Dg);
            }
    }
}

void Decomposition::build_spin9() {
    const auto& emb = SpinEmbedding::get();
    for (const auto& b : emb.h_basis()) h_.push_back(emb.theta(b));
    for (const auto& b : emb.p1_basis()) p1_.push_back(emb.theta(b));
    for (const auto& b : emb.p2_basis()) p2_.push_back(emb.theta(b));
}

void Decomposition::finish_build() {
    auto fill = [&](const std::vector<RatMatrix>& basis, std::vector<DMatrix>& dbl, int slot) {
        for (const auto& m : basis) dbl.push_back(to_double(m));
        if (basis.empty()) return;
        const int k = int(basis.size());
        linalg::RatRows G(k, linalg::RatVec(k, Rat(0)));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) G[a][b] = inner(basis[a], basis[b]);
        gram_inv_[slot] = linalg::inverse(G);
    };
    fill(h_, hd_, 0);
    fill(p1_, p1d_, 1);
    fill(p2_, p2d_, 2);
    fill(p21_, p21d_, 3);
    fill(p22_, p22d_, 4);
}

const std::vector<RatMatrix>& Decomposition::basis(Part p) const {
    switch (p) {
        case Part::H: return h_;
        case Part::P1: return p1_;
        case Part::P2: return p2_;
        case Part::P21: return p21_;
        case Part::P22: return p22_;
    }
    throw std::logic_error("bad part");
}

const std::vector<DMatrix>& Decomposition::basis_d(Part p) const {
    switch (p) {
        case Part::H: return hd_;
        case Part::P1: return p1d_;
        case Part::P2: return p2d_;
        case Part::P21: return p21d_;
        case Part::P22: return p22d_;
    }
    throw std::logic_error("bad part");
}

namespace {
int part_slot(Part p) {
    switch (p) {
        case Part::H: return 0;
        case Part::P1: return 1;
        case Part::P2: return 2;
        case Part::P21: return 3;
        case Part::P22: return 4;
    }
    return 0;
}
}  // namespace

RatMatrix Decomposition::project(const RatMatrix& U, Part p) const {
    if (U.n != msize_ || U.field != field_) throw std::invalid_argument("wrong ambient size");
    const auto& basis_list = basis(p);
    RatMatrix out(field_, msize_);
    if (basis_list.empty()) return out;
    const auto& G = gram_inv_[part_slot(p)];
    const int k = int(basis_list.size());
    std::vector<Rat> rhs(k);
    for (int a = 0; a < k; ++a) rhs[a] = inner(basis_list[a], U);
    for (int a = 0; a < k; ++a) {
        Rat coef(0);
        for (int b = 0; b < k; ++b) coef += G[a][b] * rhs[b];
        if (!coef.is_zero()) out = out + coef * basis_list[a];
    }
    return out;
}

DMatrix Decomposition::project(const DMatrix& U, Part p) const {
    if (U.n != msize_ || U.field != field_) throw std::invalid_argument("wrong ambient size");
    const auto& basis_list = basis_d(p);
    DMatrix out(field_, msize_);
    if (basis_list.empty()) return out;
    const auto& G = gram_inv_[part_slot(p)];
    const int k = int(basis_list.size());
    std::vector<double> rhs(k);
    for (int a = 0; a < k; ++a) rhs[a] = inner(basis_list[a], U);
    for (int a = 0; a < k; ++a) {
        double coef = 0;
        for (int b = 0; b < k; ++b) coef += G[a][b].to_double() * rhs[b];
        if (coef != 0.0)
            for (size_t m = 0; m < out.e.size(); ++m)
                for (int q = 0; q < out.e[m].dim(); ++q)
                    out.e[m].c[q] += coef * basis_list[a].e[m].c[q];
    }
    return out;
}

bool Decomposition::in_p(const RatMatrix& U) const { return project(U, Part::H).is_zero(); }

double Decomposition::h_component_norm(const DMatrix& U) const {
    return frobenius_norm(project(U, Part::H));
}

std::vector<HyperComplex<Rat>> Decomposition::base_point() const {
    std::vector<HyperComplex<Rat>> x0(msize_, HyperComplex<Rat>(field_));
    x0[0] = HyperComplex<Rat>::one(field_);
    return x0;
}

void Decomposition::verify_build() const {
    // Expected dimensions.
    const int n = family_.n;
    size_t dim_h = 0, dim_p1 = 0, dim_p2 = 0;
    switch (family_.kind) {
        case FamilyKind::SO:
            dim_h = size_t(n) * (n - 1) / 2;
            dim_p1 = size_t(n);
            dim_p2 = 0;
            break;
        case FamilyKind::U:
            dim_h = size_t(n) * n;
            dim_p1 = 2 * size_t(n);
            dim_p2 = 1;
            break;
        case FamilyKind::SU:
            dim_h = size_t(n) * n - 1;
            dim_p1 = 2 * size_t(n);
            dim_p2 = 1;
            break;
        case FamilyKind::Sp:
        case FamilyKind::SpSplit:
            dim_h = size_t(n) * (2 * n + 1);
            dim_p1 = 4 * size_t(n);
            dim_p2 = 3;
            break;
        case FamilyKind::Spin9:
            dim_h = 21;
            dim_p1 = 8;
            dim_p2 = 7;
            break;
    }
    if (h_.size() != dim_h || p1_.size() != dim_p1 || p2_.size() != dim_p2)
        throw std::logic_error("decomposition dimensions are off for " + family_name(family_));
    if (family_.kind == FamilyKind::SpSplit && (p21_.size() != 2 || p22_.size() != 1))
        throw std::logic_error("sp-split subdivision is off");

    // Cross-part orthogonality and skewness.
    auto check_orth = [&](const std::vector<RatMatrix>& A, const std::vector<RatMatrix>& B) {
        for (const auto& a : A)
            for (const auto& b : B)
                if (!(inner(a, b) == Rat(0))) throw std::logic_error("parts are not orthogonal");
    };
    check_orth(h_, p1_);
    check_orth(h_, p2_);
    check_orth(p1_, p2_);
    for (const auto* part : {&h_, &p1_, &p2_})
        for (const auto& m : *part)
            if (!m.is_skew_hermitian()) throw std::logic_error("basis element is not skew");

    // Isotropy: h annihilates x0, p maps onto the tangent space injectively.
    const auto x0 = base_point();
    for (const auto& m : h_) {
        auto y = m.apply(x0);
        for (const auto& v : y)
            if (!v.is_zero()) throw std::logic_error("h fails to annihilate the base point");
    }
}

Rat metric_coeff(const Metric& m, Part p) {
    if (p == Part::H) throw std::invalid_argument("metric is defined on p only");
    switch (m.family.kind) {
        case FamilyKind::SO: return Rat(1);
        case FamilyKind::U:
        case FamilyKind::Sp:
            return p == Part::P1 ? Rat(1) : Rat(2) * m.t;
        case FamilyKind::SU: {
            if (p == Part::P1) return Rat(1);
            const Rat n(m.family.n);
            return Rat(2) * n * m.t / (n + Rat(1));
        }
        case FamilyKind::SpSplit:
            if (p == Part::P1) return Rat(1);
            if (p == Part::P21) return Rat(2) * m.t;
            if (p == Part::P22) return Rat(2) * m.s;
            return Rat(2) * m.t;  // undivided p2 only meaningful when s = t
        case FamilyKind::Spin9:
            return p == Part::P1 ? Rat(1, 8) : m.t / Rat(2);
    }
    throw std::logic_error("bad family kind");
}

namespace {
template <class S, class MatT>
S metric_inner_impl(const Metric& m, const Decomposition& D, const MatT& X, const MatT& Y) {
    std::vector<Part> parts;
    if (m.family.kind == FamilyKind::SpSplit)
        parts = {Part::P1, Part::P21, Part::P22};
    else if (m.family.kind == FamilyKind::SO)
        parts = {Part::P1};
    else
        parts = {Part::P1, Part::P2};
    S acc = detail::scalar_zero<S>();
    for (Part p : parts) {
        auto xp = D.project(X, p);
        auto yp = D.project(Y, p);
        S coef;
        if constexpr (std::is_same_v<S, Rat>)
            coef = metric_coeff(m, p);
        else
            coef = metric_coeff(m, p).to_double();
        acc += coef * inner(xp, yp);
    }
    return acc;
}
}  // namespace

Rat metric_inner(const Metric& m, const Decomposition& D, const RatMatrix& X, const RatMatrix& Y) {
    if (!D.in_p(X) || !D.in_p(Y))
        throw std::invalid_argument("metric arguments must lie in p (no h component)");
    return metric_inner_impl<Rat>(m, D, X, Y);
}

double metric_inner(const Metric& m, const Decomposition& D, const DMatrix& X, const DMatrix& Y) {
    const double scale = std::max({1.0, frobenius_norm(X), frobenius_norm(Y)});
    if (D.h_component_norm(X) > 1e-9 * scale || D.h_component_norm(Y) > 1e-9 * scale)
        throw std::invalid_argument("metric arguments must lie in p (no h component)");
    return metric_inner_impl<double>(m, D, X, Y);
}

Rat metric_p_norm2(const Metric& m, const Decomposition& D, const RatMatrix& W) {
    return metric_inner_impl<Rat>(m, D, W, W);
}

double metric_p_norm2(const Metric& m, const Decomposition& D, const DMatrix& W) {
    return metric_inner_impl<double>(m, D, W, W);
}

Rat metric_p_pairing(const Metric& m, const Decomposition& D, const RatMatrix& A,
                     const RatMatrix& B) {
    return metric_inner_impl<Rat>(m, D, A, B);
}

const Decomposition& cached_decomposition(const Family& f) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Decomposition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(int(f.kind), f.kind == FamilyKind::Spin9 ? 0 : f.n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Decomposition>(f)).first;
    return *it->second;
}

}  // namespace kvf
