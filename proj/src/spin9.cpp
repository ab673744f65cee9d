#include "kvf/spin9.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kvf/linalg.hpp"

namespace kvf {

namespace {

// Pair index helpers over 1 <= i < j <= 9 (36 pairs) and the spin(8) subset
// (28 pairs with j <= 8).
std::vector<std::pair<int, int>> all_pairs() {
    std::vector<std::pair<int, int>> p;
    for (int i = 1; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j) p.emplace_back(i, j);
    return p;
}

Bivector bivector_from_coords(const std::vector<Rat>& c) {
    Bivector W(9);
    const auto pairs = all_pairs();
    for (size_t k = 0; k < pairs.size(); ++k)
        if (!c[k].is_zero()) W.set(pairs[k].first, pairs[k].second, c[k]);
    return W;
}

}  // namespace

const SpinEmbedding& SpinEmbedding::get() {
    static const SpinEmbedding instance;
    return instance;
}

SpinEmbedding::SpinEmbedding() {
    build_octonions();
    build_phi();
    build_theta();
    verify_build();
    build_parts();
}

void SpinEmbedding::build_octonions() {
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q)
            oct_[p][q] = hc_mul(HyperComplex<Rat>::unit(Field::O, p),
                                HyperComplex<Rat>::unit(Field::O, q));
}

std::string SpinEmbedding::octonion_table_text() const {
    std::ostringstream out;
    for (int p = 0; p < 8; ++p) {
        for (int q = 0; q < 8; ++q) {
            const auto& v = oct_[p][q];
            int idx = -1, sgn = 0;
            for (int k = 0; k < 8; ++k) {
                if (v.c[k] == Rat(1)) {
                    idx = k;
                    sgn = 1;
                } else if (v.c[k] == Rat(-1)) {
                    idx = k;
                    sgn = -1;
                }
            }
            if (idx < 0) throw std::logic_error("octonion table entry is not a signed unit");
            out << (q ? " " : "") << (sgn < 0 ? "-" : "+") << "e" << idx;
        }
        out << "\n";
    }
    return out.str();
}

void SpinEmbedding::build_phi() {
    // phi(x) acts on O + O = R^16 by (a,b) -> (x b, -conj(x) a).
    phi_.assign(8, RatMatrix(Field::R, 16));
    for (int p = 0; p < 8; ++p) {
        RatMatrix& m = phi_[p];
        for (int q = 0; q < 8; ++q) {
            // column q (a = e_q, b = 0): image (0, -conj(e_p) e_q)
            HyperComplex<Rat> lower =
                hc_mul(-hc_conj(HyperComplex<Rat>::unit(Field::O, p)),
                       HyperComplex<Rat>::unit(Field::O, q));
            for (int r = 0; r < 8; ++r) m.at(8 + r, q).c[0] = lower.c[r];
            // column 8+q (a = 0, b = e_q): image (e_p e_q, 0)
            const HyperComplex<Rat>& upper = oct_[p][q];
            for (int r = 0; r < 8; ++r) m.at(r, 8 + q).c[0] = upper.c[r];
        }
    }
}

void SpinEmbedding::build_theta() {
    theta_.assign(10, std::vector<RatMatrix>(10));
    for (int i = 1; i <= 8; ++i) {
        theta_[i][9] = phi_[i - 1];
        for (int j = i + 1; j <= 8; ++j) theta_[i][j] = phi_[i - 1] * phi_[j - 1];
    }
}

void SpinEmbedding::verify_build() const {
    const RatMatrix id = RatMatrix::identity(Field::R, 16);
    for (int p = 0; p < 8; ++p) {
        if (!(phi_[p] * phi_[p] == -id)) throw std::logic_error("phi(e_p)^2 != -Id");
        for (int q = p + 1; q < 8; ++q)
            if (!(phi_[p] * phi_[q] + phi_[q] * phi_[p]).is_zero())
                throw std::logic_error("phi generators fail to anticommute");
    }
    linalg::RatRows flat;
    for (const auto& [i, j] : all_pairs()) {
        const RatMatrix& th = theta_pair(i, j);
        if (!th.is_skew_hermitian()) throw std::logic_error("theta basis matrix not skew");
        if (!(th * th == -id)) throw std::logic_error("theta basis matrix square != -Id");
        linalg::RatVec row;
        row.reserve(256);
        for (const auto& v : th.e) row.push_back(v.c[0]);
        flat.push_back(std::move(row));
    }
    if (linalg::rank(flat) != 36) throw std::logic_error("theta images are not independent");
}

const RatMatrix& SpinEmbedding::phi(int p) const {
    if (p < 0 || p > 7) throw std::invalid_argument("phi index out of range");
    return phi_[p];
}

const RatMatrix& SpinEmbedding::theta_pair(int i, int j) const {
    if (!(1 <= i && i < j && j <= 9)) throw std::invalid_argument("theta pair out of range");
    return theta_[i][j];
}

RatMatrix SpinEmbedding::theta(const Bivector& W) const {
    if (W.dim() != 9) throw std::invalid_argument("theta expects a spin(9) bivector");
    RatMatrix m(Field::R, 16);
    for (const auto& [ij, g] : W.gamma()) m = m + g * theta_pair(ij.first, ij.second);
    return m;
}

DMatrix SpinEmbedding::theta_d(const Bivector& W) const { return to_double(theta(W)); }

std::vector<Rat> SpinEmbedding::tangent_of(const Bivector& W) const {
    std::vector<Rat> u(16, Rat(0));
    for (const auto& [ij, g] : W.gamma()) {
        const RatMatrix& th = theta_pair(ij.first, ij.second);
        for (int r = 0; r < 16; ++r) u[r] += g * th.at(r, 0).c[0];
    }
    return u;
}

std::vector<Rat> SpinEmbedding::gamma_coords(const Bivector& W, bool spin8_only) const {
    std::vector<Rat> c;
    for (const auto& [i, j] : all_pairs()) {
        if (spin8_only && j == 9) continue;
        c.push_back(W.component(i, j));
    }
    return c;
}

void SpinEmbedding::build_parts() {
    const auto pairs = all_pairs();
    // Stabilizer of x0: coefficient vectors c with sum c_k theta(B_k) x0 = 0.
    linalg::RatRows M(16, linalg::RatVec(36, Rat(0)));
    for (size_t k = 0; k < pairs.size(); ++k) {
        const RatMatrix& th = theta_pair(pairs[k].first, pairs[k].second);
        for (int r = 0; r < 16; ++r) M[r][k] = th.at(r, 0).c[0];
    }
    for (auto& kv : linalg::kernel_basis(M)) {
        // Stabilizer elements must have no e_i e_9 component.
        for (size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k].second == 9 && !kv[k].is_zero())
                throw std::logic_error("stabilizer leaks outside spin(8)");
        h_basis_.push_back(bivector_from_coords(kv));
    }
    if (h_basis_.size() != 21) throw std::logic_error("stabilizer dimension != 21");

    // p2: orthocomplement of h inside spin(8) (gamma coordinates).
    linalg::RatRows H;
    for (const auto& h : h_basis_) H.push_back(gamma_coords(h, /*spin8_only=*/true));
    auto p2 = linalg::kernel_basis(H);
    if (p2.size() != 7) throw std::logic_error("p2 dimension != 7");
    for (auto& v : p2) {
        // Re-inflate the 28 spin(8) coordinates into a bivector.
        Bivector W(9);
        size_t k = 0;
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j, ++k)
                if (!v[k].is_zero()) W.set(i, j, v[k]);
        p2_basis_.push_back(W);
    }

    for (int i = 1; i <= 8; ++i) p1_basis_.push_back(Bivector::basis(9, i, 9));

    // Gram inverses for the (non-orthonormal) h and p2 bases.
    auto gram_inv = [&](const std::vector<Bivector>& basis) {
        const int m = int(basis.size());
        linalg::RatRows G(m, linalg::RatVec(m, Rat(0)));
        std::vector<std::vector<Rat>> coords;
        for (const auto& b : basis) coords.push_back(gamma_coords(b, false));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) G[a][b] = linalg::dot(coords[a], coords[b]);
        return linalg::inverse(G);
    };
    h_gram_inv_ = gram_inv(h_basis_);
    p2_gram_inv_ = gram_inv(p2_basis_);

    // The p -> tangent isomorphism on the 15 coordinates 1..15.
    std::vector<Bivector> pbasis = p1_basis_;
    pbasis.insert(pbasis.end(), p2_basis_.begin(), p2_basis_.end());
    linalg::RatRows T(15, linalg::RatVec(15, Rat(0)));
    for (size_t k = 0; k < pbasis.size(); ++k) {
        auto u = tangent_of(pbasis[k]);
        if (!u[0].is_zero()) throw std::logic_error("tangent has a radial component");
        for (int r = 1; r < 16; ++r) T[r - 1][k] = u[r];
    }
    tangent_inv_ = linalg::inverse(T);
}

namespace {
Bivector project_span(const std::vector<Bivector>& basis,
                      const std::vector<std::vector<Rat>>& gram_inv, const Bivector& W) {
    const int m = int(basis.size());
    std::vector<Rat> rhs(m, Rat(0));
    // spin9_inner = 8 x gamma-dot and gram_inv inverts the gamma-dot Gram.
    for (int a = 0; a < m; ++a) rhs[a] = spin9_inner(basis[a], W) / Rat(8);
    Bivector out(9);
    for (int a = 0; a < m; ++a) {
        Rat coef(0);
        for (int b = 0; b < m; ++b) coef += gram_inv[a][b] * rhs[b];
        if (!coef.is_zero()) out = out + coef * basis[a];
    }
    return out;
}
}  // namespace

Bivector SpinEmbedding::project_h(const Bivector& W) const {
    return project_span(h_basis_, h_gram_inv_, W);
}

Bivector SpinEmbedding::project_p2(const Bivector& W) const {
    return project_span(p2_basis_, p2_gram_inv_, W);
}

Bivector SpinEmbedding::project_p1(const Bivector& W) const {
    Bivector out(9);
    for (int i = 1; i <= 8; ++i) {
        Rat c = W.component(i, 9);
        if (!c.is_zero()) out.set(i, 9, c);
    }
    return out;
}

Bivector SpinEmbedding::bivector_from_tangent(const std::vector<Rat>& u) const {
    if (u.size() != 16) throw std::invalid_argument("tangent vector must have 16 entries");
    if (!u[0].is_zero())
        throw std::invalid_argument("tangent vector must be orthogonal to the base point");
    std::vector<Rat> rhs(u.begin() + 1, u.end());
    auto coef = linalg::matvec(tangent_inv_, rhs);
    std::vector<Bivector> pbasis = p1_basis_;
    pbasis.insert(pbasis.end(), p2_basis_.begin(), p2_basis_.end());
    Bivector W(9);
    for (size_t k = 0; k < pbasis.size(); ++k)
        if (!coef[k].is_zero()) W = W + coef[k] * pbasis[k];
    return W;
}

Spin9FieldCert SpinEmbedding::cw_field(const std::vector<Rat>& u) const {
    // Normalize to a content-free integer tangent; the construction commutes
    // with scaling, and integer inputs keep the exact solves small.
    Rat::Int den_lcm = 1, content = 0;
    for (const auto& x : u)
        if (!x.is_zero()) den_lcm = den_lcm / Rat::gcd_int(den_lcm, x.den()) * x.den();
    std::vector<Rat> uscaled = u;
    for (auto& x : uscaled) x = x * Rat::from_int128(den_lcm, 1);
    for (const auto& x : uscaled) content = Rat::gcd_int(content, x.num());
    if (content > 1)
        for (auto& x : uscaled) x = x / Rat::from_int128(content, 1);
    const Rat lambda = Rat::from_int128(den_lcm, 1) / Rat::from_int128(content == 0 ? 1 : content, 1);
    if (!(lambda == Rat(1))) {
        Spin9FieldCert scaled = cw_field(uscaled);
        Spin9FieldCert cert;
        cert.W = (Rat(1) / lambda) * scaled.W;
        Rat c2(0);
        for (const auto& x : u) c2 += x * x;
        cert.c2 = c2;
        // Re-certify at the original scale.
        if (tangent_of(cert.W) != u) throw std::logic_error("scaling lost the tangent vector");
        const RatMatrix th = theta(cert.W);
        const RatMatrix S = th * th + c2 * RatMatrix::identity(Field::R, 16);
        cert.exact = S.is_zero();
        double worst = 0;
        for (const auto& v : S.e) worst = std::max(worst, std::abs(v.c[0].to_double()));
        cert.residual = worst;
        cert.block_equations = scaled.block_equations;
        cert.block_equation_failures = scaled.block_equation_failures;
        return cert;
    }
    const Bivector Wu = bivector_from_tangent(u);
    const Bivector W1 = project_p1(Wu);
    const Bivector W2 = project_p2(Wu);

    Bivector result(9);
    if (W2.is_zero()) {
        // p1 is itself a space of simple bivectors through e_9.
        result = W1;
    } else {
        // v in R^8: for mixed vectors the p1 component fixes it (W1 = v~.e9);
        // for a pure p2 vector any unit direction serves.
        std::vector<Rat> v(8, Rat(0));
        if (W1.is_zero()) {
            v[0] = Rat(1);
        } else {
            for (int i = 1; i <= 8; ++i) v[i - 1] = W1.component(i, 9);
        }
        // Integer-scale v and strip the content; the span of
        // V_v = { v.z : z orthogonal to v } is scale-invariant.
        Rat::Int vden = 1;
        for (const auto& x : v)
            if (!x.is_zero()) vden = vden / Rat::gcd_int(vden, x.den()) * x.den();
        for (auto& x : v) x = x * Rat::from_int128(vden, 1);
        Rat::Int vcontent = 0;
        for (const auto& x : v) vcontent = Rat::gcd_int(vcontent, x.num());
        if (vcontent > 1)
            for (auto& x : v) x = x / Rat::from_int128(vcontent, 1);

        // Rational basis of the orthogonal complement of v in R^8.
        int anchor = -1;
        for (int k = 0; k < 8 && anchor < 0; ++k)
            if (!v[k].is_zero()) anchor = k;
        std::vector<std::vector<Rat>> zbasis;
        for (int k = 0; k < 8; ++k) {
            if (k == anchor) continue;
            std::vector<Rat> z(8, Rat(0));
            // Strip the common factor; only the span matters.
            const Rat::Int g = Rat::gcd_int(v[anchor].num(), v[k].num());
            z[k] = v[anchor] / Rat::from_int128(g, 1);
            z[anchor] = -(v[k] / Rat::from_int128(g, 1));
            zbasis.push_back(std::move(z));
        }

        // Solve p2-projection(v . z) = W2 over the 7-dimensional slice.
        linalg::RatRows A(7, linalg::RatVec(7, Rat(0)));
        std::vector<std::vector<Rat>> p2coords;
        for (const auto& b : p2_basis_) p2coords.push_back(gamma_coords(b, false));
        for (int col = 0; col < 7; ++col) {
            Bivector vz = bivector_from_vectors_extended(v, zbasis[col]);
            Bivector pr = project_p2(vz);
            auto c = gamma_coords(pr, false);
            // Coordinates of pr in the p2 basis.
            std::vector<Rat> rhs(7, Rat(0));
            for (int a = 0; a < 7; ++a) rhs[a] = linalg::dot(p2coords[a], c);
            auto coef = linalg::matvec(p2_gram_inv_, rhs);
            for (int row = 0; row < 7; ++row) A[row][col] = coef[row];
        }
        auto w2c = gamma_coords(W2, false);
        std::vector<Rat> b(7, Rat(0));
        for (int a = 0; a < 7; ++a) b[a] = linalg::dot(p2coords[a], w2c);
        auto bcoef = linalg::matvec(p2_gram_inv_, b);
        auto zsol = linalg::solve(A, bcoef);

        std::vector<Rat> z(8, Rat(0));
        for (int col = 0; col < 7; ++col)
            for (int k = 0; k < 8; ++k) z[k] += zsol[col] * zbasis[col][k];
        result = W1 + bivector_from_vectors_extended(v, z);
    }

    // Certificate: theta(result)^2 = -|u|^2 Id with the tangent reproduced.
    Spin9FieldCert cert;
    cert.W = result;
    Rat c2(0);
    for (const auto& x : u) c2 += x * x;
    cert.c2 = c2;

    auto tangent = tangent_of(result);
    if (tangent != u) throw std::logic_error("constructed field misses the tangent vector");

    const RatMatrix th = theta(result);
    const RatMatrix S = th * th + c2 * RatMatrix::identity(Field::R, 16);
    cert.exact = S.is_zero();
    double worst = 0;
    for (const auto& v : S.e) worst = std::max(worst, std::abs(v.c[0].to_double()));
    cert.residual = worst;
    // Scalar equations on the lower 15x15 block: off-diagonal zero plus
    // diagonal equality, (14*15)/2 + 14 of them.
    int checked = 0, failures = 0;
    const RatMatrix sq = th * th;
    for (int i = 1; i <= 15; ++i)
        for (int j = i + 1; j <= 15; ++j) {
            ++checked;
            if (!sq.at(i, j).c[0].is_zero()) ++failures;
        }
    for (int i = 2; i <= 15; ++i) {
        ++checked;
        if (!(sq.at(i, i).c[0] == sq.at(1, 1).c[0])) ++failures;
    }
    cert.block_equations = checked;
    cert.block_equation_failures = failures;
    return cert;
}

// bivector_from_vectors over R^8 vectors embedded in R^9.
Bivector bivector_from_vectors_extended(const std::vector<Rat>& v8, const std::vector<Rat>& z8) {
    std::vector<Rat> v(9, Rat(0)), z(9, Rat(0));
    for (int k = 0; k < 8; ++k) {
        v[k] = v8[k];
        z[k] = z8[k];
    }
    return bivector_from_vectors(v, z);
}

Bivector spin9_X1() {
    return Bivector::basis(9, 7, 8) - Bivector::basis(9, 1, 2) - Bivector::basis(9, 3, 4) -
           Bivector::basis(9, 5, 6);
}

Bivector spin9_Y_comp() {
    return (Bivector::basis(9, 1, 2) + Bivector::basis(9, 7, 8)) +
           (Bivector::basis(9, 3, 4) + Bivector::basis(9, 7, 8)) +
           (Bivector::basis(9, 5, 6) + Bivector::basis(9, 7, 8));
}

Bivector spin9_Z() {
    return Rat(-3) * Bivector::basis(9, 1, 2) + Bivector::basis(9, 3, 4) +
           Bivector::basis(9, 5, 6) - Bivector::basis(9, 7, 8);
}

std::vector<CheckRecord> SpinEmbedding::verify_identities() const {
    std::vector<CheckRecord> out;
    auto add = [&](const std::string& check, const std::string& lhs, const std::string& rhs,
                   bool ok, const std::string& anchor, const std::string& detail = "") {
        CheckRecord r;
        r.suite = "spin9";
        r.check = check;
        r.family = "spin9";
        r.lhs = lhs;
        r.rhs = rhs;
        r.verdict = ok;
        r.anchor = anchor;
        r.detail = detail;
        out.push_back(std::move(r));
    };

    const Bivector X1 = spin9_X1();
    const Bivector Y = spin9_Y_comp();
    const Bivector Z = spin9_Z();

    add("p2-norm", spin9_inner(X1, X1).str(), "32", spin9_inner(X1, X1) == Rat(32),
        "spin9-bivector-norm", "<X1,X1> over the gamma components");
    add("h-norm", spin9_inner(Z, Z).str(), "96", spin9_inner(Z, Z) == Rat(96),
        "spin9-bivector-norm", "<Z,Z> over the gamma components");

    const Bivector V = X1 + Y;
    const Bivector fourE78 = Rat(4) * Bivector::basis(9, 7, 8);
    add("x1-plus-y", V.str(), fourE78.str(), V == fourE78, "h-shift-to-simple",
        "X1 + Y collapses to a single plane");
    auto simple = is_simple(V);
    add("x1-plus-y-simple", simple ? simple->c2.str() : "none", "16",
        simple.has_value() && simple->c2 == Rat(16), "simple-square-criterion",
        "C = 4 on the collapsed plane");

    // Double bracket with X = e2 e9 against -X1.
    const Bivector X = Bivector::basis(9, 2, 9);
    const Bivector Ym = -X1;
    const Bivector dbl = bivector_bracket(bivector_bracket(Ym, X), X);
    const Bivector expect = Rat(-4) * Bivector::basis(9, 1, 2);
    add("double-bracket", dbl.str(), expect.str(), dbl == expect, "p1-p2-double-bracket",
        "[[Y,X],X] with X = e2e9");
    add("double-bracket-split", (Z - Ym).str(), expect.str(), Z - Ym == expect,
        "p1-p2-double-bracket", "Z - Y reproduces the double bracket");

    // Stabilizer membership of the three h-summands of Y.
    const Bivector s1 = Bivector::basis(9, 1, 2) + Bivector::basis(9, 7, 8);
    const Bivector s2 = Bivector::basis(9, 3, 4) + Bivector::basis(9, 7, 8);
    const Bivector s3 = Bivector::basis(9, 5, 6) + Bivector::basis(9, 7, 8);
    int idx = 0;
    for (const auto* s : {&s1, &s2, &s3}) {
        ++idx;
        bool kills = true;
        for (const auto& c : tangent_of(*s)) kills = kills && c.is_zero();
        add("h-summand-" + std::to_string(idx), kills ? "0" : "nonzero", "0", kills,
            "stabilizer-membership", "theta(" + s->str() + ") annihilates x0");
    }
    bool x1_in_p2 = project_p2(X1) == X1 && project_h(X1).is_zero();
    add("x1-in-p2", x1_in_p2 ? "p2" : "mixed", "p2", x1_in_p2, "stabilizer-orthogonality",
        "X1 is orthogonal to the stabilizer");
    bool z_in_h = project_h(Z) == Z;
    add("z-in-h", z_in_h ? "h" : "mixed", "h", z_in_h, "stabilizer-membership");

    // Metric identity (X1,X1)_t = 16 t for several exact parameters: the
    // p2 coefficient of the metric is t/2 and <X1,X1> = 32.
    for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(1), Rat(7, 3)}) {
        const Rat val = (t / Rat(2)) * spin9_inner(X1, X1);
        add("x1-metric-t=" + t.str(), val.str(), (Rat(16) * t).str(), val == Rat(16) * t,
            "p2-metric-normalization", "(X1,X1)_t = 16t");
    }

    // theta norm of a basis pair matches the so(16) inner product.
    const Rat th_inner = inner(theta_pair(2, 5), theta_pair(2, 5));
    add("theta-norm", th_inner.str(), "8", th_inner == Rat(8), "so16-bivector-norm",
        "<theta(e2e5), theta(e2e5)> = (1/2) trace(Id) = 8");
    const Rat cross = inner(theta(X1), theta(X1));
    add("theta-x1-norm", cross.str(), "32", cross == Rat(32), "so16-bivector-norm",
        "so(16) inner product agrees with the gamma formula");
    return out;
}

}  // namespace kvf
