#include "kvf/deltacheck.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "kvf/spin9.hpp"

namespace kvf {

namespace {

Rat part_norm2(const Decomposition& D, const RatMatrix& M, Part p, bool realified) {
    RatMatrix pr = D.project(M, p);
    if (realified) {
        RatMatrix R = realify(pr);
        return inner(R, R);
    }
    return inner(pr, pr);
}

std::string rat_text(const Rat& r) { return r.str(); }

}  // namespace

Inequality prop22_check(const Metric& m, const Decomposition& D, const RatMatrix& X,
                        const RatMatrix& Y, bool realified) {
    const RatMatrix Dbl = bracket(bracket(Y, X), X);
    const RatMatrix residue = Dbl - (D.project(Dbl, Part::H) + D.project(Dbl, Part::P1) +
                                     D.project(Dbl, Part::P2));
    if (!residue.is_zero())
        throw std::invalid_argument("double bracket has a projection residue outside h+p1+p2");
    const Rat h2 = part_norm2(D, Dbl, Part::H, realified);
    const Rat p22 = part_norm2(D, Dbl, Part::P2, realified);
    const Rat x1 = metric_coeff(m, Part::P1);
    const Rat x2 = metric_coeff(m, Part::P2);
    Inequality out;
    out.name = "double-bracket-bound";
    out.anchor = "p1-p2-double-bracket";
    out.lhs = x1 * h2;
    out.rhs = (x2 - x1) * p22;
    out.holds = out.lhs >= out.rhs;
    // The p2 coefficient is affine in t with positive slope for every family
    // here, so the bound reads t <= t*.
    Metric m0 = m, m1 = m;
    m0.t = Rat(0);
    m1.t = Rat(1);
    const Rat r0 = (metric_coeff(m0, Part::P2) - x1) * p22;
    const Rat r1 = (metric_coeff(m1, Part::P2) - x1) * p22;
    const Rat slope = r1 - r0;
    if (slope.sgn() > 0)
        out.threshold = "t <= " + rat_text((out.lhs - r0) / slope);
    else if (slope.sgn() < 0)
        out.threshold = "t >= " + rat_text((out.lhs - r0) / slope);
    return out;
}

Inequality deltal2_check(const Metric& m, const Decomposition& D, const RatMatrix& X,
                         const RatMatrix& U) {
    const RatMatrix UX = bracket(U, X);
    const RatMatrix UUX = bracket(U, UX);
    auto value_at = [&](const Rat& t) {
        Metric mt = m;
        mt.t = t;
        return metric_p_pairing(mt, D, X, UUX) + metric_p_pairing(mt, D, UX, UX);
    };
    Inequality out;
    out.name = "centralizer-bound";
    out.anchor = "p2-centralizer-inequality";
    out.lhs = Rat(0);
    out.rhs = value_at(m.t);
    out.holds = out.lhs >= out.rhs;
    const Rat a = value_at(Rat(0));
    const Rat slope = value_at(Rat(1)) - a;
    if (slope.sgn() < 0)
        out.threshold = "t >= " + rat_text(a / (-slope));
    else if (slope.sgn() > 0)
        out.threshold = "t <= " + rat_text((-a) / slope);
    return out;
}

std::string table_row_label(TableRow row) {
    switch (row) {
        case TableRow::U: return "U(n+1)";
        case TableRow::SU: return "SU(n+1)";
        case TableRow::SpSp1: return "Sp(n+1)Sp(1)";
        case TableRow::Sp: return "Sp(n+1)";
        case TableRow::SpU1: return "Sp(n+1)U(1)";
        case TableRow::Spin9: return "Spin(9)";
    }
    return "?";
}

namespace {

// One named necessary check in closed affine form:
//   holds  <=>  l0 + lt t + ls s >= r0 + rt t + rs s   (AffineGE)
// plus the two bookkeeping kinds used by rows whose bounds are inherited
// from the projective base.
struct CheckDef {
    enum Kind { AffineGE, TRange, SPositive } kind = AffineGE;
    std::string name, anchor;
    Rat l0, lt, ls, r0, rt, rs;
    Rat lo, hi;  // TRange

    Inequality eval(const Rat& t, const Rat& s) const {
        Inequality out;
        out.name = name;
        out.anchor = anchor;
        switch (kind) {
            case AffineGE: {
                out.lhs = l0 + lt * t + ls * s;
                out.rhs = r0 + rt * t + rs * s;
                out.holds = out.lhs >= out.rhs;
                out.threshold = threshold_text();
                break;
            }
            case TRange: {
                out.lhs = t;
                out.rhs = Rat(0);
                out.holds = lo <= t && t <= hi;
                out.threshold = lo.str() + " <= t <= " + hi.str();
                break;
            }
            case SPositive: {
                out.lhs = s;
                out.rhs = Rat(0);
                out.holds = s > Rat(0);
                out.threshold = "s > 0";
                break;
            }
        }
        return out;
    }

    std::string threshold_text() const {
        // Solve l - r = c0 + ct t + cs s >= 0.
        const Rat c0 = l0 - r0, ct = lt - rt, cs = ls - rs;
        if (!cs.is_zero()) {
            // s-bound linear in t.
            const Rat coef = ct / (-cs);
            const Rat base = c0 / (-cs);
            std::string rel = cs.sgn() < 0 ? "s <= " : "s >= ";
            std::string expr;
            if (!coef.is_zero()) expr = (coef == Rat(1) ? std::string("t") : coef.str() + "*t");
            if (!base.is_zero() || expr.empty())
                expr += (expr.empty() ? base.str()
                                      : (base.sgn() >= 0 ? " + " + base.str()
                                                         : " - " + (-base).str()));
            return rel + expr;
        }
        if (!ct.is_zero()) {
            const Rat bound = c0 / (-ct);
            return (ct.sgn() < 0 ? "t <= " : "t >= ") + bound.str();
        }
        return c0 >= Rat(0) ? "always" : "never";
    }
};

CheckDef affine_from_samples(const std::string& name, const std::string& anchor,
                             const Rat& lhs00, const Rat& lhs10, const Rat& lhs01,
                             const Rat& rhs00, const Rat& rhs10, const Rat& rhs01) {
    CheckDef def;
    def.kind = CheckDef::AffineGE;
    def.name = name;
    def.anchor = anchor;
    def.l0 = lhs00;
    def.lt = lhs10 - lhs00;
    def.ls = lhs01 - lhs00;
    def.r0 = rhs00;
    def.rt = rhs10 - rhs00;
    def.rs = rhs01 - rhs00;
    return def;
}

// u(n+1) double-bracket data: the squared norms of the h and p2 parts of
// [[Y,X],X] for the corner witnesses, in the real representation so(2(n+1)).
struct UWitnessNorms {
    Rat h2, p2;
};

UWitnessNorms u_witness_norms(int n) {
    const Family fam = parse_family("u", n);
    const Decomposition& D = cached_decomposition(fam);
    // Y = diag(i, 0, ..., 0), X the symmetric i-block in p1.
    const RatMatrix& Y = D.basis(Part::P2)[0];
    RatMatrix X(Field::C, n + 1);
    X.at(0, 1) = HyperComplex<Rat>::unit(Field::C, 1);
    X.at(1, 0) = HyperComplex<Rat>::unit(Field::C, 1);
    const RatMatrix Dbl = bracket(bracket(Y, X), X);
    UWitnessNorms out;
    out.h2 = part_norm2(D, Dbl, Part::H, /*realified=*/true);
    out.p2 = part_norm2(D, Dbl, Part::P2, /*realified=*/true);
    return out;
}

CheckDef u_prop22_def(int n, const std::string& name) {
    auto w = u_witness_norms(n);
    // lhs = 1 * h2; rhs = (2t - 1) * p2.
    return affine_from_samples(name, "p1-p2-double-bracket", w.h2, w.h2, w.h2, -w.p2,
                               Rat(2) * w.p2 - w.p2, -w.p2);
}

CheckDef su_deltal2_def(int n) {
    const Family fam = parse_family("su", n);
    const Decomposition& D = cached_decomposition(fam);
    Metric m{fam, Rat(0), Rat(0)};
    const RatMatrix& X = D.basis(Part::P2)[0];
    const RatMatrix& U = D.basis(Part::P1)[0];
    auto value_at = [&](const Rat& t) {
        Metric mt = m;
        mt.t = t;
        const RatMatrix UX = bracket(U, X);
        return metric_p_pairing(mt, D, X, bracket(U, UX)) + metric_p_pairing(mt, D, UX, UX);
    };
    const Rat v0 = value_at(Rat(0));
    const Rat v1 = value_at(Rat(1));
    // 0 >= v0 + (v1 - v0) t.
    return affine_from_samples("centralizer-bound", "p2-centralizer-inequality", Rat(0), Rat(0),
                               Rat(0), v0, v1, v0);
}

CheckDef spsp_prop22_def(int n) {
    // sp(n+1) + sp(1) as (n+2)x(n+2) block-diagonal quaternion matrices.
    const int msize = n + 2;
    auto iH = HyperComplex<Rat>::unit(Field::H, 1);
    RatMatrix X(Field::H, msize), Y(Field::H, msize);
    X.at(0, 1) = HyperComplex<Rat>::one(Field::H);
    X.at(1, 0) = -HyperComplex<Rat>::one(Field::H);
    Y.at(0, 0) = iH;
    Y.at(msize - 1, msize - 1) = -iH;
    const RatMatrix Dbl = bracket(bracket(Y, X), X);
    // p2 of the product algebra: corner c, tail -c; h: the rest.
    for (int k = 1; k <= n; ++k)
        if (!Dbl.at(k, 0).is_zero() || !Dbl.at(0, k).is_zero())
            throw std::logic_error("double bracket left h + p2");
    const auto c = Dbl.at(0, 0);
    const auto d = Dbl.at(msize - 1, msize - 1);
    RatMatrix P2(Field::H, msize), H(Field::H, msize);
    auto half = Rat(1, 2);
    P2.at(0, 0) = half * (c - d);
    P2.at(msize - 1, msize - 1) = -(half * (c - d));
    H = Dbl - P2;
    const Rat h2 = inner(H, H);
    const Rat p22 = inner(P2, P2);
    // lhs = 1 * h2; rhs = (4t - 1) * p22.
    return affine_from_samples("double-bracket-bound", "p1-p2-double-bracket", h2, h2, h2, -p22,
                               Rat(4) * p22 - p22, -p22);
}

CheckDef spin9_prop22_def() {
    const auto& emb = SpinEmbedding::get();
    const Family fam = parse_family("spin9", 0);
    const Decomposition& D = cached_decomposition(fam);
    const RatMatrix X = emb.theta(Bivector::basis(9, 2, 9));
    const RatMatrix Y = emb.theta(-spin9_X1());
    auto at = [&](const Rat& t) {
        Metric m{fam, t, t};
        return prop22_check(m, D, X, Y, /*realified=*/false);
    };
    auto i0 = at(Rat(0)), i1 = at(Rat(1));
    return affine_from_samples("double-bracket-bound", "p1-p2-double-bracket", i0.lhs, i1.lhs,
                               i0.lhs, i0.rhs, i1.rhs, i0.rhs);
}

CheckDef spin9_deltal2_def() {
    const auto& emb = SpinEmbedding::get();
    const Family fam = parse_family("spin9", 0);
    const Decomposition& D = cached_decomposition(fam);
    const RatMatrix X = emb.theta(spin9_X1());
    const RatMatrix U = emb.theta(Bivector::basis(9, 2, 9));
    auto at = [&](const Rat& t) {
        Metric m{fam, t, t};
        return deltal2_check(m, D, X, U);
    };
    auto i0 = at(Rat(0)), i1 = at(Rat(1));
    return affine_from_samples("centralizer-bound", "p2-centralizer-inequality", i0.lhs, i1.lhs,
                               i0.lhs, i0.rhs, i1.rhs, i0.rhs);
}

CheckDef orbit_order_def() {
    // The totally geodesic U(2) orbit carries the metric
    // t <.,.>|p1 + 2s <.,.>|p2; the corner double bracket turns that into an
    // order relation between s and t.
    auto w = u_witness_norms(1);
    // lhs = t * h2; rhs = (2s - t) * p2.
    CheckDef def = affine_from_samples("fiber-order-bound", "geodesic-orbit-order", Rat(0), w.h2,
                                       Rat(0), Rat(0), -w.p2, Rat(2) * w.p2);
    return def;
}

CheckDef base_range_def() {
    CheckDef def;
    def.kind = CheckDef::TRange;
    def.name = "base-range-bound";
    def.anchor = "projective-base-range (inherited classification)";
    def.lo = Rat(1, 2);
    def.hi = Rat(1);
    return def;
}

CheckDef s_positive_def() {
    CheckDef def;
    def.kind = CheckDef::SPositive;
    def.name = "fiber-positivity";
    def.anchor = "metric-positivity";
    return def;
}

const std::vector<CheckDef>& row_checks(TableRow row, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<CheckDef>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(int(row), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<CheckDef> defs;
    switch (row) {
        case TableRow::U:
            defs.push_back(u_prop22_def(n, "double-bracket-bound"));
            break;
        case TableRow::SU:
            defs.push_back(su_deltal2_def(n));
            defs.push_back(u_prop22_def(n, "double-bracket-bound (enlarged group)"));
            break;
        case TableRow::SpSp1:
            defs.push_back(spsp_prop22_def(n));
            break;
        case TableRow::Sp:
            defs.push_back(spsp_prop22_def(n));
            defs.push_back(base_range_def());
            break;
        case TableRow::SpU1:
            defs.push_back(orbit_order_def());
            defs.push_back(base_range_def());
            defs.push_back(s_positive_def());
            break;
        case TableRow::Spin9:
            defs.push_back(spin9_prop22_def());
            defs.push_back(spin9_deltal2_def());
            break;
    }
    return cache.emplace(key, std::move(defs)).first->second;
}

}  // namespace

std::vector<Inequality> necessary_checks(TableRow row, int n, const Rat& t, const Rat& s) {
    std::vector<Inequality> out;
    for (const auto& def : row_checks(row, n)) out.push_back(def.eval(t, s));
    return out;
}

bool in_table_region(TableRow row, int n, const Rat& t, const Rat& s) {
    switch (row) {
        case TableRow::U: return Rat(0) < t && t <= Rat(1);
        case TableRow::SU: return Rat(n + 1, 2 * n) <= t && t <= Rat(1);
        case TableRow::SpSp1: return Rat(0) < t && t <= Rat(1);
        case TableRow::Sp: return Rat(1, 2) <= t && t <= Rat(1);
        case TableRow::SpU1:
            return Rat(1, 2) <= t && t <= Rat(1) && Rat(0) < s && s <= t;
        case TableRow::Spin9: return Rat(1, 4) <= t && t <= Rat(1);
    }
    return false;
}

Table2Report table2_report(TableRow row, int n, int grid_points, bool parallel) {
    Table2Report rep;
    rep.row = row;
    rep.n = n;

    std::vector<Rat> grid;
    for (int k = 0; k < grid_points; ++k) grid.push_back(Rat(1, 20) + Rat(3 * k, 100));
    auto add_unique = [](std::vector<Rat>& v, const Rat& x) {
        for (const auto& y : v)
            if (y == x) return;
        v.push_back(x);
    };
    std::vector<Rat> tvals = grid;
    switch (row) {
        case TableRow::U:
        case TableRow::SpSp1: add_unique(tvals, Rat(1)); break;
        case TableRow::SU:
            add_unique(tvals, Rat(n + 1, 2 * n));
            add_unique(tvals, Rat(1));
            break;
        case TableRow::Sp:
        case TableRow::SpU1:
            add_unique(tvals, Rat(1, 2));
            add_unique(tvals, Rat(1));
            break;
        case TableRow::Spin9:
            add_unique(tvals, Rat(1, 4));
            add_unique(tvals, Rat(1));
            break;
    }

    std::vector<std::pair<Rat, Rat>> points;
    if (row == TableRow::SpU1) {
        for (const auto& t : tvals) {
            std::vector<Rat> svals = grid;
            add_unique(svals, t);  // the boundary s = t is part of the region
            for (const auto& s : svals) points.emplace_back(t, s);
        }
    } else {
        for (const auto& t : tvals) points.emplace_back(t, t);
    }

    // Warm the witness cache before going parallel.
    (void)row_checks(row, n);

    rep.points.assign(points.size(), GridOutcome{});
    auto run_point = [&](size_t k) {
        const auto& [t, s] = points[k];
        GridOutcome& g = rep.points[k];
        g.t = t;
        g.s = s;
        g.inside = in_table_region(row, n, t, s);
        g.checks = necessary_checks(row, n, t, s);
        g.all_pass = true;
        for (const auto& c : g.checks) {
            if (!c.holds && g.failing.empty()) g.failing = c.name;
            g.all_pass = g.all_pass && c.holds;
        }
    };
    if (parallel) {
#ifdef KVF_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (size_t k = 0; k < points.size(); ++k) run_point(k);
    } else {
        for (size_t k = 0; k < points.size(); ++k) run_point(k);
    }

    rep.pattern_consistent = true;
    for (const auto& g : rep.points)
        rep.pattern_consistent = rep.pattern_consistent && (g.inside == g.all_pass);
    return rep;
}

std::vector<CheckRecord> table2_records(const Table2Report& rep) {
    std::vector<CheckRecord> out;
    for (const auto& g : rep.points) {
        CheckRecord r;
        r.suite = "table2";
        r.check = g.inside ? "inside-all-pass" : "outside-some-fail";
        r.family = table_row_label(rep.row);
        r.n = std::to_string(rep.n);
        r.t = g.t.str();
        if (rep.row == TableRow::SpU1) r.s = g.s.str();
        r.lhs = g.all_pass ? "pass" : ("fail:" + g.failing);
        r.rhs = g.inside ? "inside" : "outside";
        r.verdict = g.inside == g.all_pass;
        r.anchor = "diagonal-metric-classification";
        out.push_back(std::move(r));
    }
    return out;
}

OrbitScanResult sampled_delta_test(const DMatrix& W, const Metric& m, const Decomposition& D,
                                   int samples, uint64_t seed, bool parallel) {
    return orbit_scan(W, m, D, samples, seed, 1e-8, parallel);
}

}  // namespace kvf
