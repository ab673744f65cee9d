#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kvf/deltacheck.hpp"
#include "kvf/killing.hpp"
#include "kvf/spin9.hpp"

using namespace kvf;

namespace {
const Inequality& find_check(const std::vector<Inequality>& v, const std::string& name) {
    for (const auto& c : v)
        if (c.name == name) return c;
    throw std::runtime_error("check not found: " + name);
}
}  // namespace

TEST_CASE("u(n+1) double-bracket check reproduces 4 >= (2t-1)*4") {
    for (int n : {1, 2, 3}) {
        auto checks = necessary_checks(TableRow::U, n, Rat(1), Rat(1));
        const auto& c = checks.at(0);
        CHECK(c.lhs == Rat(4));
        CHECK(c.rhs == Rat(4));
        CHECK(c.holds);
        CHECK(c.threshold == "t <= 1");
        auto above = necessary_checks(TableRow::U, n, Rat(21, 20), Rat(1)).at(0);
        CHECK(!above.holds);
        CHECK(above.rhs == (Rat(2) * Rat(21, 20) - Rat(1)) * Rat(4));
    }
}

TEST_CASE("sp(n+1)+sp(1) double-bracket check reproduces 3 >= (4t-1)") {
    for (int n : {1, 2}) {
        auto checks = necessary_checks(TableRow::SpSp1, n, Rat(1), Rat(1));
        const auto& c = checks.at(0);
        CHECK(c.lhs == Rat(3));
        CHECK(c.rhs == Rat(3));
        CHECK(c.holds);
        CHECK(c.threshold == "t <= 1");
        CHECK(!necessary_checks(TableRow::SpSp1, n, Rat(11, 10), Rat(1)).at(0).holds);
    }
}

TEST_CASE("spin9 double-bracket check reproduces (1/8)*96 >= ((4t-1)/8)*32") {
    auto checks = necessary_checks(TableRow::Spin9, 0, Rat(1), Rat(1));
    const auto& c = find_check(checks, "double-bracket-bound");
    CHECK(c.lhs == Rat(12));
    CHECK(c.rhs == Rat(12));
    CHECK(c.holds);
    CHECK(c.threshold == "t <= 1");
}

TEST_CASE("su centralizer check gives t >= (n+1)/2n for n = 2..8") {
    for (int n = 2; n <= 8; ++n) {
        auto checks = necessary_checks(TableRow::SU, n, Rat(n + 1, 2 * n), Rat(0));
        const auto& c = find_check(checks, "centralizer-bound");
        CHECK(c.holds);
        CHECK(c.threshold == "t >= " + Rat(n + 1, 2 * n).str());
        // Slightly below the bound the inequality must fail.
        auto below = find_check(
            necessary_checks(TableRow::SU, n, Rat(n + 1, 2 * n) - Rat(1, 100), Rat(0)),
            "centralizer-bound");
        CHECK(!below.holds);
    }
}

TEST_CASE("spin9 centralizer check gives t >= 1/4") {
    auto checks = necessary_checks(TableRow::Spin9, 0, Rat(1, 4), Rat(1, 4));
    const auto& c = find_check(checks, "centralizer-bound");
    CHECK(c.holds);
    CHECK(c.threshold == "t >= 1/4");
    auto below = find_check(necessary_checks(TableRow::Spin9, 0, Rat(24, 100), Rat(0)),
                            "centralizer-bound");
    CHECK(!below.holds);
}

TEST_CASE("sp-split order check is exactly s <= t") {
    auto at = [&](Rat t, Rat s) {
        return find_check(necessary_checks(TableRow::SpU1, 1, t, s), "fiber-order-bound");
    };
    CHECK(at(Rat(3, 4), Rat(3, 4)).holds);
    CHECK(at(Rat(3, 4), Rat(1, 2)).holds);
    CHECK(!at(Rat(3, 4), Rat(4, 5)).holds);
    CHECK(at(Rat(3, 4), Rat(1, 2)).threshold == "s <= t");
}

TEST_CASE("deltal2 vacuous when the bracket vanishes") {
    const Family fam = parse_family("su", 2);
    const Decomposition& D = cached_decomposition(fam);
    Metric m{fam, Rat(1, 2), Rat(1, 2)};
    const auto& X = D.basis(Part::P2)[0];
    // U in h commutes with the central p2 direction.
    const auto& U = D.basis(Part::H)[0];
    auto c = deltal2_check(m, D, X, U);
    CHECK(c.holds);
    CHECK(c.rhs == Rat(0));
}

TEST_CASE("table2 reports: verdict pattern matches the classified region") {
    SUBCASE("u family") {
        auto rep = table2_report(TableRow::U, 3, 41, false);
        CHECK(rep.pattern_consistent);
        bool saw_outside = false;
        for (const auto& g : rep.points) {
            if (g.t == Rat(26, 25)) {  // 1.04, the first grid point above 1
                saw_outside = true;
                CHECK(!g.all_pass);
                CHECK(g.failing == "double-bracket-bound");
            }
            if (g.t == Rat(1)) CHECK(g.all_pass);
        }
        CHECK(saw_outside);
    }
    SUBCASE("su family at n = 2: t = 1/2 fails below the 3/4 bound") {
        auto rep = table2_report(TableRow::SU, 2, 41, false);
        CHECK(rep.pattern_consistent);
        for (const auto& g : rep.points) {
            if (g.t == Rat(1, 2)) {
                CHECK(!g.all_pass);
                CHECK(g.failing == "centralizer-bound");
            }
            if (g.t == Rat(3, 4) || g.t == Rat(1)) CHECK(g.all_pass);
        }
    }
    SUBCASE("spin9: both endpoints pass, both sides outside fail") {
        auto rep = table2_report(TableRow::Spin9, 0, 41, false);
        CHECK(rep.pattern_consistent);
        for (const auto& g : rep.points) {
            if (g.t == Rat(1, 4) || g.t == Rat(1)) CHECK(g.all_pass);
            if (g.t == Rat(1, 20)) CHECK(!g.all_pass);
            if (g.t == Rat(5, 4)) CHECK(!g.all_pass);
        }
    }
    SUBCASE("sp rows") {
        CHECK(table2_report(TableRow::SpSp1, 2, 21, false).pattern_consistent);
        CHECK(table2_report(TableRow::Sp, 2, 21, false).pattern_consistent);
    }
    SUBCASE("sp-split 2d grid honors the order ideal") {
        auto rep = table2_report(TableRow::SpU1, 1, 21, false);
        CHECK(rep.pattern_consistent);
        for (const auto& g : rep.points)
            if (g.inside) CHECK(g.s <= g.t);
    }
}

TEST_CASE("passing set is an interval in t") {
    for (auto row : {TableRow::U, TableRow::SU, TableRow::SpSp1, TableRow::Sp, TableRow::Spin9}) {
        auto rep = table2_report(row, 2, 41, false);
        std::vector<std::pair<Rat, bool>> line;
        for (const auto& g : rep.points) line.emplace_back(g.t, g.all_pass);
        std::sort(line.begin(), line.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        int transitions = 0;
        for (size_t k = 1; k < line.size(); ++k)
            transitions += line[k].second != line[k - 1].second ? 1 : 0;
        CHECK(transitions <= 2);
    }
}

TEST_CASE("combined admissible parameters stay admissible (dual cone)") {
    // Combining two points of the classified region lands inside it; their
    // duals combine linearly.
    auto inside = [&](TableRow row, int n, const Rat& t) {
        for (const auto& c : necessary_checks(row, n, t, t))
            if (!c.holds) return false;
        return true;
    };
    for (auto row : {TableRow::U, TableRow::SU, TableRow::Spin9}) {
        const int n = 2;
        const Rat lo = row == TableRow::U ? Rat(1, 10)
                       : row == TableRow::SU ? Rat(3, 4)
                                             : Rat(1, 4);
        const Rat hi(1);
        for (const Rat theta : {Rat(1, 3), Rat(1, 2), Rat(9, 10)}) {
            const Rat combined = Rat(1) / ((Rat(1) - theta) / lo + theta / hi);
            CHECK(inside(row, n, combined));
        }
    }
}

TEST_CASE("sampled orbit test: constant-length fields never violate, skewed diagonals do") {
    const Family fam = parse_family("u", 2);
    const Decomposition& D = cached_decomposition(fam);
    Metric round{fam, Rat(1), Rat(1)};
    SUBCASE("unit field") {
        DMatrix W(Field::C, 3);
        for (int k = 0; k < 3; ++k) W.at(k, k).c[1] = 1.0;
        auto res = sampled_delta_test(W, round, D, 2000, 7, false);
        CHECK(res.violations == 0);
        CHECK(res.worst_margin <= 1e-8);
    }
    SUBCASE("maximal-displacement field from the traceless construction") {
        std::vector<HyperComplex<double>> v(3, HyperComplex<double>(Field::C));
        v[0].c[1] = 0.5;
        v[1].c[0] = 0.25;
        v[2].c[1] = -0.75;
        auto W = su_delta_field(v);
        auto res = sampled_delta_test(W, round, D, 2000, 11, false);
        CHECK(res.violations == 0);
        CHECK(res.worst_margin <= 1e-8);
    }
    SUBCASE("diag(i, 2i, 0) is caught") {
        DMatrix W(Field::C, 3);
        W.at(0, 0).c[1] = 1.0;
        W.at(1, 1).c[1] = 2.0;
        auto res = sampled_delta_test(W, round, D, 2000, 13, false);
        CHECK(res.violations > 0);
        CHECK(res.worst_margin > 1.0);  // the orbit reaches norm^2 = 4 against 1
    }
}
