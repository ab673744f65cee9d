#pragma once

#include <string>
#include <vector>

#include "kvf/batch.hpp"
#include "kvf/homspace.hpp"
#include "kvf/report.hpp"

namespace kvf {

// One necessary inequality evaluated at exact parameters. `threshold` is the
// bound on t (or s) implied by solving lhs = rhs, as a rational.
struct Inequality {
    std::string name;
    std::string anchor;
    Rat lhs;
    Rat rhs;
    bool holds = false;
    std::string threshold;
};

// The double-bracket necessary inequality
//   x1 <[[Y,X],X]_h, .> >= (x2 - x1) <[[Y,X],X]_p2, .>
// for X in p1, Y in p2. When `realified` is set the norms are taken in the
// real representation the fields act by (so(2(n+1)) for the complex
// families); this matches the normalization of the printed values.
Inequality prop22_check(const Metric& m, const Decomposition& D, const RatMatrix& X,
                        const RatMatrix& Y, bool realified);

// The centralizer necessary inequality for X in p2:
//   (X, [U,[U,X]]_p) + ([U,X]_p, [U,X]_p) <= 0.
Inequality deltal2_check(const Metric& m, const Decomposition& D, const RatMatrix& X,
                         const RatMatrix& U);

// Classification rows of the diagonal-metric table.
enum class TableRow { U, SU, SpSp1, Sp, SpU1, Spin9 };
std::string table_row_label(TableRow row);

// The fixed-witness necessary checks for a row at exact parameters.
std::vector<Inequality> necessary_checks(TableRow row, int n, const Rat& t, const Rat& s);

// Membership in the classified parameter region.
bool in_table_region(TableRow row, int n, const Rat& t, const Rat& s);

struct GridOutcome {
    Rat t, s;
    bool inside = false;
    bool all_pass = false;
    std::string failing;  // first failing check when any
    std::vector<Inequality> checks;
};

struct Table2Report {
    TableRow row;
    int n = 1;
    std::vector<GridOutcome> points;
    // inside <=> all checks pass, at every grid point
    bool pattern_consistent = false;
};

// Runs every applicable check on a grid of 41 points per parameter over
// [1/20, 5/4], with the region endpoints added exactly.
Table2Report table2_report(TableRow row, int n, int grid_points = 41, bool parallel = true);

std::vector<CheckRecord> table2_records(const Table2Report& rep);

// Monte-Carlo orbit test of a candidate maximal-displacement vector.
OrbitScanResult sampled_delta_test(const DMatrix& W, const Metric& m, const Decomposition& D,
                                   int samples, uint64_t seed, bool parallel = true);

}  // namespace kvf
