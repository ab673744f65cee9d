#pragma once

#include <cstdint>
#include <string>

#include "kvf/homspace.hpp"
#include "kvf/report.hpp"

namespace kvf {

// Options for the composite verification run. `mode` selects the arithmetic:
//   all      every suite
//   exact    rational-arithmetic checks only (zero residuals)
//   numeric  sampling suites only
// `only` restricts to one suite: clifford | identities | constructions |
// firey | table2. `family` filters by family name where applicable.
struct VerifyOptions {
    std::string mode = "all";
    std::string only;
    std::string family;
    uint64_t seed = 0;
    int cw_samples = 200;
    int orbit_samples = 2000;
    int grid_points = 41;
    int n = 2;
    bool parallel = true;
};

RunReport verify_paper(const VerifyOptions& opt);

// Export payloads (text; re-importable through the parsers).
std::string export_octonion_table();
std::string export_theta_basis();
std::string export_decomposition(const Family& f);

}  // namespace kvf
