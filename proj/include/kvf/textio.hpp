#pragma once

#include <string>

#include "kvf/matrix.hpp"

namespace kvf {

// Text formats used on the command line and by export/import.
//
// Scalars:   signed rational terms with units i, j, k, e.g. "1/2-3i+2k".
// Matrices:  entries separated by ',', rows separated by ';'.
// They round-trip exactly in rational mode.

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

std::string hc_str(const HyperComplex<Rat>& v);
HyperComplex<Rat> parse_hc(const std::string& s, Field f);

std::string matrix_str(const RatMatrix& m);
RatMatrix parse_matrix(const std::string& s, Field f);

// Vectors are accepted as a single-row or single-column matrix.
std::vector<HyperComplex<Rat>> parse_vector(const std::string& s, Field f);
std::string vector_str(const std::vector<HyperComplex<Rat>>& v);

std::string format_double(double v);

}  // namespace kvf
