#pragma once

#include "hirz/poly.hpp"

#include <string>

namespace hirz {

// Signed terms c*x^a*y^b in x and y; '*' and '^' may be omitted ("3/2x2y").
// Throws ParseError carrying the offending position.
BPoly parse_bpoly(const std::string& text);

}  // namespace hirz
