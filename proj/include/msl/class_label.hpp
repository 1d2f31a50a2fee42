#pragma once

#include <string>

#include "msl/mu_lattice.hpp"

namespace msl {

// Parses a product of factors, each optionally raised to a power:
//   CP<n>       projective space
//   H<i>_<j>    Milnor hypersurface in CP^i x CP^j
//   X<n>_<d>    degree-d hypersurface in CP^n
//   x<n>        chosen polynomial generator
//   <integer>   scalar
// e.g. "CP1^2", "2*H2_3", "x2*x1^2", "X3_4".
MUClass parse_class_label(const MUBasis& basis, const std::string& label);

}  // namespace msl
