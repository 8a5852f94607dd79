#pragma once

// Small text formats accepted on the command line:
//   complex     "0.5", "-2i", "0.5-0.25i", "i"
//   polynomial  "identity", "1+z", "2 - 0.5z^3 + (1+i)z"
//   symbol      "z/(2-z)", "(1+z)/(3-z)"  (affine over affine in z)

#include <string_view>
#include <vector>

#include "hyperlab/hardy.hpp"
#include "hyperlab/moebius.hpp"

namespace hyperlab::cli {

Complex parse_complex(std::string_view text);
/// Coefficients c_0..c_D of a polynomial in z.
std::vector<Complex> parse_polynomial(std::string_view text);
HardyFunction parse_function(std::string_view text);
MoebiusMap parse_symbol(std::string_view text);

}  // namespace hyperlab::cli
