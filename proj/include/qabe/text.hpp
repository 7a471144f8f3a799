#pragma once

// Text form of formal sums:
//   sum  := term (('+'|'-') term)*
//   term := [coeff '*'] '[' num '/' den ']'
// Whitespace is ignored.  The parser also accepts a leading sign, "[n]"
// for integral points and "0" for the empty sum.

#include <string>
#include <string_view>

#include "qabe/distribution.hpp"

namespace qabe {

// Terms with positive coefficients first; within a sign class larger
// coefficients first, then points in decreasing order in [0, 1).
// Example: "[1/3] + [2/15] - [4/15] - [1/5]".
std::string format_sum(const FormalSum& s);

// Throws ParseError.
FormalSum parse_sum(std::string_view text);

}  // namespace qabe
