#pragma once

#include <sstream>
#include <string>

#include "weylgb/arith/param_scalar.hpp"

namespace weylgb::detail {

// Appends "coeff*mono" with a leading sign separator; multi-term
// coefficients are parenthesised. `mono` is "1" for a constant term.
void append_signed_term(std::ostringstream& os, bool first, const ParamScalar& c, const std::string& mono);

}  // namespace weylgb::detail
