#pragma once

// Text grammar shared by coefficient literals, relations and constraints:
// sums and differences of '*'-joined factors; a factor is a number, a
// generator, the field generator, a named parameter or a parenthesised
// expression, optionally raised to an integer power. Scalars may be divided
// and raised to negative powers. Whitespace is ignored; errors carry the byte
// offset.

#include <map>
#include <string>
#include <string_view>

#include "ncalg/ncpoly.hpp"

namespace ncalg {

using ParameterMap = std::map<std::string, FieldElement>;

NcPoly parse_ncpoly(std::string_view text, const RingPtr& ring, const ParameterMap& params = {});

/// Parses an expression that must evaluate to a scalar (no generators).
FieldElement parse_scalar(std::string_view text, const FieldPtr& field, const ParameterMap& params = {});

}  // namespace ncalg
