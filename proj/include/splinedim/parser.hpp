#pragma once

#include <string_view>

#include "splinedim/polynomial.hpp"

namespace splinedim {

/// Recursive-descent parser for
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' positive-integer] | var ['^' nat] | '(' expr ')' ['^' nat]
/// Multiplication is always explicit. Throws ParseError with the offending column.
Polynomial parse_polynomial(std::string_view source, VarsPtr vars = VariableSet::xyz());

}  // namespace splinedim
