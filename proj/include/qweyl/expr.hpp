#pragma once

#include <string>

#include "qweyl/algebra.hpp"

namespace qweyl {

/**
 * Parses an operator expression over the given root datum. Grammar:
 *
 *   expr    := ['-'] term (('+'|'-') term)*
 *   term    := factor ( ['*'] factor )*          (juxtaposition multiplies)
 *   factor  := atom [ '^' exponent ]
 *   atom    := 'q' | 'E' [vec] | 'Q' [vec] | number | '(' expr ')'
 *   vec     := '[' int (',' int)* ']'
 *   exponent:= '{' rational '}' | integer
 *
 * Products multiply in the algebra (E before Q reorders with q-powers).
 * Bare E/Q (no vector) are the rank-1 shorthand. Throws
 * std::invalid_argument with the offending position on bad input.
 */
AlgebraElement parse_algebra_expr(const RootData& rd, const std::string& text);

/// Same grammar without the symbol q; the result is the classical
/// polynomial (monomial products commute).
CommPoly parse_comm_expr(const RootData& rd, const std::string& text);

} // namespace qweyl
