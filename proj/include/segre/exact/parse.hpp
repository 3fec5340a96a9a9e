#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "segre/exact/polynomial.hpp"

namespace segre::exact {

// Grammar: sums and differences of products of powers; literals n or n/m; parentheses;
// unary sign; '^' takes a non-negative integer literal. Implicit multiplication is rejected.
// Throws ParseError (with a 0-based character position) on malformed input or unknown names.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            Field f = Field::rationals());

// Parses a rational literal such as "-3" or "7/2".
mpq_class parse_rational(std::string_view text);

}  // namespace segre::exact
