#pragma once

#include <string_view>

#include "branchroots/bipoly.hpp"
#include "branchroots/unipoly.hpp"

namespace branchroots {

// Expression grammar: integer and fraction literals, variables from the
// allowed set, +, -, *, ^ with nonnegative integer exponents, parentheses.
// Implicit multiplication is not accepted. Whitespace is insignificant.

UniPoly parse_unipoly(std::string_view text, Var var);
BiPoly parse_bipoly(std::string_view text);

}  // namespace branchroots
