#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/polyforms/poly.hpp"

namespace milnor::polyforms {

/// Syntax error; `position` is the 0-based character offset of the problem.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a polynomial over the named variables.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := power (['*'] power | '/' number)*
///   power  := atom ['^' ['-'] integer]
///   atom   := number | variable | '(' expr ')'
///
/// Numbers are nonnegative integers; `p/q` arises as integer division by a
/// literal. Negative exponents are accepted on single monomials only.
Poly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Splits "x,y,z" (or "x y z") into names.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace milnor::polyforms
