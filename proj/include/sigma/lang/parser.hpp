#pragma once

#include <string_view>
#include <vector>

#include "sigma/lang/ast.hpp"

namespace sigma::lang {

/// Parses a whole program. Throws ParseError with line, column and the
/// expected-token set on the first syntax error.
std::vector<Statement> parse(std::string_view source);

/// Parses a single expression (no statement forms).
ExprPtr parse_expression(std::string_view source);

}  // namespace sigma::lang
