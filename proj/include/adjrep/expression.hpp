#pragma once

#include <string_view>

#include "adjrep/symfunc.hpp"

namespace adjrep {

/// Evaluates a symmetric-function expression and returns it in the powersum
/// basis.
///
///   expr    := ['-'] term (('+' | '-') term)*
///   term    := power ('*' power)*
///   power   := postfix ['^' integer]
///   postfix := atom ('[' expr ']')*        plethysm, left to right
///   atom    := ('s' | 'p' | 'h') '[' [integer (',' integer)*] ']'
///            | integer ['/' integer]
///            | '(' expr ')'
///
/// Example: "s[1]^2*s[4]*s[2][s[1]^5*s[2]]". Whitespace is ignored. Throws
/// std::invalid_argument with the offending position on a syntax error.
SymFunc parse_expression(std::string_view text);

} // namespace adjrep
