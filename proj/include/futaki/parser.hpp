#pragma once

#include <cstddef>
#include <string_view>

#include "futaki/polynomial.hpp"

namespace futaki {

/// Parses an expression over variables x0 ... x{num_vars-1}.
///
/// Grammar (whitespace-insensitive):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | primary ['^' integer]
///   primary:= integer | 'x' index | '(' expr ')'
///
/// Division is only by a nonzero constant, which is how rational literals
/// such as `2/3*x1` are written. Throws ParseError with a byte offset on
/// malformed input, an out-of-range variable, or a negative exponent.
Polynomial parse_polynomial(std::string_view text, std::size_t num_vars);

}  // namespace futaki
