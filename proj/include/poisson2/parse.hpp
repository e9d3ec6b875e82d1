#pragma once

#include <string_view>

#include "poisson2/qpoly.hpp"

namespace poisson2 {

/// Parses the polynomial grammar
///
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' nat)?
///   base     := 'x' | 'y' | rational | '(' expr ')'
///   rational := int ('/' posint)?
///
/// Whitespace-insensitive; implicit multiplication is rejected ("2x" is a
/// syntax error). Exact arithmetic throughout. Throws SyntaxError with the
/// offending position.
Poly parse_poly(std::string_view text);

}  // namespace poisson2
