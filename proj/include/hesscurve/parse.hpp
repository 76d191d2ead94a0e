#pragma once

#include <string_view>

#include "hesscurve/polyring.hpp"

namespace hesscurve {

/// Parses the shared polynomial text grammar: terms `c`, `c*x^i`, `c*y^j`,
/// `c*x^i*y^j` joined by `+`/`-`, with `c` an integer or `num/den`.
/// Whitespace is ignored, `x^1` may be written `x`, the `*` may be omitted
/// (`12x^2`, `-2x^3y`) and repeated factors multiply. Throws Error(ParseError).
BivarPoly parse_poly(std::string_view text);

}  // namespace hesscurve
