#include <doctest.h>

#include "hesscurve/error.hpp"
#include "hesscurve/parse.hpp"

using namespace hesscurve;

TEST_CASE("the paper's display style parses") {
  const BivarPoly f = parse_poly("-2y^2 +2xy +12x^2 +10y^3 +3xy^2 -10x^2y -13x^3");
  CHECK(f.coeff(0, 2) == -2);
  CHECK(f.coeff(1, 1) == 2);
  CHECK(f.coeff(2, 1) == -10);
  CHECK(f.terms().size() == 7);
}

TEST_CASE("explicit operators, rationals and repeated terms") {
  CHECK(parse_poly("3/4*x*y - 1/2") == parse_poly("3/4xy-1/2"));
  CHECK(parse_poly("x*x*y") == parse_poly("x^2y"));
  CHECK(parse_poly("x + x - 2x").is_zero());
  CHECK(parse_poly("0") == BivarPoly());
  CHECK(parse_poly("- x") == parse_poly("-1*x"));
  CHECK(parse_poly("y^0") == BivarPoly::constant(1));
}

TEST_CASE("printing and parsing round-trip") {
  for (const char* text : {"25 - 134*x - 374*y + 91*x^2", "x*y - x^4", "-1/3 + 7/2*y^5", "-1"}) {
    const BivarPoly p = parse_poly(text);
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("malformed input") {
  for (const char* bad : {"", "3*z", "x^", "x^-1", "2//3", "1/0", "x +", "(x+1)", "x y^2^3"}) {
    CAPTURE(bad);
    try {
      parse_poly(bad);
      FAIL("no error for " << bad);
    } catch (const Error& e) {
      CHECK((e.code() == Errc::ParseError || e.code() == Errc::InvalidArgument));
    }
  }
}
