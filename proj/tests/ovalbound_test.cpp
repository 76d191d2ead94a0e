#include <doctest.h>

#include <cmath>
#include <functional>
#include <tuple>
#include <vector>

#include "hesscurve/error.hpp"
#include "hesscurve/fixtures.hpp"
#include "hesscurve/hessian.hpp"
#include "hesscurve/ovalbound.hpp"
#include "hesscurve/parse.hpp"

using namespace hesscurve;

namespace {

const char* const kThm1H =
    "25-134x-374y+91x^2+948xy+1137y^2+429x^3+612x^2y-2313xy^2-876y^3+63x^4+54x^3y-99x^2y^2-234xy^3+675y^4";

Errc code_of(const std::function<void()>& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

// Sweeps x across the window and counts the columns where the number of
// sign changes of h(x, .) along a fine y grid changes. Each vertical tangent
// of a smooth curve inside the window shows up as one such event.
int numeric_vertical_tangents(const BivarPoly& h, double x0, double x1, double y0, double y1, int nx, int ny) {
  std::vector<std::tuple<double, int, int>> terms;
  for (const auto& [m, c] : h.terms()) terms.emplace_back(c.get_d(), m.x, m.y);
  auto eval = [&](double x, double y) {
    double v = 0;
    for (const auto& [c, i, j] : terms) v += c * std::pow(x, i) * std::pow(y, j);
    return v;
  };
  int events = 0, last = -1;
  for (int i = 0; i <= nx; ++i) {
    const double x = x0 + (x1 - x0) * i / nx;
    int crossings = 0;
    double prev = eval(x, y0);
    for (int j = 1; j <= ny; ++j) {
      const double v = eval(x, y0 + (y1 - y0) * j / ny);
      if ((v < 0) != (prev < 0)) ++crossings;
      prev = v;
    }
    if (last >= 0 && crossings != last) ++events;
    last = crossings;
  }
  return events;
}

}  // namespace

TEST_CASE("harnack bounds") {
  const HarnackBounds b4 = harnack_bounds(4);
  CHECK(b4.compact_ovals == 4);
  CHECK(b4.noncompact_ovals == 3);
  CHECK(b4.unbounded == 4);
  CHECK(harnack_bounds(8).compact_ovals == 22);
  CHECK(harnack_bounds(10).compact_ovals == 37);
  CHECK(harnack_bounds(1).compact_ovals == 1);
  CHECK(code_of([] { harnack_bounds(0); }) == Errc::InvalidArgument);
}

TEST_CASE("conics") {
  const BivarPoly circle = parse_poly("x^2 + y^2 - 1");
  const CurveSummary s = oval_upper_bound(circle);
  CHECK(s.degree == 2);
  CHECK(s.vertical_tangent_count == 2);
  CHECK(s.horizontal_tangent_count == 2);
  CHECK(s.oval_upper_bound == 1);
  CHECK(s.infinite_real_points == 0);
  CHECK(!s.sheared);

  const auto xs = critical_values(circle, Axis::X);
  REQUIRE(xs.size() == 2);
  CHECK(xs[0].lo <= -1);
  CHECK(-1 <= xs[0].hi);
  CHECK(xs[1].lo <= 1);
  CHECK(1 <= xs[1].hi);

  CHECK(tangent_counts(parse_poly("x^2 + xy + y^2 - 1")).vertical == 2);
  CHECK(infinite_point_count(parse_poly("x^2 - y^2 - 1")) == 2);
  CHECK(infinite_point_count(parse_poly("y - x^2")) == 1);
  CHECK(infinite_point_count(circle) == 0);
}

TEST_CASE("points at infinity include the x direction") {
  // xy - 1 meets the line at infinity at (1:0:0) and (0:1:0)
  CHECK(infinite_point_count(parse_poly("xy - 1")) == 2);
  // top form y^3 vanishes only at (1:0:0)
  CHECK(infinite_point_count(parse_poly("y^3 - x")) == 1);
  CHECK(infinite_point_count(parse_poly("x^3 - y")) == 1);
}

TEST_CASE("hyperbola needs a shear and has no vertical tangents") {
  const ProjectionCount c = projection_critical_count(parse_poly("xy - 1"), Axis::X);
  CHECK(c.sheared);
  CHECK(c.shear_lambda == 1);
  CHECK(c.count == 0);
}

TEST_CASE("shared critical abscissae force a shear") {
  // two ovals around y = 2 and y = -2, mirror images with the same vertical tangents
  const BivarPoly h = parse_poly("x^2 + y^4 - 8y^2 + 15");
  CHECK(is_square_free(h));
  const ProjectionCount c = projection_critical_count(h, Axis::X);
  CHECK(c.sheared);
  CHECK(c.count == 4);
  CHECK(oval_upper_bound(h).oval_upper_bound == 2);
}

TEST_CASE("degenerate curves") {
  const BivarPoly circle = parse_poly("x^2 + y^2 - 1");
  CHECK(!is_square_free(circle * circle));
  CHECK(!is_square_free(parse_poly("x^2") * circle));
  CHECK(code_of([&] { projection_critical_count(circle * circle, Axis::X); }) == Errc::NonSquareFree);
  // a node is a double root of the discriminant in every direction
  CHECK(code_of([] { projection_critical_count(parse_poly("x^2 - y^2"), Axis::X); }) == Errc::ShearBudgetExceeded);
  CHECK(code_of([] { is_square_free(BivarPoly()); }) == Errc::ZeroPolynomial);
}

TEST_CASE("theorem 1 hessian") {
  const BivarPoly h = parse_poly(kThm1H);
  const CurveSummary s = oval_upper_bound(h);
  CHECK(s.vertical_tangent_count == 8);
  CHECK(s.horizontal_tangent_count == 8);
  CHECK(s.oval_upper_bound == 4);
  CHECK(s.infinite_real_points == 0);
  CHECK(numeric_vertical_tangents(h, -8, 6, -4, 5, 4000, 3000) == 8);
  CHECK(numeric_vertical_tangents(swap_variables(h), -4, 5, -8, 6, 3000, 4000) == 8);
}

TEST_CASE("forced shears keep the bound") {
  for (const char* text : {"x^2 + y^2 - 1", kThm1H}) {
    const BivarPoly h = parse_poly(text);
    const int base = oval_upper_bound(h).oval_upper_bound;
    for (int lambda = 1; lambda <= 3; ++lambda) {
      CAPTURE(lambda);
      CHECK(oval_upper_bound(shear(h, lambda)).oval_upper_bound == base);
    }
  }
}

TEST_CASE("example fixtures") {
  for (const auto& ex : load_examples()) {
    CAPTURE(ex.id);
    const CurveSummary s = oval_upper_bound(hessian_of(ex.f));
    CHECK(s.degree == 2 * ex.degree() - 4);
    CHECK(s.infinite_real_points <= s.degree);
    CHECK(!s.sheared);
    if (ex.compact) CHECK(s.infinite_real_points == 0);
  }
}
