#include "hesscurve/ovalbound.hpp"

#include <algorithm>

#include "hesscurve/error.hpp"

namespace hesscurve {

HarnackBounds harnack_bounds(int d) {
  if (d < 1) throw Error(Errc::InvalidArgument, "harnack_bounds needs d >= 1");
  const long genus = static_cast<long>(d - 1) * (d - 2) / 2;
  return {genus + 1, genus, d};
}

bool is_square_free(const BivarPoly& h) {
  if (h.is_zero()) throw Error(Errc::ZeroPolynomial, "square-free test of the zero polynomial");
  auto coeffs = as_poly_in(h, Var::Y);
  UnivarPoly content;
  for (const auto& c : coeffs) content = gcd(content, c);
  if (content.degree() > 0) {
    if (gcd_and_square_free(content).gcd.degree() > 0) return false;
    for (auto& c : coeffs) c = exact_quotient(c, content);
  }
  if (coeffs.size() <= 1) return true;
  std::vector<UnivarPoly> deriv;
  for (std::size_t k = 1; k < coeffs.size(); ++k) deriv.push_back(coeffs[k] * Rational(static_cast<long>(k)));
  return !subresultant_resultant(coeffs, deriv).is_zero();
}

namespace {

// Real critical points of the projection onto x of the curve g = 0, or -1
// when g is not in generic position for that projection.
int generic_vertical_count(const BivarPoly& g) {
  const int d = g.degree();
  if (d < 1 || g.degree_in(Var::Y) != d) return -1;  // lc_y(g) must be a nonzero constant
  const UnivarPoly res = subresultant_resultant(as_poly_in(g, Var::Y), as_poly_in(differentiate(g, Var::Y), Var::Y));
  if (res.is_zero()) return -1;
  if (res.degree() == 0) return 0;
  const SturmSequence sturm(res);
  if (sturm.square_free().degree() != res.degree()) return -1;
  return static_cast<int>(sturm.count());
}

}  // namespace

namespace detail {

ProjectionCount vertical_count(const BivarPoly& g) {
  if (g.degree_in(Var::Y) < 1) {
    // g = g(x): the curve is a union of vertical lines
    return {0, false, 0};
  }
  int count = generic_vertical_count(g);
  if (count >= 0) return {count, false, 0};
  for (int lambda = 1; lambda <= kShearBudget; ++lambda) {
    count = generic_vertical_count(shear(g, lambda));
    if (count >= 0) return {count, true, lambda};
  }
  throw Error(Errc::ShearBudgetExceeded, "no generic shear found for " + to_string(g));
}

}  // namespace detail

ProjectionCount projection_critical_count(const BivarPoly& h, Axis axis) {
  if (!is_square_free(h)) throw Error(Errc::NonSquareFree, "curve has a repeated factor");
  return detail::vertical_count(axis == Axis::X ? h : swap_variables(h));
}

int infinite_point_count(const BivarPoly& h) {
  const DegreeForm form = degree_form(h);
  int count = form.root_at_x_direction ? 1 : 0;
  if (form.dehomogenized.degree() >= 1) count += static_cast<int>(sturm_count(form.dehomogenized));
  return count;
}

TangentCounts tangent_counts(const BivarPoly& h) {
  if (!is_square_free(h)) throw Error(Errc::NonSquareFree, "curve has a repeated factor");
  return {detail::vertical_count(h).count, detail::vertical_count(swap_variables(h)).count};
}

CurveSummary oval_upper_bound(const BivarPoly& h) {
  if (!is_square_free(h)) throw Error(Errc::NonSquareFree, "curve has a repeated factor");
  const ProjectionCount vertical = detail::vertical_count(h);
  const ProjectionCount horizontal = detail::vertical_count(swap_variables(h));
  CurveSummary s;
  s.degree = h.degree();
  s.vertical_tangent_count = vertical.count;
  s.horizontal_tangent_count = horizontal.count;
  s.oval_upper_bound = std::min(vertical.count, horizontal.count) / 2;
  s.infinite_real_points = infinite_point_count(h);
  s.sheared = vertical.sheared || horizontal.sheared;
  return s;
}

std::vector<RootInterval> critical_values(const BivarPoly& h, Axis axis) {
  const BivarPoly g = axis == Axis::X ? h : swap_variables(h);
  if (g.degree_in(Var::Y) < 1) return {};
  const UnivarPoly res = subresultant_resultant(as_poly_in(g, Var::Y), as_poly_in(differentiate(g, Var::Y), Var::Y));
  if (res.is_zero() || res.degree() < 1) return {};
  return isolate_roots(res);
}

}  // namespace hesscurve
