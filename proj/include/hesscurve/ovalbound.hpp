#pragma once

#include <vector>

#include "hesscurve/polyring.hpp"
#include "hesscurve/realroots.hpp"

namespace hesscurve {

enum class Axis { X, Y };

/// Harnack's limits for a smooth real curve of degree d.
struct HarnackBounds {
  long compact_ovals = 0;     ///< 1 + (d-1)(d-2)/2, components of a compact affine curve
  long noncompact_ovals = 0;  ///< (d-1)(d-2)/2 bounded components of a noncompact curve
  long unbounded = 0;         ///< d
};

/// Throws Error(InvalidArgument) for d < 1.
HarnackBounds harnack_bounds(int d);

/// The search screen's verdict on one curve.
struct CurveSummary {
  int degree = 0;
  int oval_upper_bound = 0;
  int infinite_real_points = 0;
  int vertical_tangent_count = 0;
  int horizontal_tangent_count = 0;
  bool sheared = false;

  friend bool operator==(const CurveSummary&, const CurveSummary&) = default;
};

struct ProjectionCount {
  int count = 0;
  bool sheared = false;
  int shear_lambda = 0;  ///< 0 when no shear was applied
};

/// Maximum number of shears x -> x + lambda*y (lambda = 1, 2, ...) tried
/// before a curve is declared non-generic.
inline constexpr int kShearBudget = 16;

/// True iff h has no repeated factor. Uses the content of h in Q[x][y] and the
/// discriminant of its primitive part; no bivariate gcd is needed.
/// Throws Error(ZeroPolynomial).
bool is_square_free(const BivarPoly& h);

/// Number of real critical points of the projection of h = 0 onto `axis`
/// (vertical tangents for Axis::X, horizontal for Axis::Y), as the distinct
/// real roots of the square-free resultant of h and its partial derivative.
///
/// The count is taken only in generic position: the curve has no point at
/// infinity in the fibre direction and the resultant is square-free, so every
/// real root belongs to exactly one, necessarily real, critical point. When
/// that fails the coordinates are sheared; Error(ShearBudgetExceeded) after
/// kShearBudget attempts. Throws Error(NonSquareFree) for repeated factors.
ProjectionCount projection_critical_count(const BivarPoly& h, Axis axis);

/// Distinct real points of the projective closure on the line at infinity.
/// Zero means every real branch is bounded. Throws Error(ZeroPolynomial).
int infinite_point_count(const BivarPoly& h);

struct TangentCounts {
  int vertical = 0;
  int horizontal = 0;
};

TangentCounts tangent_counts(const BivarPoly& h);

/// Both projection counts, half their minimum as the oval bound, and the
/// number of real points at infinity. Errors as projection_critical_count.
CurveSummary oval_upper_bound(const BivarPoly& h);

/// Isolating intervals for the real roots of the square-free resultant of h
/// and its derivative along the fibre of `axis`, i.e. the x-values (Axis::X)
/// or y-values (Axis::Y) of all real critical points. Empty when h does not
/// depend on the fibre variable.
std::vector<RootInterval> critical_values(const BivarPoly& h, Axis axis);

namespace detail {

/// Vertical-tangent count of g = 0 with the shear fallback; the caller has
/// already established that g is square-free.
ProjectionCount vertical_count(const BivarPoly& g);

}  // namespace detail

}  // namespace hesscurve
