#pragma once

#include <cstddef>
#include <vector>

#include "hesscurve/polyring.hpp"

namespace hesscurve {

/// Sturm chain of the square-free part of a nonzero polynomial. Members are
/// kept as primitive integer polynomials; only signs are ever consumed, so
/// positive rescaling along the chain is harmless.
class SturmSequence {
 public:
  /// Throws Error(ZeroPolynomial) for u = 0.
  explicit SturmSequence(const UnivarPoly& u);

  const UnivarPoly& square_free() const { return chain_.front(); }

  int variations_at(const Rational& t) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  /// Distinct real roots on the whole line.
  std::size_t count() const;
  /// Distinct real roots in (lo, hi]; endpoints are not checked here.
  std::size_t count(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<UnivarPoly> chain_;
};

/// Distinct real roots of u on the whole line. Throws Error(ZeroPolynomial).
std::size_t sturm_count(const UnivarPoly& u);

/// Distinct real roots of u in (lo, hi]. Throws Error(EndpointIsRoot) if u
/// vanishes at lo or hi, Error(InvalidArgument) unless lo < hi.
std::size_t sturm_count(const UnivarPoly& u, const Rational& lo, const Rational& hi);

/// Sign of u(t), computed in integer arithmetic when u has integer coefficients.
int sign_at(const UnivarPoly& u, const Rational& t);

/// 1 + max |a_k / a_n|: every complex root has modulus strictly below it.
Rational cauchy_bound(const UnivarPoly& u);

/// Open interval (lo, hi) holding exactly one distinct real root; neither
/// endpoint is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// One interval per distinct real root, sorted and pairwise disjoint, each of
/// width at most `tolerance`, by exact bisection. Throws Error(ZeroPolynomial).
std::vector<RootInterval> isolate_roots(const UnivarPoly& u, const Rational& tolerance = Rational(1, 1 << 20));

/// z^4 + a z^2 + b z + c.
struct ReducedQuartic {
  Rational a, b, c;
};

struct QuarticInvariants {
  Rational delta;  ///< discriminant of the reduced quartic
  Rational L;      ///< 2a(a^2 - 4c) + 9b^2
  Rational a;
};

/// Makes q monic, reads it as z^4 + 4*alpha*z^3 + beta*z^2 + gamma*z + delta and
/// shifts z -> z - alpha. Throws Error(WrongDegree) unless deg q = 4.
ReducedQuartic reduce_quartic(const UnivarPoly& q);

QuarticInvariants quartic_invariants(const ReducedQuartic& r);

/// Delta > 0 and (a >= 0 or L >= 0). Reports false whenever Delta = 0.
/// Throws Error(WrongDegree) unless deg q = 4.
bool quartic_has_no_real_roots(const UnivarPoly& q);

}  // namespace hesscurve
