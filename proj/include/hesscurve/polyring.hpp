#pragma once

#include <array>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hesscurve/rational.hpp"

namespace hesscurve {

//---------------------------------------------------------------------------//
// Univariate polynomials
//---------------------------------------------------------------------------//

/// Dense polynomial over Q, coefficient index = exponent. The zero polynomial
/// has no coefficients and degree -1; otherwise the leading coefficient is
/// nonzero.
class UnivarPoly {
 public:
  UnivarPoly() = default;
  explicit UnivarPoly(std::vector<Rational> coeffs);

  static UnivarPoly constant(const Rational& c);
  static UnivarPoly monomial(const Rational& c, int exponent);
  /// The identity polynomial t.
  static UnivarPoly identity();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of t^k; zero outside [0, degree].
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;

  UnivarPoly derivative() const;

  UnivarPoly operator-() const;
  UnivarPoly& operator+=(const UnivarPoly& rhs);
  UnivarPoly& operator-=(const UnivarPoly& rhs);
  UnivarPoly& operator*=(const Rational& s);

  friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
  friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
  friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
  friend UnivarPoly operator*(UnivarPoly a, const Rational& s) { return a *= s; }
  friend UnivarPoly operator*(const Rational& s, UnivarPoly a) { return a *= s; }
  friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  UnivarPoly quotient;
  UnivarPoly remainder;
};

/// Euclidean division over Q; throws Error(ZeroPolynomial) on a zero divisor.
DivisionResult divide(const UnivarPoly& dividend, const UnivarPoly& divisor);

/// Quotient of an exact division; throws Error(Internal) if a remainder is left.
UnivarPoly exact_quotient(const UnivarPoly& dividend, const UnivarPoly& divisor);

/// The positive rational multiple of u with integer coefficients of gcd 1.
/// The sign of every coefficient is preserved.
UnivarPoly primitive_scaled(const UnivarPoly& u);

/// A positive multiple of divide(a, b).remainder with integer coefficients of
/// gcd 1, computed by integer pseudo-division. Throws Error(ZeroPolynomial) for b = 0.
UnivarPoly primitive_remainder(const UnivarPoly& a, const UnivarPoly& b);

/// primitive_scaled() with the sign flipped, if needed, so the leading
/// coefficient is positive. Zero maps to zero.
UnivarPoly normalized(const UnivarPoly& u);

/// Monic-free gcd over Q, returned normalized(). gcd(0, 0) = 0.
UnivarPoly gcd(const UnivarPoly& a, const UnivarPoly& b);

struct SquareFreeSplit {
  UnivarPoly gcd;                ///< gcd(u, u'), normalized
  UnivarPoly square_free_part;   ///< u / gcd(u, u'), normalized
};

/// Throws Error(ZeroPolynomial) for u = 0.
SquareFreeSplit gcd_and_square_free(const UnivarPoly& u);

/// Coefficients printed from the highest power down, e.g. "7*x^4 + 6*x^3 - 11".
std::string to_string(const UnivarPoly& u, char var = 'x');

//---------------------------------------------------------------------------//
// Bivariate polynomials
//---------------------------------------------------------------------------//

enum class Var { X, Y };

/// Exponent pair of x^i y^j.
struct Monomial {
  int x = 0;
  int y = 0;

  int degree() const { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order, lowest total degree first; within a degree, higher powers of
/// x come first (1, x, y, x^2, x*y, y^2, ...).
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.x > b.x;
  }
};

/// Sparse polynomial in x, y over Q. No zero coefficient is ever stored, so
/// equality of polynomials is equality of term maps.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedOrder>;

  BivarPoly() = default;
  explicit BivarPoly(TermMap terms);

  static BivarPoly constant(const Rational& c);
  static BivarPoly term(const Rational& c, int i, int j);
  static BivarPoly x() { return term(1, 1, 0); }
  static BivarPoly y() { return term(1, 0, 1); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(Var v) const;
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(int i, int j) const;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const Rational& s);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const Rational& s) { return a *= s; }
  friend BivarPoly operator*(const Rational& s, BivarPoly a) { return a *= s; }
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

BivarPoly differentiate(const BivarPoly& p, Var v);

/// Formal antiderivative with zero integration constant.
BivarPoly integrate(const BivarPoly& p, Var v);

/// Exact value, by Horner accumulation in y inside Horner in x.
Rational evaluate(const BivarPoly& p, const Rational& x, const Rational& y);

/// p(y, x).
BivarPoly swap_variables(const BivarPoly& p);

/// p(m00*x + m01*y, m10*x + m11*y).
BivarPoly substitute_linear(const BivarPoly& p, const std::array<Rational, 4>& m);

/// p(x + lambda*y, y).
BivarPoly shear(const BivarPoly& p, const Rational& lambda);

/// Coefficients of p viewed as a polynomial in `main` over Q[other]:
/// element k is the coefficient of main^k.
std::vector<UnivarPoly> as_poly_in(const BivarPoly& p, Var main);

/// Inverse of as_poly_in.
BivarPoly from_poly_in(std::span<const UnivarPoly> coeffs, Var main);

/// Terms printed lowest degree first in GradedOrder, e.g. "25 - 134*x - 374*y".
std::string to_string(const BivarPoly& p);

/// Homogenization table: exponents (i, j, k) of x^i y^j z^k with i+j+k = deg p.
using TrivariateTable = std::map<std::array<int, 3>, Rational>;

/// Throws Error(ZeroPolynomial) for p = 0.
TrivariateTable homogenize(const BivarPoly& p);

/// The top-degree form of p, seen on the line at infinity.
struct DegreeForm {
  /// p_top(x, 1); its real roots are the points (x : 1 : 0).
  UnivarPoly dehomogenized;
  /// Coefficient of x^d in p_top, i.e. p_top(1, 0).
  Rational pure_x_coeff;
  /// True iff (1 : 0 : 0) lies on the curve, i.e. pure_x_coeff = 0; that
  /// point is invisible in the dehomogenized form.
  bool root_at_x_direction = false;
};

/// Throws Error(ZeroPolynomial) for p = 0.
DegreeForm degree_form(const BivarPoly& p);

//---------------------------------------------------------------------------//
// Lines
//---------------------------------------------------------------------------//

/// a*x + b*y + c = 0 with integer coefficients of gcd 1 and the first nonzero
/// coefficient positive, or the line at infinity.
class Line {
 public:
  /// Throws Error(InvalidArgument) when a = b = 0.
  static Line affine(const Rational& a, const Rational& b, const Rational& c);
  static Line at_infinity();

  bool is_at_infinity() const { return at_infinity_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }

  /// Value of a*x + b*y + c; zero for the line at infinity.
  Rational form(const Rational& x, const Rational& y) const;

  /// The affine point at parameter t: (t, (-a*t - c)/b) when b != 0, else
  /// (-c/a, t). Throws Error(InvalidArgument) for the line at infinity.
  std::pair<Rational, Rational> point_at(const Rational& t) const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Line() = default;

  bool at_infinity_ = false;
  Integer a_, b_, c_;
};

std::string to_string(const Line& line);

/// p along the line's parametrization, without rescaling; for the line at
/// infinity this is degree_form(p).dehomogenized. Throws Error(ZeroPolynomial).
UnivarPoly restrict_to_line_unscaled(const BivarPoly& p, const Line& line);

/// restrict_to_line_unscaled() cleared of denominators: integer coefficients,
/// content 1, positive leading coefficient.
UnivarPoly restrict_to_line(const BivarPoly& p, const Line& line);

//---------------------------------------------------------------------------//
// Elimination
//---------------------------------------------------------------------------//

/// Resultant of p and q with respect to y, as a polynomial in x, computed by
/// the subresultant PRS over Q[x]. Requires both inputs to have positive
/// degree in y (Error(InvalidArgument) otherwise); throws
/// Error(IdenticallyZeroResultant) when p and q share a factor of positive
/// y-degree.
UnivarPoly resultant_y(const BivarPoly& p, const BivarPoly& q);

/// Resultant of two polynomials given by their coefficient lists over Q[t]
/// (as produced by as_poly_in). Returns zero on a common factor.
UnivarPoly subresultant_resultant(std::vector<UnivarPoly> a, std::vector<UnivarPoly> b);

}  // namespace hesscurve
