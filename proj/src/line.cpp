#include "hesscurve/error.hpp"
#include "hesscurve/polyring.hpp"

namespace hesscurve {

Line Line::affine(const Rational& a, const Rational& b, const Rational& c) {
  if (sgn(a) == 0 && sgn(b) == 0) throw Error(Errc::InvalidArgument, "line needs (a, b) != (0, 0)");
  Integer den(1), num(0);
  for (const Rational* q : {&a, &b, &c}) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q->get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q->get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(a) < 0 || (sgn(a) == 0 && sgn(b) < 0)) scale = -scale;

  Line line;
  line.a_ = Rational(a * scale).get_num();
  line.b_ = Rational(b * scale).get_num();
  line.c_ = Rational(c * scale).get_num();
  return line;
}

Line Line::at_infinity() {
  Line line;
  line.at_infinity_ = true;
  return line;
}

Rational Line::form(const Rational& x, const Rational& y) const {
  if (at_infinity_) return 0;
  return Rational(a_) * x + Rational(b_) * y + Rational(c_);
}

std::pair<Rational, Rational> Line::point_at(const Rational& t) const {
  if (at_infinity_) throw Error(Errc::InvalidArgument, "the line at infinity has no affine points");
  if (b_ != 0) return {t, Rational(-Rational(a_) * t - Rational(c_)) / Rational(b_)};
  return {ratio(-c_, a_), t};
}

std::string to_string(const Line& line) {
  if (line.is_at_infinity()) return "infinity";
  return line.a().get_str() + "," + line.b().get_str() + "," + line.c().get_str();
}

UnivarPoly restrict_to_line_unscaled(const BivarPoly& p, const Line& line) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "restriction of the zero polynomial");
  if (line.is_at_infinity()) return degree_form(p).dehomogenized;

  const int d = p.degree();
  if (line.b() != 0) {
    // y = slope * t + offset, x = t
    const Rational slope = ratio(-line.a(), line.b());
    const Rational offset = ratio(-line.c(), line.b());
    const UnivarPoly lin({offset, slope});
    std::vector<UnivarPoly> lin_pow{UnivarPoly::constant(1)};
    for (int k = 1; k <= d; ++k) lin_pow.push_back(lin_pow.back() * lin);
    UnivarPoly out;
    for (const auto& [m, c] : p.terms()) {
      out += UnivarPoly::monomial(c, m.x) * lin_pow[static_cast<std::size_t>(m.y)];
    }
    return out;
  }
  // x = x0 fixed, parameter y
  const Rational x0 = ratio(-line.c(), line.a());
  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
  for (const auto& [m, c] : p.terms()) coeffs[static_cast<std::size_t>(m.y)] += c * pow(x0, static_cast<unsigned>(m.x));
  return UnivarPoly(std::move(coeffs));
}

UnivarPoly restrict_to_line(const BivarPoly& p, const Line& line) {
  return normalized(restrict_to_line_unscaled(p, line));
}

}  // namespace hesscurve
