#include <algorithm>
#include <sstream>

#include "hesscurve/error.hpp"
#include "hesscurve/polyring.hpp"

namespace hesscurve {

UnivarPoly::UnivarPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UnivarPoly UnivarPoly::constant(const Rational& c) { return UnivarPoly({c}); }

UnivarPoly UnivarPoly::monomial(const Rational& c, int exponent) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(exponent) + 1);
  coeffs.back() = c;
  return UnivarPoly(std::move(coeffs));
}

UnivarPoly UnivarPoly::identity() { return monomial(1, 1); }

void UnivarPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UnivarPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UnivarPoly::leading() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UnivarPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

double UnivarPoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UnivarPoly UnivarPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UnivarPoly(std::move(out));
}

UnivarPoly UnivarPoly::operator-() const {
  UnivarPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UnivarPoly& UnivarPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  Rational t = s;
  t.canonicalize();
  for (auto& c : coeffs_) c *= t;
  return *this;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return UnivarPoly(std::move(out));
}

DivisionResult divide(const UnivarPoly& dividend, const UnivarPoly& divisor) {
  if (divisor.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  const int db = divisor.degree();
  if (dividend.degree() < db) return {UnivarPoly(), dividend};

  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - db) + 1);
  const Rational inv_lead = 1 / divisor.leading();
  const auto dcoeffs = divisor.coeffs();
  Rational tmp;
  for (int k = dividend.degree(); k >= db; --k) {
    const auto ku = static_cast<std::size_t>(k);
    if (sgn(rem[ku]) == 0) continue;
    const Rational factor = rem[ku] * inv_lead;
    quot[ku - static_cast<std::size_t>(db)] = factor;
    for (int j = 0; j <= db; ++j) {
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), dcoeffs[static_cast<std::size_t>(j)].get_mpq_t());
      rem[static_cast<std::size_t>(k - db + j)] -= tmp;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UnivarPoly(std::move(quot)), UnivarPoly(std::move(rem))};
}

UnivarPoly exact_quotient(const UnivarPoly& dividend, const UnivarPoly& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) throw Error(Errc::Internal, "inexact polynomial division");
  return q;
}

UnivarPoly primitive_scaled(const UnivarPoly& u) {
  if (u.is_zero()) return u;
  Integer den_lcm(1), num_gcd(0);
  for (const auto& c : u.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  // content of u is num_gcd / den_lcm; dividing by it is a positive rescaling
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return u * scale;
}

namespace {

std::vector<Integer> integer_coeffs(const UnivarPoly& u) {
  const UnivarPoly p = primitive_scaled(u);
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num());
  return out;
}

}  // namespace

UnivarPoly primitive_remainder(const UnivarPoly& a, const UnivarPoly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return primitive_scaled(a);
  std::vector<Integer> rem = integer_coeffs(a);
  const std::vector<Integer> div = integer_coeffs(b);
  const std::size_t db = div.size() - 1;
  const Integer lead_abs = abs(div.back());
  const bool lead_negative = sgn(div.back()) < 0;
  Integer factor, tmp;
  // each step scales rem by |lead| > 0 and cancels its top coefficient
  for (std::size_t k = rem.size() - 1; k >= db; --k) {
    if (sgn(rem[k]) != 0) {
      factor = rem[k];
      if (lead_negative) factor = -factor;
      for (std::size_t i = 0; i < k; ++i) rem[i] *= lead_abs;
      for (std::size_t j = 0; j < db; ++j) {
        mpz_mul(tmp.get_mpz_t(), factor.get_mpz_t(), div[j].get_mpz_t());
        rem[k - db + j] -= tmp;
      }
    }
    rem[k] = 0;
    if (k == db) break;
  }
  rem.resize(db);
  Integer content(0);
  for (const auto& c : rem) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  std::vector<Rational> out;
  out.reserve(rem.size());
  for (auto& c : rem) {
    if (sgn(content) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    out.emplace_back(c);
  }
  return UnivarPoly(std::move(out));
}

UnivarPoly normalized(const UnivarPoly& u) {
  UnivarPoly p = primitive_scaled(u);
  if (!p.is_zero() && sgn(p.leading()) < 0) p = -p;
  return p;
}

UnivarPoly gcd(const UnivarPoly& a, const UnivarPoly& b) {
  UnivarPoly r0 = primitive_scaled(a);
  UnivarPoly r1 = primitive_scaled(b);
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    UnivarPoly r2 = primitive_remainder(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return normalized(r0);
}

SquareFreeSplit gcd_and_square_free(const UnivarPoly& u) {
  if (u.is_zero()) throw Error(Errc::ZeroPolynomial, "square-free part of the zero polynomial");
  UnivarPoly g = gcd(u, u.derivative());
  if (g.is_zero()) g = UnivarPoly::constant(1);  // u constant: u' = 0, gcd(c, 0) ~ 1
  if (g.degree() == 0) g = UnivarPoly::constant(1);
  return {g, normalized(exact_quotient(u, g))};
}

std::string to_string(const UnivarPoly& u, char var) {
  if (u.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = u.degree(); k >= 0; --k) {
    const Rational c = u.coeff(k);
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) out << to_string(mag);
    if (k > 0) {
      if (!unit) out << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

}  // namespace hesscurve
