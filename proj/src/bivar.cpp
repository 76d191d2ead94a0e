#include <algorithm>
#include <sstream>

#include "hesscurve/error.hpp"
#include "hesscurve/polyring.hpp"

namespace hesscurve {

BivarPoly::BivarPoly(TermMap terms) : terms_(std::move(terms)) {
  for (auto& [m, c] : terms_) c.canonicalize();
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

BivarPoly BivarPoly::constant(const Rational& c) { return term(c, 0, 0); }

BivarPoly BivarPoly::term(const Rational& c, int i, int j) {
  BivarPoly p;
  p.add_term({i, j}, c);
  return p;
}

int BivarPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int BivarPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Var::X ? m.x : m.y);
  return d;
}

Rational BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivarPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  Rational t = c;
  t.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, t);
  if (!inserted) {
    it->second += t;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  Rational t = s;
  t.canonicalize();
  for (auto& [m, c] : terms_) c *= t;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  Rational tmp;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      out.add_term({ma.x + mb.x, ma.y + mb.y}, tmp);
    }
  }
  return out;
}

BivarPoly differentiate(const BivarPoly& p, Var v) {
  BivarPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    const int e = v == Var::X ? m.x : m.y;
    if (e == 0) continue;
    const Monomial dm = v == Var::X ? Monomial{m.x - 1, m.y} : Monomial{m.x, m.y - 1};
    out.emplace(dm, c * e);
  }
  return BivarPoly(std::move(out));
}

BivarPoly integrate(const BivarPoly& p, Var v) {
  BivarPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    const int e = v == Var::X ? m.x : m.y;
    const Monomial im = v == Var::X ? Monomial{m.x + 1, m.y} : Monomial{m.x, m.y + 1};
    out.emplace(im, c / (e + 1));
  }
  return BivarPoly(std::move(out));
}

Rational evaluate(const BivarPoly& p, const Rational& x, const Rational& y) {
  const auto in_x = as_poly_in(p, Var::X);
  Rational acc(0);
  for (auto it = in_x.rbegin(); it != in_x.rend(); ++it) {
    acc *= x;
    acc += (*it)(y);
  }
  return acc;
}

BivarPoly swap_variables(const BivarPoly& p) {
  BivarPoly::TermMap out;
  for (const auto& [m, c] : p.terms()) out.emplace(Monomial{m.y, m.x}, c);
  return BivarPoly(std::move(out));
}

BivarPoly substitute_linear(const BivarPoly& p, const std::array<Rational, 4>& m) {
  if (p.is_zero()) return p;
  const BivarPoly u = BivarPoly::term(m[0], 1, 0) + BivarPoly::term(m[1], 0, 1);
  const BivarPoly v = BivarPoly::term(m[2], 1, 0) + BivarPoly::term(m[3], 0, 1);
  const int d = p.degree();
  std::vector<BivarPoly> upow{BivarPoly::constant(1)}, vpow{BivarPoly::constant(1)};
  for (int k = 1; k <= d; ++k) {
    upow.push_back(upow.back() * u);
    vpow.push_back(vpow.back() * v);
  }
  BivarPoly out;
  for (const auto& [mono, c] : p.terms()) {
    out += (upow[static_cast<std::size_t>(mono.x)] * vpow[static_cast<std::size_t>(mono.y)]) * c;
  }
  return out;
}

BivarPoly shear(const BivarPoly& p, const Rational& lambda) {
  return substitute_linear(p, {Rational(1), lambda, Rational(0), Rational(1)});
}

std::vector<UnivarPoly> as_poly_in(const BivarPoly& p, Var main) {
  const int dm = p.degree_in(main);
  const int other = p.degree_in(main == Var::X ? Var::Y : Var::X);
  if (dm < 0) return {};
  std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(dm) + 1,
                                           std::vector<Rational>(static_cast<std::size_t>(other) + 1));
  for (const auto& [m, c] : p.terms()) {
    const auto k = static_cast<std::size_t>(main == Var::X ? m.x : m.y);
    const auto e = static_cast<std::size_t>(main == Var::X ? m.y : m.x);
    dense[k][e] = c;
  }
  std::vector<UnivarPoly> out;
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(std::move(row));
  return out;
}

BivarPoly from_poly_in(std::span<const UnivarPoly> coeffs, Var main) {
  BivarPoly::TermMap out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto cs = coeffs[k].coeffs();
    for (std::size_t e = 0; e < cs.size(); ++e) {
      if (sgn(cs[e]) == 0) continue;
      const int ki = static_cast<int>(k), ei = static_cast<int>(e);
      out.emplace(main == Var::X ? Monomial{ki, ei} : Monomial{ei, ki}, cs[e]);
    }
  }
  return BivarPoly(std::move(out));
}

std::string to_string(const BivarPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && m.degree() > 0;
    bool need_star = false;
    if (!unit) {
      out << to_string(mag);
      need_star = true;
    }
    auto emit = [&](char var, int e) {
      if (e == 0) return;
      if (need_star) out << '*';
      out << var;
      if (e > 1) out << '^' << e;
      need_star = true;
    };
    emit('x', m.x);
    emit('y', m.y);
  }
  return out.str();
}

TrivariateTable homogenize(const BivarPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "homogenize of the zero polynomial");
  const int d = p.degree();
  TrivariateTable out;
  for (const auto& [m, c] : p.terms()) out.emplace(std::array<int, 3>{m.x, m.y, d - m.degree()}, c);
  return out;
}

DegreeForm degree_form(const BivarPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "degree form of the zero polynomial");
  const int d = p.degree();
  std::vector<Rational> g(static_cast<std::size_t>(d) + 1);
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == d) g[static_cast<std::size_t>(m.x)] = c;
  }
  DegreeForm form;
  form.pure_x_coeff = g.back();
  form.root_at_x_direction = sgn(form.pure_x_coeff) == 0;
  form.dehomogenized = UnivarPoly(std::move(g));
  return form;
}

}  // namespace hesscurve
