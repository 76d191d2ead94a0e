#include "hesscurve/error.hpp"
#include "hesscurve/polyring.hpp"

namespace hesscurve {

namespace {

// Polynomial in the eliminated variable with coefficients in Q[t].
using CoeffPoly = std::vector<UnivarPoly>;

void trim(CoeffPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const CoeffPoly& p) { return static_cast<int>(p.size()) - 1; }

UnivarPoly power(const UnivarPoly& base, int e) {
  UnivarPoly result = UnivarPoly::constant(1);
  UnivarPoly b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

// lc(b)^(deg a - deg b + 1) * a mod b, with deg a >= deg b >= 0.
CoeffPoly pseudo_remainder(CoeffPoly a, const CoeffPoly& b) {
  const int db = degree(b);
  const UnivarPoly& lead_b = b.back();
  int remaining = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const UnivarPoly lead_a = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c = c * lead_b;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= lead_a * b[static_cast<std::size_t>(k)];
    trim(a);
    --remaining;
  }
  if (remaining > 0) {
    const UnivarPoly scale = power(lead_b, remaining);
    for (auto& c : a) c = c * scale;
  }
  return a;
}

}  // namespace

UnivarPoly subresultant_resultant(CoeffPoly a, CoeffPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return {};

  int sign = 1;
  if (degree(a) < degree(b)) {
    std::swap(a, b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) sign = -1;
  }

  UnivarPoly g = UnivarPoly::constant(1);
  UnivarPoly h = UnivarPoly::constant(1);
  while (degree(b) > 0) {
    const int delta = degree(a) - degree(b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) sign = -sign;
    CoeffPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    const UnivarPoly divisor = g * power(h, delta);
    for (auto& c : r) c = exact_quotient(c, divisor);
    b = std::move(r);
    if (b.empty()) return {};
    g = a.back();
    if (delta > 0) h = exact_quotient(power(g, delta), power(h, delta - 1));
  }

  const int da = degree(a);
  UnivarPoly res = exact_quotient(power(b.back(), da), power(h, da - 1 > 0 ? da - 1 : 0));
  if (da == 0) res = UnivarPoly::constant(1);
  return sign < 0 ? -res : res;
}

UnivarPoly resultant_y(const BivarPoly& p, const BivarPoly& q) {
  if (p.degree_in(Var::Y) < 1 || q.degree_in(Var::Y) < 1) {
    throw Error(Errc::InvalidArgument, "resultant_y needs both inputs of positive degree in y");
  }
  UnivarPoly res = subresultant_resultant(as_poly_in(p, Var::Y), as_poly_in(q, Var::Y));
  if (res.is_zero()) throw Error(Errc::IdenticallyZeroResultant, "inputs share a factor of positive degree in y");
  return res;
}

}  // namespace hesscurve
