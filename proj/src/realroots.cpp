#include "hesscurve/realroots.hpp"

#include <algorithm>

#include "hesscurve/error.hpp"

namespace hesscurve {

int sign_at(const UnivarPoly& u, const Rational& t) {
  if (u.is_zero()) return 0;
  const auto cs = u.coeffs();
  const bool integral = std::all_of(cs.begin(), cs.end(), [](const Rational& c) { return c.get_den() == 1; });
  if (!integral) return sgn(u(t));

  // den^n * u(num/den) = sum c_k num^k den^(n-k); den > 0 keeps the sign
  const Integer& num = t.get_num();
  const Integer& den = t.get_den();
  Integer acc = cs.back().get_num();
  Integer den_pow = 1;
  for (int k = u.degree() - 1; k >= 0; --k) {
    den_pow *= den;
    acc *= num;
    acc += cs[static_cast<std::size_t>(k)].get_num() * den_pow;
  }
  return sgn(acc);
}

SturmSequence::SturmSequence(const UnivarPoly& u) {
  chain_.push_back(gcd_and_square_free(u).square_free_part);
  if (chain_.front().degree() < 1) return;
  chain_.push_back(primitive_scaled(chain_.front().derivative()));
  while (chain_.back().degree() > 0) {
    const std::size_t n = chain_.size();
    UnivarPoly r = primitive_remainder(chain_[n - 2], chain_[n - 1]);
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int variations = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int SturmSequence::variations_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at(p, t));
  return count_variations(signs);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()) * (p.degree() % 2 == 0 ? 1 : -1));
  return count_variations(signs);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()));
  return count_variations(signs);
}

std::size_t SturmSequence::count() const {
  return static_cast<std::size_t>(variations_at_neg_inf() - variations_at_pos_inf());
}

std::size_t SturmSequence::count(const Rational& lo, const Rational& hi) const {
  return static_cast<std::size_t>(variations_at(lo) - variations_at(hi));
}

std::size_t sturm_count(const UnivarPoly& u) { return SturmSequence(u).count(); }

std::size_t sturm_count(const UnivarPoly& u, const Rational& lo, const Rational& hi) {
  if (u.is_zero()) throw Error(Errc::ZeroPolynomial, "sturm_count of the zero polynomial");
  if (!(lo < hi)) throw Error(Errc::InvalidArgument, "sturm_count needs lo < hi");
  if (sgn(u(lo)) == 0) throw Error(Errc::EndpointIsRoot, "lower endpoint " + to_string(lo) + " is a root");
  if (sgn(u(hi)) == 0) throw Error(Errc::EndpointIsRoot, "upper endpoint " + to_string(hi) + " is a root");
  return SturmSequence(u).count(lo, hi);
}

Rational cauchy_bound(const UnivarPoly& u) {
  if (u.is_zero()) throw Error(Errc::ZeroPolynomial, "root bound of the zero polynomial");
  Rational m(0);
  const Rational lead = abs(u.leading());
  for (int k = 0; k < u.degree(); ++k) m = std::max(m, Rational(abs(u.coeff(k)) / lead));
  return 1 + m;
}

std::vector<RootInterval> isolate_roots(const UnivarPoly& u, const Rational& tolerance) {
  const SturmSequence sturm(u);
  const UnivarPoly& sf = sturm.square_free();
  std::vector<RootInterval> out;
  if (sf.degree() < 1) return out;

  // a power of two above the Cauchy bound keeps bisection points dyadic
  Rational bound(1);
  for (const Rational cb = cauchy_bound(sf); bound <= cb;) bound *= 2;
  struct Pending {
    Rational lo, hi;
    std::size_t roots;
  };
  std::vector<Pending> stack{{-bound, bound, sturm.count()}};

  // split point strictly inside (lo, hi) that is not a root
  auto split_point = [&](const Rational& lo, const Rational& hi) {
    for (int den = 2;; ++den) {
      for (int k = 1; k < den; ++k) {
        Rational m = lo + (hi - lo) * ratio(Integer(k), Integer(den));
        m.canonicalize();
        if (sign_at(sf, m) != 0) return m;
      }
    }
  };

  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.roots == 0) continue;
    if (cur.roots == 1) {
      // isolated: refine by the sign change of sf alone
      const int lo_sign = sign_at(sf, cur.lo);
      while (cur.hi - cur.lo > tolerance) {
        const Rational mid = split_point(cur.lo, cur.hi);
        const int s = sign_at(sf, mid);
        if (s == lo_sign) cur.lo = mid;
        else cur.hi = mid;
      }
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    const Rational mid = split_point(cur.lo, cur.hi);
    const std::size_t left = sturm.count(cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.roots - left});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

ReducedQuartic reduce_quartic(const UnivarPoly& q) {
  if (q.degree() != 4) throw Error(Errc::WrongDegree, "reduce_quartic needs a quartic, got degree " + std::to_string(q.degree()));
  const Rational lead = q.leading();
  const Rational alpha = q.coeff(3) / lead / 4;
  const Rational beta = q.coeff(2) / lead;
  const Rational gamma = q.coeff(1) / lead;
  const Rational delta = q.coeff(0) / lead;
  const Rational alpha2 = alpha * alpha;
  return {beta - 6 * alpha2,
          gamma - 2 * alpha * beta + 8 * alpha2 * alpha,
          delta - alpha * gamma + alpha2 * beta - 3 * alpha2 * alpha2};
}

QuarticInvariants quartic_invariants(const ReducedQuartic& r) {
  const Rational& a = r.a;
  const Rational& b = r.b;
  const Rational& c = r.c;
  const Rational a2 = a * a, b2 = b * b, c2 = c * c;
  const Rational delta = -4 * a2 * a * b2 - 27 * b2 * b2 + 16 * a2 * a2 * c - 128 * a2 * c2 +
                         144 * a * b2 * c + 256 * c2 * c;
  const Rational L = 2 * a * (a2 - 4 * c) + 9 * b2;
  return {delta, L, a};
}

bool quartic_has_no_real_roots(const UnivarPoly& q) {
  const QuarticInvariants inv = quartic_invariants(reduce_quartic(q));
  return sgn(inv.delta) > 0 && (sgn(inv.a) >= 0 || sgn(inv.L) >= 0);
}

}  // namespace hesscurve
