#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hesscurve/error.hpp"
#include "hesscurve/realroots.hpp"

using namespace hesscurve;

namespace {

UnivarPoly up(std::initializer_list<long> low_first) {
  std::vector<Rational> cs;
  for (long c : low_first) cs.emplace_back(c);
  return UnivarPoly(cs);
}

UnivarPoly linear_root(const Rational& r) { return UnivarPoly({-r, Rational(1)}); }

// prod (t - r_i)^{m_i} * prod (t^2 + c_j), c_j > 0: the real roots are known
struct Built {
  UnivarPoly poly;
  std::vector<Rational> roots;  // distinct, sorted
};

Built build(std::mt19937& gen) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7), count(0, 4), mult(1, 3), quad(1, 30);
  std::set<Rational> roots;
  UnivarPoly p = up({1});
  const int n = count(gen);
  for (int i = 0; i < n; ++i) {
    const Rational r = ratio(num(gen), den(gen));
    roots.insert(r);
    const int m = mult(gen);
    for (int k = 0; k < m; ++k) p = p * linear_root(r);
  }
  const int q = count(gen) / 2;
  for (int j = 0; j < q; ++j) p = p * UnivarPoly({ratio(quad(gen), den(gen)), Rational(0), Rational(1)});
  if (p.degree() < 1) p = p * up({1, 0, 1});
  return {p * ratio(den(gen), 3), {roots.begin(), roots.end()}};
}

}  // namespace

TEST_CASE("sign evaluation") {
  const UnivarPoly u = up({-2, 0, 1});  // t^2 - 2
  CHECK(sign_at(u, Rational(3, 2)) == 1);
  CHECK(sign_at(u, Rational(7, 5)) == -1);
  CHECK(sign_at(up({-1, 0, 4}), Rational(1, 2)) == 0);
  CHECK(sign_at(UnivarPoly({Rational(1, 3), Rational(-1, 2)}), Rational(2, 3)) == 0);
}

TEST_CASE("sturm counts on known factorizations") {
  CHECK(sturm_count(up({-2, 0, 1})) == 2);
  CHECK(sturm_count(up({2, 0, 1})) == 0);
  CHECK(sturm_count(up({-1, 1}) * up({-1, 1}) * up({-1, 1})) == 1);  // (t-1)^3
  CHECK(sturm_count(up({5})) == 0);
  CHECK(sturm_count(up({-2, 0, 1}), Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(up({-2, 0, 1}), Rational(-2), Rational(2)) == 2);
  CHECK(SturmSequence(up({-6, 11, -6, 1})).count(Rational(3, 2), Rational(5, 2)) == 1);  // roots 1, 2, 3
}

TEST_CASE("sturm_count preconditions") {
  auto code_of = [](auto&& call) {
    try {
      call();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };
  CHECK(code_of([] { sturm_count(up({-1, 0, 1}), Rational(1), Rational(2)); }) == Errc::EndpointIsRoot);
  CHECK(code_of([] { sturm_count(up({-1, 0, 1}), Rational(2), Rational(0)); }) == Errc::InvalidArgument);
  CHECK(code_of([] { sturm_count(UnivarPoly(), Rational(0), Rational(1)); }) == Errc::ZeroPolynomial);
}

TEST_CASE("random polynomials with known real roots") {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Built b = build(gen);
    CAPTURE(to_string(b.poly));
    CHECK(sturm_count(b.poly) == b.roots.size());
    const Rational tol(1, 1 << 12);
    const auto intervals = isolate_roots(b.poly, tol);
    REQUIRE(intervals.size() == b.roots.size());
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      const auto& iv = intervals[i];
      CHECK(iv.hi - iv.lo <= tol);
      CHECK(iv.lo <= b.roots[i]);
      CHECK(b.roots[i] <= iv.hi);
      if (i > 0) CHECK(intervals[i - 1].hi <= iv.lo);
    }
    CHECK(cauchy_bound(b.poly) > std::max(abs(b.roots.empty() ? Rational(0) : b.roots.front()),
                                          abs(b.roots.empty() ? Rational(0) : b.roots.back())));
  }
}

TEST_CASE("close roots separate") {
  const Rational r1(1, 1000000), r2(2, 1000000);
  const UnivarPoly p = linear_root(r1) * linear_root(r2) * up({1, 0, 1});
  const auto iv = isolate_roots(p, Rational(1, 1 << 30));
  REQUIRE(iv.size() == 2);
  CHECK(iv[0].hi <= iv[1].lo);
  CHECK(iv[0].lo <= r1);
  CHECK(r2 <= iv[1].hi);
}

TEST_CASE("reduced quartic and invariants") {
  // q_inf of the four-oval example, values from the published table
  const UnivarPoly q = up({75, -26, -11, 6, 7});
  const QuarticInvariants inv = quartic_invariants(reduce_quartic(q));
  CHECK(inv.delta == Rational(5025022208, 16807));
  CHECK(inv.L == Rational(564896, 2401));
  CHECK(inv.a == Rational(-181, 98));
  CHECK(quartic_has_no_real_roots(q));

  // t^4 + a t^2 + b t + c is its own reduction
  const ReducedQuartic r = reduce_quartic(up({3, -2, 5, 0, 1}));
  CHECK(r.a == 5);
  CHECK(r.b == -2);
  CHECK(r.c == 3);

  CHECK_THROWS_AS(reduce_quartic(up({1, 0, 1})), Error);
}

TEST_CASE("quartic criterion against root counting") {
  CHECK(quartic_has_no_real_roots(up({4, 0, 5, 0, 1})));    // (t^2+1)(t^2+4)
  CHECK(!quartic_has_no_real_roots(up({4, 0, -5, 0, 1})));  // (t^2-1)(t^2-4)
  CHECK(!quartic_has_no_real_roots(up({-4, 0, -3, 0, 1})));  // (t^2+1)(t^2-4)
  // double complex pair: delta = 0, criterion reports false although there are no real roots
  CHECK(!quartic_has_no_real_roots(up({1, 0, 2, 0, 1})));
  // repeated real root: (t-1)^2 (t^2+1), delta = 0
  CHECK(sgn(quartic_invariants(reduce_quartic(up({1, -2, 2, -2, 1}))).delta) == 0);
  CHECK(!quartic_has_no_real_roots(up({1, -2, 2, -2, 1})));

  std::mt19937 gen(99);
  std::uniform_int_distribution<int> coeff(-30, 30);
  int checked = 0;
  while (checked < 3000) {
    std::vector<Rational> cs(5);
    for (auto& c : cs) c = coeff(gen);
    if (sgn(cs[4]) == 0) continue;
    const UnivarPoly q(cs);
    if (sgn(quartic_invariants(reduce_quartic(q)).delta) == 0) continue;
    ++checked;
    CAPTURE(to_string(q));
    CHECK(quartic_has_no_real_roots(q) == (sturm_count(q) == 0));
  }
}
