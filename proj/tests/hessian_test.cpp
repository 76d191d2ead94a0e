#include <doctest.h>

#include <cmath>
#include <random>

#include "hesscurve/error.hpp"
#include "hesscurve/fixtures.hpp"
#include "hesscurve/hessian.hpp"
#include "hesscurve/parse.hpp"

using namespace hesscurve;

namespace {

double eval_d(const BivarPoly& p, double x, double y) {
  double v = 0;
  for (const auto& [m, c] : p.terms()) v += c.get_d() * std::pow(x, m.x) * std::pow(y, m.y);
  return v;
}

// central second differences
double numeric_hessian(const BivarPoly& f, double x, double y) {
  const double e = 1e-3;
  auto F = [&](double a, double b) { return eval_d(f, a, b); };
  const double fxx = (F(x + e, y) - 2 * F(x, y) + F(x - e, y)) / (e * e);
  const double fyy = (F(x, y + e) - 2 * F(x, y) + F(x, y - e)) / (e * e);
  const double fxy = (F(x + e, y + e) - F(x + e, y - e) - F(x - e, y + e) + F(x - e, y - e)) / (4 * e * e);
  return fxx * fyy - fxy * fxy;
}

}  // namespace

TEST_CASE("small hessians") {
  CHECK(hessian_of(parse_poly("xy")) == BivarPoly::constant(-1));
  CHECK(hessian_of(parse_poly("x^2 + y^2")) == BivarPoly::constant(4));
  CHECK(hessian_of(parse_poly("3x - y + 7")).is_zero());
  CHECK(hessian_of(BivarPoly()).is_zero());
  CHECK(hessian_of(parse_poly("x^3 + y^3")) == parse_poly("36xy"));
}

TEST_CASE("theorem 1 quartic") {
  const auto f = find_example(load_examples(), "thm1_quartic").f;
  const BivarPoly h = parse_poly(
      "25-134x-374y+91x^2+948xy+1137y^2+429x^3+612x^2y-2313xy^2-876y^3+63x^4+54x^3y-99x^2y^2-234xy^3+675y^4");
  CHECK(hessian_of(f) == Rational(-4) * h);
  CHECK(three_squares_check(f));
}

TEST_CASE("hessian matches finite differences") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_real_distribution<double> point(-1.5, 1.5);
  for (int trial = 0; trial < 50; ++trial) {
    BivarPoly::TermMap terms;
    for (int d = 0; d <= 4; ++d) {
      for (int i = 0; i <= d; ++i) terms[{i, d - i}] = Rational(coeff(gen));
    }
    const BivarPoly f(std::move(terms));
    const BivarPoly h = hessian_of(f);
    for (int k = 0; k < 5; ++k) {
      const double x = point(gen), y = point(gen);
      const double exact = eval_d(h, x, y);
      CHECK(numeric_hessian(f, x, y) == doctest::Approx(exact).epsilon(1e-4).scale(100));
    }
  }
}

TEST_CASE("affine terms do not change the hessian") {
  const BivarPoly f = parse_poly("x^4 - 3x^2y + y^3");
  CHECK(hessian_of(f + parse_poly("5x - 2y + 11")) == hessian_of(f));
}

TEST_CASE("witness reconstruction") {
  SUBCASE("constant witness") {
    const auto rec = hessian_from_pqr(PqrWitness(BivarPoly::constant(2), BivarPoly(), BivarPoly::constant(2)));
    CHECK(rec.f == parse_poly("x^2 + y^2"));
    CHECK(rec.h == BivarPoly::constant(4));
  }
  SUBCASE("second derivatives of x^2 y") {
    const auto rec = hessian_from_pqr(PqrWitness(parse_poly("2y"), parse_poly("2x"), BivarPoly()));
    CHECK(rec.f == parse_poly("x^2y"));
    CHECK(rec.h == parse_poly("-4x^2"));
  }
  SUBCASE("with a constant r") {
    const auto rec = hessian_from_pqr(PqrWitness(parse_poly("2y"), parse_poly("2x"), BivarPoly::constant(6)));
    CHECK(rec.f == parse_poly("x^2y + 3y^2"));
    CHECK(rec.h == parse_poly("12y - 4x^2"));
    CHECK(hessian_of(rec.f) == rec.h);
  }
  SUBCASE("reconstruction recovers f up to affine terms") {
    const BivarPoly f = parse_poly("x^3y^2 - 2xy^3 + 5x^2 + 4x - 1");
    const auto rec = hessian_from_pqr(PqrWitness(differentiate(differentiate(f, Var::X), Var::X),
                                                 differentiate(differentiate(f, Var::X), Var::Y),
                                                 differentiate(differentiate(f, Var::Y), Var::Y)));
    CHECK(rec.f == parse_poly("x^3y^2 - 2xy^3 + 5x^2"));
    CHECK(rec.h == hessian_of(f));
  }
  SUBCASE("incompatible witnesses") {
    auto code_of = [](auto&& make) {
      try {
        make();
      } catch (const Error& e) {
        return e.code();
      }
      return Errc::Internal;
    };
    CHECK(code_of([] { PqrWitness(parse_poly("2y"), BivarPoly(), BivarPoly()); }) == Errc::WitnessInvalid);
    CHECK(code_of([] { PqrWitness(BivarPoly(), parse_poly("y"), BivarPoly()); }) == Errc::WitnessInvalid);
  }
}
