#include <doctest.h>

#include <random>

#include "hesscurve/error.hpp"
#include "hesscurve/parse.hpp"
#include "hesscurve/polyring.hpp"

using namespace hesscurve;

namespace {

// Sylvester determinant of p(x0, y) and q(x0, y) in y, by rational elimination.
Rational sylvester_at(const BivarPoly& p, const BivarPoly& q, const Rational& x0) {
  auto column = [&](const BivarPoly& f) {
    std::vector<Rational> cs;
    for (const auto& row : as_poly_in(f, Var::Y)) cs.push_back(row(x0));
    return cs;
  };
  const auto a = column(p), b = column(q);
  const int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  const int size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
  }
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && sgn(s[pivot][col]) == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (int r = col + 1; r < size; ++r) {
      const Rational f = s[r][col] / s[col][col];
      for (int c = col; c < size; ++c) s[r][c] -= f * s[col][c];
    }
  }
  return det;
}

BivarPoly random_poly(std::mt19937& gen, int degree) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  BivarPoly::TermMap terms;
  for (int d = 0; d <= degree; ++d) {
    for (int i = 0; i <= d; ++i) {
      const int c = coeff(gen);
      if (c != 0) terms[{i, d - i}] = Rational(c);
    }
  }
  terms[{0, degree}] = Rational(coeff(gen) >= 0 ? 1 : -2);  // keep the y-degree
  return BivarPoly(std::move(terms));
}

}  // namespace

TEST_CASE("small resultants") {
  // res_y(y - x, y + x) = 2x
  CHECK(resultant_y(parse_poly("y - x"), parse_poly("y + x")) == UnivarPoly({Rational(0), Rational(2)}));
  // res_y(y^2 - x, y) = -x up to the Sylvester convention: det [[1,0,-x],[1,0,0],[0,1,0]] = -x
  const UnivarPoly r = resultant_y(parse_poly("y^2 - x"), parse_poly("y"));
  CHECK(r(Rational(3)) == sylvester_at(parse_poly("y^2 - x"), parse_poly("y"), Rational(3)));
  // circle discriminant: vertical tangents at x = +-1
  const BivarPoly c = parse_poly("x^2 + y^2 - 1");
  const UnivarPoly disc = resultant_y(c, differentiate(c, Var::Y));
  CHECK(disc.degree() == 2);
  CHECK(sgn(disc(Rational(1))) == 0);
  CHECK(sgn(disc(Rational(-1))) == 0);
}

TEST_CASE("resultant_y agrees with the Sylvester determinant") {
  std::mt19937 gen(12345);
  for (int trial = 0; trial < 40; ++trial) {
    const BivarPoly p = random_poly(gen, 2 + trial % 3);
    const BivarPoly q = random_poly(gen, 1 + trial % 4);
    const UnivarPoly r = resultant_y(p, q);
    for (int k = -3; k <= 3; ++k) {
      const Rational x0 = ratio(k, 2);
      CAPTURE(trial);
      CHECK(r(x0) == sylvester_at(p, q, x0));
    }
  }
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(resultant_y(parse_poly("x"), parse_poly("y")), Error);
  try {
    resultant_y(parse_poly("y - x") * parse_poly("y + 1"), parse_poly("y - x"));
    FAIL("expected a zero resultant");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IdenticallyZeroResultant);
  }
}
