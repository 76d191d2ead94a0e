#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "hesscurve/certify.hpp"
#include "hesscurve/error.hpp"
#include "hesscurve/fixtures.hpp"
#include "hesscurve/parse.hpp"

using namespace hesscurve;

namespace {

Certificate circle_certificate() {
  Certificate c;
  c.curve = parse_poly("x^2 + y^2 - 1");
  c.lines = {Line::affine(1, 0, -2), Line::at_infinity()};
  c.samples = {{Rational(0), Rational(0), Sign::Negative}};
  c.line_sign = Sign::Positive;
  c.claimed_min_ovals = 1;
  return c;
}

Errc code_of(const std::function<void()>& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST_CASE("unit circle") {
  const CertificateReport r = verify_certificate(circle_certificate());
  CHECK(r.verified);
  CHECK(r.proven_min_ovals == 1);
  CHECK(r.compact);
  CHECK(r.exact);  // Harnack bound of a conic is 1
  CHECK(r.samples.at(0).value == -1);
}

TEST_CASE("theorem 1 certificate") {
  const Certificate cert = load_thm1_certificate();
  const CertificateReport r = verify_certificate(cert);
  CHECK(r.verified);
  CHECK(r.proven_min_ovals == 4);
  CHECK(r.compact);
  CHECK(r.exact);
  CHECK(r.signatures_distinct);
  CHECK(to_string(r) == "verified=true proven_min_ovals=4 compact=true exact=true");
  const Rational expected[] = {Rational(-1767), Rational(-1281, 125), Rational(-2127), Rational(-1707)};
  for (std::size_t i = 0; i < 4; ++i) CHECK(r.samples.at(i).value == expected[i]);
}

TEST_CASE("sample values agree with evaluation along a line") {
  const Certificate cert = load_thm1_certificate();
  for (const auto& s : cert.samples) {
    // the horizontal line through the sample, parametrized by x
    const UnivarPoly along = restrict_to_line_unscaled(cert.curve, Line::affine(0, 1, -s.y));
    CHECK(along(s.x) == evaluate(cert.curve, s.x, s.y));
  }
  // positivity on each affine line, checked pointwise
  for (const auto& line : cert.lines) {
    if (line.is_at_infinity()) continue;
    for (int k = -40; k <= 40; ++k) {
      const auto [x, y] = line.point_at(ratio(k, 4));
      CHECK(sgn(evaluate(cert.curve, x, y)) > 0);
    }
  }
}

TEST_CASE("order of samples and lines does not matter") {
  Certificate cert = load_thm1_certificate();
  std::reverse(cert.samples.begin(), cert.samples.end());
  std::rotate(cert.lines.begin(), cert.lines.begin() + 1, cert.lines.end());
  CHECK(verify_certificate(cert).verified);
  std::swap(cert.samples[0], cert.samples[2]);
  CHECK(verify_certificate(cert).proven_min_ovals == 4);
}

TEST_CASE("removing a sample lowers the count by one") {
  Certificate cert = load_thm1_certificate();
  cert.samples.pop_back();
  cert.claimed_min_ovals = 3;
  const CertificateReport r = verify_certificate(cert);
  CHECK(r.verified);
  CHECK(r.proven_min_ovals == 3);
  CHECK(!r.exact);
}

TEST_CASE("failures") {
  SUBCASE("sample with the wrong sign") {
    Certificate cert = circle_certificate();
    cert.samples[0] = {Rational(3), Rational(0), Sign::Negative};
    const CertificateReport r = verify_certificate(cert);
    CHECK(!r.verified);
    CHECK(!r.samples[0].sign_ok);
    CHECK(!r.failure.empty());
  }
  SUBCASE("two samples in one region") {
    Certificate cert = circle_certificate();
    cert.samples.push_back({Rational(1, 2), Rational(0), Sign::Negative});
    cert.claimed_min_ovals = 2;
    const CertificateReport r = verify_certificate(cert);
    CHECK(!r.verified);
    CHECK(!r.signatures_distinct);
  }
  SUBCASE("line crossing the curve") {
    Certificate cert = circle_certificate();
    cert.lines.push_back(Line::affine(0, 2, -1));
    const CertificateReport r = verify_certificate(cert);
    CHECK(!r.verified);
    CHECK(!r.lines_definite.back());
  }
  SUBCASE("no line at infinity means no compactness claim") {
    Certificate cert = circle_certificate();
    cert.lines.pop_back();
    const CertificateReport r = verify_certificate(cert);
    CHECK(r.verified);
    CHECK(!r.compact);
    CHECK(!r.exact);
  }
  SUBCASE("odd degree at infinity") {
    CHECK(!verify_line_definite(parse_poly("x^3 + y^3 + 1"), Line::at_infinity(), Sign::Positive));
  }
  SUBCASE("curve vanishing on a line") {
    CHECK(code_of([] { verify_line_definite(parse_poly("xy + y"), Line::affine(0, 1, 0), Sign::Positive); }) ==
          Errc::RestrictionZero);
  }
  SUBCASE("sample on a line") {
    CHECK(code_of([] { region_signature(Rational(2), Rational(5), {Line::affine(1, 0, -2)}); }) == Errc::PointOnLine);
  }
  SUBCASE("claim above the samples") {
    Certificate cert = circle_certificate();
    cert.claimed_min_ovals = 2;
    CHECK(code_of([&] { verify_certificate(cert); }) == Errc::MalformedCertificate);
  }
}

TEST_CASE("certificate text") {
  const Certificate cert = load_thm1_certificate();
  std::istringstream in(format_certificate(cert));
  const Certificate back = parse_certificate(in);
  CHECK(back.curve == cert.curve);
  CHECK(back.lines == cert.lines);
  CHECK(back.samples.size() == cert.samples.size());
  CHECK(back.claimed_min_ovals == 4);

  for (const char* bad : {"curve=x^2\nline_sign=+\n", "curve=x^2\nline=1,2\nline_sign=+\nclaimed=0\n",
                          "curve=x^2\nsample=1,2,?\nline_sign=+\nclaimed=0\n", "bogus\n",
                          "curve=x^2\nline_sign=+\nclaimed=zero\n", "curve=x^2\ncolour=red\nline_sign=+\nclaimed=0\n"}) {
    CAPTURE(bad);
    std::istringstream text(bad);
    CHECK(code_of([&] { parse_certificate(text); }) == Errc::MalformedCertificate);
  }
}
