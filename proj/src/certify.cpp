#include "hesscurve/certify.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hesscurve/error.hpp"
#include "hesscurve/ovalbound.hpp"
#include "hesscurve/parse.hpp"
#include "hesscurve/realroots.hpp"

namespace hesscurve {

char to_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

namespace {

int value_of(Sign s) { return static_cast<int>(s); }

Sign parse_sign(const std::string& text) {
  if (text == "+" || text == "positive") return Sign::Positive;
  if (text == "-" || text == "negative") return Sign::Negative;
  throw Error(Errc::MalformedCertificate, "bad sign '" + text + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

bool verify_line_definite(const BivarPoly& h, const Line& line, Sign sign) {
  if (h.is_zero()) throw Error(Errc::ZeroPolynomial, "certificate curve is zero");
  const UnivarPoly restricted = restrict_to_line_unscaled(h, line);

  if (line.is_at_infinity()) {
    const int d = h.degree();
    if (restricted.is_zero()) throw Error(Errc::RestrictionZero, "curve contains the line at infinity");
    const Rational anchor = degree_form(h).pure_x_coeff;
    // the x^d coefficient is p_top(1, 0); zero means a root at (1:0:0)
    if (d % 2 != 0 || sgn(anchor) == 0 || restricted.degree() != d) return false;
    if (sturm_count(restricted) != 0) return false;
    if (d == 4) {
      const UnivarPoly q = normalized(restricted);
      const QuarticInvariants inv = quartic_invariants(reduce_quartic(q));
      if (sgn(inv.delta) != 0 && !quartic_has_no_real_roots(q)) {
        throw Error(Errc::Internal, "quartic criterion disagrees with Sturm count on the line at infinity");
      }
    }
    return sgn(anchor) == value_of(sign);
  }

  if (restricted.is_zero()) throw Error(Errc::RestrictionZero, "curve vanishes on line " + to_string(line));
  if (restricted.degree() > 0 && sturm_count(restricted) != 0) return false;
  if (restricted.degree() == 4) {
    const UnivarPoly q = normalized(restricted);
    const QuarticInvariants inv = quartic_invariants(reduce_quartic(q));
    if (sgn(inv.delta) != 0 && !quartic_has_no_real_roots(q)) {
      throw Error(Errc::Internal, "quartic criterion disagrees with Sturm count on line " + to_string(line));
    }
  }
  // no real zero: one point of the line decides the sign; use the bivariate path
  const auto [x0, y0] = line.point_at(0);
  return sgn(evaluate(h, x0, y0)) == value_of(sign);
}

RegionSignature region_signature(const Rational& x, const Rational& y, const std::vector<Line>& lines) {
  RegionSignature sig;
  for (const auto& line : lines) {
    if (line.is_at_infinity()) continue;
    const int s = sgn(line.form(x, y));
    if (s == 0) {
      throw Error(Errc::PointOnLine, "(" + to_string(x) + ", " + to_string(y) + ") lies on line " + to_string(line));
    }
    sig.push_back(s > 0 ? Sign::Positive : Sign::Negative);
  }
  return sig;
}

CertificateReport verify_certificate(const Certificate& cert) {
  if (cert.curve.is_zero()) throw Error(Errc::MalformedCertificate, "curve is zero");
  if (cert.claimed_min_ovals < 0 || cert.claimed_min_ovals > static_cast<int>(cert.samples.size())) {
    throw Error(Errc::MalformedCertificate, "claimed count exceeds the number of samples");
  }

  CertificateReport report;
  auto fail = [&](const std::string& why) {
    if (report.failure.empty()) report.failure = why;
  };

  for (const auto& line : cert.lines) {
    const bool ok = verify_line_definite(cert.curve, line, cert.line_sign);
    report.lines_definite.push_back(ok);
    if (!ok) fail("curve is not " + std::string(1, to_char(cert.line_sign)) + " on line " + to_string(line));
  }

  std::set<RegionSignature> seen;
  bool distinct = true;
  for (const auto& sample : cert.samples) {
    SampleCheck check;
    check.value = evaluate(cert.curve, sample.x, sample.y);
    check.sign_ok = sample.expected != cert.line_sign && sgn(check.value) == value_of(sample.expected);
    check.signature = region_signature(sample.x, sample.y, cert.lines);
    if (!check.sign_ok) fail("sample (" + to_string(sample.x) + ", " + to_string(sample.y) + ") has the wrong sign");
    if (!seen.insert(check.signature).second) distinct = false;
    report.samples.push_back(std::move(check));
  }
  report.signatures_distinct = distinct;
  if (!distinct) fail("two samples share a region signature");

  report.verified = report.failure.empty();
  if (report.verified) {
    report.proven_min_ovals = static_cast<int>(cert.samples.size());
    for (const auto& line : cert.lines) report.compact = report.compact || line.is_at_infinity();
    const int d = cert.curve.degree();
    report.exact = report.compact && d >= 1 && harnack_bounds(d).compact_ovals == report.proven_min_ovals;
  }
  return report;
}

Certificate parse_certificate(std::istream& in) {
  Certificate cert;
  bool have_curve = false, have_sign = false, have_claim = false;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(Errc::MalformedCertificate, "expected key=value: '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "curve") {
      cert.curve = parse_poly(value);
      have_curve = true;
    } else if (key == "line") {
      if (value == "infinity") {
        cert.lines.push_back(Line::at_infinity());
      } else {
        const auto parts = split(value, ',');
        if (parts.size() != 3) throw Error(Errc::MalformedCertificate, "line needs a,b,c: '" + value + "'");
        try {
          cert.lines.push_back(Line::affine(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])));
        } catch (const Error& e) {
          throw Error(Errc::MalformedCertificate, e.what());
        }
      }
    } else if (key == "sample") {
      const auto parts = split(value, ',');
      if (parts.size() != 3) throw Error(Errc::MalformedCertificate, "sample needs x,y,sign: '" + value + "'");
      cert.samples.push_back({parse_rational(parts[0]), parse_rational(parts[1]), parse_sign(trim(parts[2]))});
    } else if (key == "line_sign") {
      cert.line_sign = parse_sign(value);
      have_sign = true;
    } else if (key == "claimed") {
      try {
        cert.claimed_min_ovals = std::stoi(value);
      } catch (const std::exception&) {
        throw Error(Errc::MalformedCertificate, "bad claimed count '" + value + "'");
      }
      have_claim = true;
    } else {
      throw Error(Errc::MalformedCertificate, "unknown key '" + key + "'");
    }
  }
  if (!have_curve || !have_sign || !have_claim) {
    throw Error(Errc::MalformedCertificate, "certificate needs curve=, line_sign= and claimed=");
  }
  return cert;
}

Certificate load_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open certificate " + path.string());
  return parse_certificate(in);
}

std::string format_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "curve=" << to_string(cert.curve) << '\n';
  for (const auto& line : cert.lines) out << "line=" << to_string(line) << '\n';
  for (const auto& s : cert.samples) {
    out << "sample=" << to_string(s.x) << ',' << to_string(s.y) << ',' << to_char(s.expected) << '\n';
  }
  out << "line_sign=" << to_char(cert.line_sign) << '\n';
  out << "claimed=" << cert.claimed_min_ovals << '\n';
  return out.str();
}

std::string to_string(const CertificateReport& report) {
  std::ostringstream out;
  out << std::boolalpha << "verified=" << report.verified << " proven_min_ovals=" << report.proven_min_ovals
      << " compact=" << report.compact << " exact=" << report.exact;
  return out.str();
}

}  // namespace hesscurve
