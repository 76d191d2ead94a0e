#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hesscurve/polyring.hpp"

namespace hesscurve {

enum class Sign { Negative = -1, Positive = 1 };

char to_char(Sign s);

struct SamplePoint {
  Rational x;
  Rational y;
  Sign expected;
};

/// Lines on which the curve polynomial is claimed to have constant sign
/// `line_sign`, and sample points of the opposite sign, one per region of the
/// line arrangement. Verified, it proves at least samples.size() components,
/// and compactness when the line at infinity is included.
struct Certificate {
  BivarPoly curve;
  std::vector<Line> lines;
  std::vector<SamplePoint> samples;
  Sign line_sign = Sign::Positive;
  int claimed_min_ovals = 0;
};

/// Sign of a*x0 + b*y0 + c for each affine line, in order; the line at
/// infinity contributes nothing.
using RegionSignature = std::vector<Sign>;

/// True iff the restriction of h to the line has no real zero and has sign
/// `sign`. On the line at infinity the top form must have even degree d with a
/// nonzero x^d coefficient. Throws Error(RestrictionZero) when h vanishes on
/// the line.
bool verify_line_definite(const BivarPoly& h, const Line& line, Sign sign);

/// Throws Error(PointOnLine) if the point lies on one of the lines.
RegionSignature region_signature(const Rational& x, const Rational& y, const std::vector<Line>& lines);

struct SampleCheck {
  Rational value;  ///< exact curve value at the sample
  bool sign_ok = false;
  RegionSignature signature;
};

struct CertificateReport {
  bool verified = false;
  int proven_min_ovals = 0;
  bool compact = false;
  /// The Harnack compact bound for the curve's degree equals the proven count,
  /// so the count is exact.
  bool exact = false;
  std::vector<bool> lines_definite;
  std::vector<SampleCheck> samples;
  bool signatures_distinct = false;
  std::string failure;  ///< first failed condition, empty when verified
};

/// Throws Error(MalformedCertificate) when claimed_min_ovals exceeds the
/// number of samples or the curve is zero.
CertificateReport verify_certificate(const Certificate& cert);

/// Flat key=value text: `curve=`, repeated `line=a,b,c` or `line=infinity`,
/// repeated `sample=x,y,sign`, `line_sign=`, `claimed=`. Lines starting with
/// '#' are comments. Throws Error(MalformedCertificate) or Error(ParseError).
Certificate parse_certificate(std::istream& in);
Certificate load_certificate(const std::filesystem::path& path);
std::string format_certificate(const Certificate& cert);

/// One-line summary, e.g. "verified=true proven_min_ovals=4 compact=true exact=true".
std::string to_string(const CertificateReport& report);

}  // namespace hesscurve
