#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hesscurve {

enum class Errc {
  InvalidArgument,
  ZeroPolynomial,
  ParseError,
  IdenticallyZeroResultant,
  WrongDegree,
  EndpointIsRoot,
  NonSquareFree,
  ShearBudgetExceeded,
  WitnessInvalid,
  RestrictionZero,
  PointOnLine,
  MalformedCertificate,
  FixtureCorrupt,
  SinkFailure,
  IoError,
  Internal,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status and a machine-readable stderr line.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hesscurve
