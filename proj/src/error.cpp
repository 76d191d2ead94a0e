#include "hesscurve/error.hpp"

namespace hesscurve {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ParseError: return "ParseError";
    case Errc::IdenticallyZeroResultant: return "IdenticallyZeroResultant";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::EndpointIsRoot: return "EndpointIsRoot";
    case Errc::NonSquareFree: return "NonSquareFree";
    case Errc::ShearBudgetExceeded: return "ShearBudgetExceeded";
    case Errc::WitnessInvalid: return "WitnessInvalid";
    case Errc::RestrictionZero: return "RestrictionZero";
    case Errc::PointOnLine: return "PointOnLine";
    case Errc::MalformedCertificate: return "MalformedCertificate";
    case Errc::FixtureCorrupt: return "FixtureCorrupt";
    case Errc::SinkFailure: return "SinkFailure";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hesscurve
