#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hesscurve/error.hpp"
#include "hesscurve/ovalbound.hpp"
#include "hesscurve/polyring.hpp"

namespace hesscurve {

struct SearchConfig {
  int degree = 4;
  std::int64_t coeff_min = -100;
  std::int64_t coeff_max = 100;
  /// Skip constant and linear monomials; they never change the hessian.
  bool omit_low_terms = true;
  int oval_threshold = 4;
  bool require_compact = false;
  std::int64_t max_candidates = 1000;
  std::int64_t max_examined = 10000;
  std::int64_t batch_size = 256;
  std::uint64_t seed = 1;
  int workers = 1;

  /// Throws Error(InvalidArgument) on the first violated constraint.
  void validate() const;
};

enum class Rejection { ZeroHessian, NonSquareFree, NonGeneric, Noncompact, BelowThreshold };
inline constexpr std::size_t kRejectionKinds = 5;

std::string_view to_string(Rejection r);

struct ScreenResult {
  std::optional<CurveSummary> summary;  ///< set iff accepted
  Rejection reason = Rejection::BelowThreshold;

  bool accepted() const { return summary.has_value(); }
};

/// Exponents (i, j) drawn for a random polynomial of the configured degree,
/// in graded order.
std::vector<Monomial> random_support(const SearchConfig& cfg);

/// Counter-based and deterministic in (seed, batch, item): the counter is
/// batch * batch_size + item. A vanishing top-degree form is redrawn.
BivarPoly generate_random_poly(const SearchConfig& cfg, std::int64_t batch, std::int64_t item);

/// Hessian, then compactness (when required), then the oval bound. Degenerate
/// curves are rejections, never errors.
ScreenResult screen(const BivarPoly& f, const SearchConfig& cfg);

struct CandidateRecord {
  std::uint64_t seed = 0;
  std::int64_t batch = 0;
  std::int64_t item = 0;
  int degree = 0;
  /// (i, j, c) for each nonzero term c*x^i*y^j of f, graded order.
  std::vector<std::array<std::int64_t, 3>> coeffs;
  CurveSummary summary;

  friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

/// Rebuilds f from a record's coefficients.
BivarPoly record_polynomial(const CandidateRecord& record);

/// One JSON object, no trailing newline.
std::string to_json_line(const CandidateRecord& record);
CandidateRecord parse_json_line(const std::string& line);

/// Receives accepted records, in (batch, item) order, from a single writer.
class CandidateSink {
 public:
  virtual ~CandidateSink() = default;
  /// Throws Error(SinkFailure) when the record cannot be stored.
  virtual void write(const CandidateRecord& record) = 0;
};

class VectorSink : public CandidateSink {
 public:
  void write(const CandidateRecord& record) override { records.push_back(record); }

  std::vector<CandidateRecord> records;
};

/// One JSON object per line.
class JsonLinesSink : public CandidateSink {
 public:
  explicit JsonLinesSink(std::ostream& out) : out_(out) {}
  void write(const CandidateRecord& record) override;

 private:
  std::ostream& out_;
};

struct SearchStats {
  std::int64_t examined = 0;
  std::int64_t accepted = 0;
  std::array<std::int64_t, kRejectionKinds> rejected{};
  double elapsed_seconds = 0.0;
};

std::string to_json_line(const SearchStats& stats, const SearchConfig& cfg);

/// Raised when the sink fails; carries the statistics gathered so far.
class SearchAborted : public Error {
 public:
  SearchAborted(const std::string& message, SearchStats partial)
      : Error(Errc::SinkFailure, message), stats(partial) {}

  SearchStats stats;
};

/// Screens batches until max_candidates are accepted or max_examined
/// polynomials are examined. Items of a batch are screened in parallel on
/// cfg.workers OpenMP threads; the accepted set and the stats counters depend
/// only on cfg.
SearchStats run_search(const SearchConfig& cfg, CandidateSink& sink);

/// Single-threaded reference for run_search, item by item.
SearchStats run_search_serial(const SearchConfig& cfg, CandidateSink& sink);

/// Adds independent uniform offsets in [-radius, radius] to every coefficient
/// of the integer polynomial f, `trials` times, and returns the survivors of
/// screen(). Trial t uses counter t on a stream separate from the search.
std::vector<CandidateRecord> perturb(const BivarPoly& f, int radius, const SearchConfig& cfg, std::int64_t trials);

}  // namespace hesscurve
