#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hesscurve/fixtures.hpp"

namespace hesscurve {

struct SuiteOptions {
  std::filesystem::path data_dir = default_data_dir();
  std::int64_t random_quartics = 100000;
  std::int64_t property_trials = 1000;
  std::int64_t search_polynomials = 10000;
  int parallel_workers = 8;
  std::uint64_t seed = 20240607;
  /// When set, an SVG per example is written there at 200 x 200.
  std::optional<std::filesystem::path> figure_dir;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

/// The acceptance criteria, numbered 1 to 9. An exception inside a criterion
/// fails that criterion only.
std::vector<CriterionResult> run_paper_suite(const SuiteOptions& options,
                                             const std::function<void(const CriterionResult&)>& on_result = {});

/// Runs one criterion by number; throws Error(InvalidArgument) outside 1..9.
CriterionResult run_criterion(int id, const SuiteOptions& options);

/// "PASS  3  certificate  0.12s  detail"
std::string format_result(const CriterionResult& r);

/// p(x + dx, y + dy).
BivarPoly translate(const BivarPoly& p, const Rational& dx, const Rational& dy);

}  // namespace hesscurve
