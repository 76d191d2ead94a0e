#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hesscurve/certify.hpp"
#include "hesscurve/polyring.hpp"

namespace hesscurve {

struct PaperExample {
  std::string id;
  BivarPoly f;
  int stated_ovals = 0;
  std::optional<int> stated_unbounded;
  std::optional<int> stated_rp2_ovals;
  bool compact = false;

  int degree() const { return f.degree(); }
  /// Oval threshold used when screening: 4, 8 and 11 for degrees 4, 5, 6.
  int oval_threshold() const;
  /// stated_rp2_ovals when given, else stated_ovals.
  int oval_claim() const { return stated_rp2_ovals.value_or(stated_ovals); }
};

/// $HESSCURVE_DATA when set, else the data directory of the source tree.
std::filesystem::path default_data_dir();

/// 64-bit FNV-1a of a byte string, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Digest of the canonical serialization to_string(f).
std::string polynomial_digest(const BivarPoly& f);

PaperExample parse_example(std::istream& in);

/// The nine examples, in figure order. Throws Error(FixtureCorrupt) when a
/// stored digest does not match, Error(IoError) when a file is missing.
std::vector<PaperExample> load_examples(const std::filesystem::path& data_dir = default_data_dir());

/// Throws Error(InvalidArgument) for an unknown id.
PaperExample find_example(const std::vector<PaperExample>& examples, const std::string& id);

struct Table3Row {
  std::string name;
  Line line;
  std::vector<Integer> quartic;  ///< highest power first
  Rational delta, L, a;
};

struct PaperTables {
  std::vector<int> hessian_degree;               ///< Table 1 columns
  std::vector<int> compact_bound;                ///< Table 1 Harnack row
  std::vector<std::pair<int, int>> noncompact;   ///< Table 2 pairs, columns d = 2, 4, 6, 8
  std::vector<int> noncompact_degree;
  BivarPoly thm1_hessian;
  std::vector<Table3Row> table3;
  Rational fig1_x_lo, fig1_x_hi, fig1_y_lo, fig1_y_hi;
  int fig1_components = 0;
  std::vector<std::pair<Rational, Rational>> sample_points;
  std::vector<Rational> sample_printed;
};

PaperTables load_tables(const std::filesystem::path& data_dir = default_data_dir());

Certificate load_thm1_certificate(const std::filesystem::path& data_dir = default_data_dir());

}  // namespace hesscurve
