#include "hesscurve/search.hpp"

#include <omp.h>

#include <chrono>
#include <exception>
#include <ostream>

#include "hesscurve/hessian.hpp"
#include "hesscurve/rng.hpp"
#include "json.hpp"

namespace hesscurve {

namespace {

constexpr std::uint32_t kSearchStream = 0;
constexpr std::uint32_t kPerturbStream = 1;
constexpr std::int64_t kMaxCoeffMagnitude = std::int64_t{1} << 30;

}  // namespace

void SearchConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(Errc::InvalidArgument, what); };
  if (degree < 3 || degree > 8) bad("degree must lie in [3, 8]");
  if (!(coeff_min < coeff_max)) bad("coeff_min must be below coeff_max");
  if (coeff_min < -kMaxCoeffMagnitude || coeff_max > kMaxCoeffMagnitude) bad("coefficient range exceeds 2^30");
  if (oval_threshold < 0) bad("oval_threshold must be nonnegative");
  if (oval_threshold > harnack_bounds(2 * degree - 4).compact_ovals) {
    bad("oval_threshold exceeds the Harnack bound for hessians of degree " + std::to_string(2 * degree - 4));
  }
  if (max_candidates < 0 || max_examined < 0) bad("budgets must be nonnegative");
  if (batch_size < 1) bad("batch_size must be positive");
  if (workers < 1) bad("workers must be positive");
}

std::string_view to_string(Rejection r) {
  switch (r) {
    case Rejection::ZeroHessian: return "zero-hessian";
    case Rejection::NonSquareFree: return "non-square-free";
    case Rejection::NonGeneric: return "non-generic";
    case Rejection::Noncompact: return "noncompact";
    case Rejection::BelowThreshold: return "below-threshold";
  }
  return "unknown";
}

std::vector<Monomial> random_support(const SearchConfig& cfg) {
  std::vector<Monomial> support;
  for (int t = cfg.omit_low_terms ? 2 : 0; t <= cfg.degree; ++t) {
    for (int i = t; i >= 0; --i) support.push_back({i, t - i});
  }
  return support;
}

BivarPoly generate_random_poly(const SearchConfig& cfg, std::int64_t batch, std::int64_t item) {
  const auto support = random_support(cfg);
  const auto counter = static_cast<std::uint64_t>(batch * cfg.batch_size + item);
  CounterStream stream(cfg.seed, counter, kSearchStream);

  std::vector<std::int64_t> coeffs(support.size());
  for (auto& c : coeffs) c = stream.uniform_int(cfg.coeff_min, cfg.coeff_max);

  const std::size_t top = support.size() - static_cast<std::size_t>(cfg.degree) - 1;
  auto top_vanishes = [&] {
    for (std::size_t k = top; k < coeffs.size(); ++k) {
      if (coeffs[k] != 0) return false;
    }
    return true;
  };
  while (top_vanishes()) {
    for (std::size_t k = top; k < coeffs.size(); ++k) coeffs[k] = stream.uniform_int(cfg.coeff_min, cfg.coeff_max);
  }

  BivarPoly::TermMap terms;
  for (std::size_t k = 0; k < support.size(); ++k) terms.emplace(support[k], Rational(static_cast<long>(coeffs[k])));
  return BivarPoly(std::move(terms));
}

ScreenResult screen(const BivarPoly& f, const SearchConfig& cfg) {
  ScreenResult result;
  const BivarPoly h = hessian_of(f);
  if (h.degree() <= 0) {
    result.reason = Rejection::ZeroHessian;
    return result;
  }
  if (cfg.require_compact && infinite_point_count(h) > 0) {
    result.reason = Rejection::Noncompact;
    return result;
  }
  try {
    if (!is_square_free(h)) {
      result.reason = Rejection::NonSquareFree;
      return result;
    }
    // the bound is half the smaller count, so one low count already decides
    const ProjectionCount vertical = detail::vertical_count(h);
    if (vertical.count / 2 < cfg.oval_threshold) {
      result.reason = Rejection::BelowThreshold;
      return result;
    }
    const ProjectionCount horizontal = detail::vertical_count(swap_variables(h));
    CurveSummary s;
    s.degree = h.degree();
    s.vertical_tangent_count = vertical.count;
    s.horizontal_tangent_count = horizontal.count;
    s.oval_upper_bound = std::min(vertical.count, horizontal.count) / 2;
    s.infinite_real_points = infinite_point_count(h);
    s.sheared = vertical.sheared || horizontal.sheared;
    if (s.oval_upper_bound < cfg.oval_threshold) {
      result.reason = Rejection::BelowThreshold;
      return result;
    }
    result.summary = s;
  } catch (const Error& e) {
    if (e.code() != Errc::ShearBudgetExceeded) throw;
    result.reason = Rejection::NonGeneric;
  }
  return result;
}

BivarPoly record_polynomial(const CandidateRecord& record) {
  BivarPoly::TermMap terms;
  for (const auto& [i, j, c] : record.coeffs) {
    terms.emplace(Monomial{static_cast<int>(i), static_cast<int>(j)}, Rational(static_cast<long>(c)));
  }
  return BivarPoly(std::move(terms));
}

namespace {

CandidateRecord make_record(const SearchConfig& cfg, std::int64_t batch, std::int64_t item, const BivarPoly& f,
                            const CurveSummary& summary) {
  CandidateRecord rec;
  rec.seed = cfg.seed;
  rec.batch = batch;
  rec.item = item;
  rec.degree = f.degree();
  for (const auto& [m, c] : f.terms()) rec.coeffs.push_back({m.x, m.y, c.get_num().get_si()});
  rec.summary = summary;
  return rec;
}

struct ItemOutcome {
  ScreenResult result;
  BivarPoly f;
};

ItemOutcome examine(const SearchConfig& cfg, std::int64_t batch, std::int64_t item) {
  ItemOutcome out;
  out.f = generate_random_poly(cfg, batch, item);
  out.result = screen(out.f, cfg);
  return out;
}

// Folds one outcome into the stats; returns false once the quota is full.
bool tally(const SearchConfig& cfg, std::int64_t batch, std::int64_t item, const ItemOutcome& outcome,
           SearchStats& stats, CandidateSink& sink) {
  ++stats.examined;
  if (outcome.result.accepted()) {
    try {
      sink.write(make_record(cfg, batch, item, outcome.f, *outcome.result.summary));
    } catch (const Error& e) {
      throw SearchAborted(e.what(), stats);
    }
    ++stats.accepted;
  } else {
    ++stats.rejected[static_cast<std::size_t>(outcome.result.reason)];
  }
  return stats.accepted < cfg.max_candidates;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SearchStats run_search(const SearchConfig& cfg, CandidateSink& sink) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SearchStats stats;
  if (cfg.max_candidates == 0) return stats;

  std::vector<ItemOutcome> outcomes;
  for (std::int64_t batch = 0; stats.examined < cfg.max_examined; ++batch) {
    const std::int64_t n = std::min(cfg.batch_size, cfg.max_examined - stats.examined);
    outcomes.assign(static_cast<std::size_t>(n), {});
    std::exception_ptr failure;
#pragma omp parallel for num_threads(cfg.workers) schedule(dynamic, 1)
    for (std::int64_t item = 0; item < n; ++item) {
      try {
        outcomes[static_cast<std::size_t>(item)] = examine(cfg, batch, item);
      } catch (...) {
#pragma omp critical(hesscurve_search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::int64_t item = 0; item < n; ++item) {
      if (!tally(cfg, batch, item, outcomes[static_cast<std::size_t>(item)], stats, sink)) {
        stats.elapsed_seconds = seconds_since(start);
        return stats;
      }
    }
  }
  stats.elapsed_seconds = seconds_since(start);
  return stats;
}

SearchStats run_search_serial(const SearchConfig& cfg, CandidateSink& sink) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SearchStats stats;
  if (cfg.max_candidates == 0) return stats;

  for (std::int64_t batch = 0; stats.examined < cfg.max_examined; ++batch) {
    const std::int64_t n = std::min(cfg.batch_size, cfg.max_examined - stats.examined);
    for (std::int64_t item = 0; item < n; ++item) {
      if (!tally(cfg, batch, item, examine(cfg, batch, item), stats, sink)) {
        stats.elapsed_seconds = seconds_since(start);
        return stats;
      }
    }
  }
  stats.elapsed_seconds = seconds_since(start);
  return stats;
}

std::vector<CandidateRecord> perturb(const BivarPoly& f, int radius, const SearchConfig& cfg, std::int64_t trials) {
  if (radius < 0) throw Error(Errc::InvalidArgument, "perturbation radius must be nonnegative");
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "cannot perturb the zero polynomial");
  for (const auto& [m, c] : f.terms()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
      throw Error(Errc::InvalidArgument, "perturb needs machine-size integer coefficients");
    }
  }
  const int d = f.degree();
  std::vector<CandidateRecord> survivors;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    CounterStream stream(cfg.seed, static_cast<std::uint64_t>(trial), kPerturbStream);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (const auto& [m, c] : f.terms()) terms.emplace_back(m, c.get_num().get_si() + stream.uniform_int(-radius, radius));
    auto top_vanishes = [&] {
      for (const auto& [m, c] : terms) {
        if (m.degree() == d && c != 0) return false;
      }
      return true;
    };
    while (top_vanishes()) {
      for (auto& [m, c] : terms) {
        if (m.degree() == d) c = f.coeff(m.x, m.y).get_num().get_si() + stream.uniform_int(-radius, radius);
      }
    }
    BivarPoly::TermMap map;
    for (const auto& [m, c] : terms) map.emplace(m, Rational(static_cast<long>(c)));
    const BivarPoly g(std::move(map));
    const ScreenResult result = screen(g, cfg);
    if (result.accepted()) survivors.push_back(make_record(cfg, 0, trial, g, *result.summary));
  }
  return survivors;
}

std::string to_json_line(const CandidateRecord& record) {
  nlohmann::ordered_json j;
  j["seed"] = record.seed;
  j["batch"] = record.batch;
  j["item"] = record.item;
  j["degree"] = record.degree;
  j["coeffs"] = nlohmann::json::array();
  for (const auto& [i, jj, c] : record.coeffs) j["coeffs"].push_back({i, jj, c});
  j["bound"] = record.summary.oval_upper_bound;
  j["infinite_points"] = record.summary.infinite_real_points;
  j["vertical_tangents"] = record.summary.vertical_tangent_count;
  j["horizontal_tangents"] = record.summary.horizontal_tangent_count;
  j["hessian_degree"] = record.summary.degree;
  j["sheared"] = record.summary.sheared;
  j["generator_id"] = kGeneratorId;
  return j.dump();
}

CandidateRecord parse_json_line(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    CandidateRecord rec;
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.batch = j.at("batch").get<std::int64_t>();
    rec.item = j.at("item").get<std::int64_t>();
    rec.degree = j.at("degree").get<int>();
    for (const auto& t : j.at("coeffs")) rec.coeffs.push_back({t.at(0).get<std::int64_t>(), t.at(1).get<std::int64_t>(), t.at(2).get<std::int64_t>()});
    rec.summary.oval_upper_bound = j.at("bound").get<int>();
    rec.summary.infinite_real_points = j.at("infinite_points").get<int>();
    rec.summary.vertical_tangent_count = j.at("vertical_tangents").get<int>();
    rec.summary.horizontal_tangent_count = j.at("horizontal_tangents").get<int>();
    rec.summary.degree = j.value("hessian_degree", 0);
    rec.summary.sheared = j.value("sheared", false);
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad candidate record: ") + e.what());
  }
}

void JsonLinesSink::write(const CandidateRecord& record) {
  out_ << to_json_line(record) << '\n';
  if (!out_) throw Error(Errc::SinkFailure, "candidate stream write failed");
}

std::string to_json_line(const SearchStats& stats, const SearchConfig& cfg) {
  nlohmann::ordered_json j;
  j["examined"] = stats.examined;
  j["accepted"] = stats.accepted;
  nlohmann::ordered_json rejected;
  for (std::size_t k = 0; k < kRejectionKinds; ++k) rejected[std::string(to_string(static_cast<Rejection>(k)))] = stats.rejected[k];
  j["rejected"] = rejected;
  j["elapsed_seconds"] = stats.elapsed_seconds;
  j["generator_id"] = kGeneratorId;
  j["seed"] = cfg.seed;
  j["degree"] = cfg.degree;
  j["coeff_min"] = cfg.coeff_min;
  j["coeff_max"] = cfg.coeff_max;
  j["omit_low_terms"] = cfg.omit_low_terms;
  j["oval_threshold"] = cfg.oval_threshold;
  j["require_compact"] = cfg.require_compact;
  j["batch_size"] = cfg.batch_size;
  j["workers"] = cfg.workers;
  return j.dump();
}

}  // namespace hesscurve
