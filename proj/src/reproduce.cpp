#include "hesscurve/reproduce.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "hesscurve/certify.hpp"
#include "hesscurve/error.hpp"
#include "hesscurve/hessian.hpp"
#include "hesscurve/ovalbound.hpp"
#include "hesscurve/parse.hpp"
#include "hesscurve/realroots.hpp"
#include "hesscurve/render.hpp"
#include "hesscurve/rng.hpp"
#include "hesscurve/search.hpp"

namespace hesscurve {

namespace {

// RNG streams for the suite's random inputs; the search uses 0 and 1.
constexpr std::uint32_t kQuarticStream = 7;
constexpr std::uint32_t kPropertyStream = 8;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (!passed) detail << "; ";
    else detail.str("");
    passed = false;
    detail << what;
  }
};

UnivarPoly from_integers(const std::vector<Integer>& high_first) {
  std::vector<Rational> cs;
  for (auto it = high_first.rbegin(); it != high_first.rend(); ++it) cs.emplace_back(*it);
  return UnivarPoly(std::move(cs));
}

BivarPoly power(const BivarPoly& p, int k) {
  BivarPoly out = BivarPoly::constant(1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

BivarPoly random_poly(CounterStream& rng, int degree, int bound) {
  BivarPoly::TermMap terms;
  for (int d = 0; d <= degree; ++d) {
    for (int i = d; i >= 0; --i) {
      const auto c = rng.uniform_int(-bound, bound);
      if (c != 0) terms[{i, d - i}] = Rational(c);
    }
  }
  return BivarPoly(std::move(terms));
}

Rational random_rational(CounterStream& rng, int bound) {
  return ratio(Integer(static_cast<long>(rng.uniform_int(-bound, bound))),
               Integer(static_cast<long>(rng.uniform_int(1, 4))));
}

//---------------------------------------------------------------------------//

Outcome table3(const SuiteOptions& opt) {
  Outcome out;
  const PaperTables t = load_tables(opt.data_dir);
  for (const auto& row : t.table3) {
    const UnivarPoly q = restrict_to_line(t.thm1_hessian, row.line);
    if (q != from_integers(row.quartic)) out.fail(row.name + " restriction is " + to_string(q));
    const QuarticInvariants inv = quartic_invariants(reduce_quartic(q));
    if (inv.delta != row.delta) out.fail(row.name + " delta " + to_string(inv.delta));
    if (inv.L != row.L) out.fail(row.name + " L " + to_string(inv.L));
    if (inv.a != row.a) out.fail(row.name + " a " + to_string(inv.a));
  }
  if (out.passed) out.detail << t.table3.size() * 3 << " entries exact";
  return out;
}

Outcome hessian_identity(const SuiteOptions& opt) {
  Outcome out;
  const PaperTables t = load_tables(opt.data_dir);
  const auto f = find_example(load_examples(opt.data_dir), "thm1_quartic").f;
  const BivarPoly hess = hessian_of(f);
  if (hess != Rational(-4) * t.thm1_hessian) out.fail("hessian is " + to_string(hess));
  else out.detail << "hessian(f) = -4 h";
  return out;
}

Outcome certificate(const SuiteOptions& opt) {
  Outcome out;
  const PaperTables t = load_tables(opt.data_dir);
  const Certificate cert = load_thm1_certificate(opt.data_dir);
  if (cert.curve != t.thm1_hessian) out.fail("certificate curve differs from the displayed h");
  const CertificateReport report = verify_certificate(cert);
  if (!report.verified || report.proven_min_ovals != 4 || !report.compact || !report.exact) {
    out.fail(to_string(report) + (report.failure.empty() ? "" : " (" + report.failure + ")"));
  }
  if (harnack_bounds(4).compact_ovals != 4) out.fail("harnack bound for degree 4 is not 4");
  std::ostringstream values;
  for (std::size_t i = 0; i < t.sample_points.size(); ++i) {
    const auto& [x, y] = t.sample_points[i];
    const Rational v = evaluate(t.thm1_hessian, x, y);
    values << (i ? " " : "") << to_string(v);
    if (v * 4 != t.sample_printed[i] || sign(v) >= 0) out.fail("h(" + to_string(x) + "," + to_string(y) + ") = " + to_string(v));
  }
  if (out.passed) out.detail << to_string(report) << "; h at samples " << values.str();
  return out;
}

Outcome quartic_crosscheck(const SuiteOptions& opt) {
  Outcome out;
  const PaperTables t = load_tables(opt.data_dir);
  for (const auto& row : t.table3) {
    const UnivarPoly q = restrict_to_line(t.thm1_hessian, row.line);
    const bool criterion = quartic_has_no_real_roots(q);
    if (!criterion || sturm_count(q) != 0) out.fail(row.name + " criterion or Sturm count disagrees");
  }
  std::int64_t tested = 0, rootless = 0, skipped = 0, disagreements = 0;
  for (std::int64_t index = 0; tested < opt.random_quartics; ++index) {
    CounterStream rng(opt.seed, static_cast<std::uint64_t>(index), kQuarticStream);
    std::vector<Rational> cs(5);
    for (auto& c : cs) c = Rational(rng.uniform_int(-100, 100));
    if (sign(cs[4]) == 0) cs[4] = 1;
    const UnivarPoly q(cs);
    if (sign(quartic_invariants(reduce_quartic(q)).delta) == 0) {
      ++skipped;
      continue;
    }
    ++tested;
    const bool none = sturm_count(q) == 0;
    rootless += none ? 1 : 0;
    if (quartic_has_no_real_roots(q) != none) {
      if (disagreements++ == 0) out.fail("disagreement on " + to_string(q));
    }
  }
  if (disagreements > 0) out.detail << "; " << disagreements << " disagreements";
  else out.detail << tested << " random quartics (" << rootless << " without real roots, " << skipped
                  << " with zero discriminant skipped), 0 disagreements";
  return out;
}

Outcome harnack_tables(const SuiteOptions& opt) {
  Outcome out;
  const PaperTables t = load_tables(opt.data_dir);
  for (std::size_t i = 0; i < t.hessian_degree.size(); ++i) {
    const int d = t.hessian_degree[i];
    if (harnack_bounds(d).compact_ovals != t.compact_bound[i]) out.fail("table 1 at degree " + std::to_string(d));
  }
  for (std::size_t i = 0; i < t.noncompact.size(); ++i) {
    const HarnackBounds b = harnack_bounds(t.noncompact_degree[i]);
    if (b.noncompact_ovals != t.noncompact[i].first || b.unbounded != t.noncompact[i].second) {
      out.fail("table 2 at degree " + std::to_string(t.noncompact_degree[i]));
    }
  }
  if (out.passed) out.detail << t.compact_bound.size() << " bounds and " << t.noncompact.size() << " pairs";
  return out;
}

Outcome example_screens(const SuiteOptions& opt) {
  Outcome out;
  std::ostringstream summary;
  for (const auto& ex : load_examples(opt.data_dir)) {
    SearchConfig cfg;
    cfg.degree = ex.degree();
    cfg.oval_threshold = ex.oval_threshold();
    cfg.require_compact = ex.compact;
    const ScreenResult r = screen(ex.f, cfg);
    const CurveSummary s = oval_upper_bound(hessian_of(ex.f));
    summary << (summary.tellp() > 0 ? ", " : "") << ex.id << " bound " << s.oval_upper_bound << " inf "
            << s.infinite_real_points;
    if (!r.accepted()) {
      out.fail(ex.id + " rejected (" + std::string(to_string(r.reason)) + ", bound " +
               std::to_string(s.oval_upper_bound) + " < threshold " + std::to_string(cfg.oval_threshold) + ")");
    }
    if (s.oval_upper_bound < ex.oval_claim()) {
      out.fail(ex.id + " bound " + std::to_string(s.oval_upper_bound) + " < stated " + std::to_string(ex.oval_claim()));
    }
    if (ex.compact && s.infinite_real_points != 0) out.fail(ex.id + " has points at infinity");
    if (ex.stated_unbounded.value_or(0) > 0 && s.infinite_real_points == 0) out.fail(ex.id + " has none at infinity");
  }
  if (out.passed) out.detail << summary.str();
  return out;
}

Outcome raster_counts(const SuiteOptions& opt) {
  Outcome out;
  const PaperTables t = load_tables(opt.data_dir);
  const int resolutions[] = {200, 400, 800};
  std::ostringstream summary;
  const BivarPoly fig1 = t.thm1_hessian;
  summary << "thm1_quartic";
  for (int n : resolutions) {
    Window w{t.fig1_x_lo, t.fig1_x_hi, t.fig1_y_lo, t.fig1_y_hi, n, n};
    const int c = count_curve_components(rasterize(fig1, w));
    summary << (n == 200 ? " " : "/") << c;
    if (c != t.fig1_components) out.fail("thm1_quartic at " + std::to_string(n) + ": " + std::to_string(c) + " components");
  }
  for (const auto& ex : load_examples(opt.data_dir)) {
    if (ex.id == "thm1_quartic") continue;
    const BivarPoly h = hessian_of(ex.f);
    summary << ", " << ex.id;
    std::ostringstream counts;
    bool ok = true;
    Window w = auto_window(h, resolutions[0], resolutions[0]);
    for (int n : resolutions) {
      w.nx = w.ny = n;
      const int c = count_bounded_components(rasterize(h, w));
      counts << (n == 200 ? "" : "/") << c;
      ok = ok && c == ex.stated_ovals;
    }
    summary << ' ' << counts.str();
    if (!ok) out.fail(ex.id + " bounded " + counts.str() + " at 200/400/800, stated " + std::to_string(ex.stated_ovals));
  }
  if (opt.figure_dir) {
    std::filesystem::create_directories(*opt.figure_dir);
    emit_svg(rasterize(fig1, Window{t.fig1_x_lo, t.fig1_x_hi, t.fig1_y_lo, t.fig1_y_hi, 200, 200}),
             *opt.figure_dir / "thm1_quartic.svg", "thm1_quartic");
    for (const auto& ex : load_examples(opt.data_dir)) {
      if (ex.id == "thm1_quartic") continue;
      const BivarPoly h = hessian_of(ex.f);
      emit_svg(rasterize(h, auto_window(h, 200, 200)), *opt.figure_dir / (ex.id + ".svg"), ex.id);
    }
  }
  if (out.passed) out.detail << summary.str();
  return out;
}

Outcome search_determinism(const SuiteOptions& opt) {
  Outcome out;
  SearchConfig cfg;
  cfg.degree = 4;
  cfg.max_examined = opt.search_polynomials;
  cfg.max_candidates = opt.search_polynomials;
  cfg.seed = opt.seed;

  std::ostringstream one, many;
  cfg.workers = 1;
  JsonLinesSink sink_one(one);
  const SearchStats s1 = run_search(cfg, sink_one);
  cfg.workers = opt.parallel_workers;
  JsonLinesSink sink_many(many);
  const SearchStats s8 = run_search(cfg, sink_many);

  if (one.str() != many.str()) out.fail("candidate files differ between 1 and " + std::to_string(opt.parallel_workers) + " workers");
  if (s1.examined != s8.examined || s1.accepted != s8.accepted || s1.rejected != s8.rejected) out.fail("stats differ");
  if (s1.examined != opt.search_polynomials) out.fail("examined " + std::to_string(s1.examined));
  const double rate = s1.elapsed_seconds > 0 ? static_cast<double>(s1.examined) / s1.elapsed_seconds : 0.0;
  if (rate < 100.0) out.fail("throughput " + std::to_string(rate) + " polynomials/s on one worker");
  if (out.passed) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%lld examined, %lld accepted, %zu bytes identical, %.0f polynomials/s on one worker",
                  static_cast<long long>(s1.examined), static_cast<long long>(s1.accepted), one.str().size(), rate);
    out.detail << buf;
  }
  return out;
}

Outcome property_suites(const SuiteOptions& opt) {
  Outcome out;
  std::int64_t failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok && failures++ < 5) out.fail(what);
  };

  for (std::int64_t trial = 0; trial < opt.property_trials; ++trial) {
    CounterStream rng(opt.seed, static_cast<std::uint64_t>(trial), kPropertyStream);
    const std::string tag = " (trial " + std::to_string(trial) + ")";
    const int degree = static_cast<int>(rng.uniform_int(2, 5));
    const BivarPoly f = random_poly(rng, degree, 9);

    // affine covariance: g(v) = f(M (v + d))
    std::array<Rational, 4> m;
    do {
      for (auto& e : m) e = random_rational(rng, 6);
    } while (sign(m[0] * m[3] - m[1] * m[2]) == 0);
    const Rational det = m[0] * m[3] - m[1] * m[2];
    const Rational dx = random_rational(rng, 6), dy = random_rational(rng, 6);
    const BivarPoly moved = translate(substitute_linear(f, m), dx, dy);
    const BivarPoly rhs = translate(substitute_linear(hessian_of(f), m), dx, dy) * (det * det);
    check(hessian_of(moved) == rhs, "affine covariance" + tag);

    // three squares
    check(three_squares_check(f), "three squares" + tag);

    // ring and derivation axioms
    const BivarPoly p = random_poly(rng, 3, 5), q = random_poly(rng, 3, 5), r = random_poly(rng, 2, 5);
    check((p + q) + r == p + (q + r), "additive associativity" + tag);
    check(p * q == q * p, "commutativity" + tag);
    check((p * q) * r == p * (q * r), "multiplicative associativity" + tag);
    check(p * (q + r) == p * q + p * r, "distributivity" + tag);
    check(p - p == BivarPoly(), "additive inverse" + tag);
    for (Var v : {Var::X, Var::Y}) {
      check(differentiate(p * q, v) == differentiate(p, v) * q + p * differentiate(q, v), "Leibniz rule" + tag);
      check(differentiate(integrate(p, v), v) == p, "integrate then differentiate" + tag);
    }
    check(differentiate(differentiate(p, Var::X), Var::Y) == differentiate(differentiate(p, Var::Y), Var::X),
          "mixed partials" + tag);
    check(swap_variables(swap_variables(p)) == p, "swap involution" + tag);

    // restriction preserves values, hence roots
    if (f.degree() > 0) {
      Rational a = random_rational(rng, 5), b = random_rational(rng, 5);
      if (sign(a) == 0 && sign(b) == 0) b = 1;
      const Line line = Line::affine(a, b, random_rational(rng, 5));
      const bool vanishes = [&] {
        try {
          restrict_to_line_unscaled(f, line);
          return false;
        } catch (const Error& e) {
          if (e.code() != Errc::ZeroPolynomial) throw;
          return true;
        }
      }();
      if (!vanishes) {
        const UnivarPoly u = restrict_to_line_unscaled(f, line);
        const UnivarPoly n = restrict_to_line(f, line);
        check(n.degree() == u.degree(), "restriction degree" + tag);
        const Rational scale = n.leading() / u.leading();
        check(n == u * scale, "normalized restriction is a multiple" + tag);
        for (int k = 0; k < 3; ++k) {
          const Rational s = random_rational(rng, 8);
          const auto [px, py] = line.point_at(s);
          check(u(s) == evaluate(f, px, py), "restriction value" + tag);
        }
      }
    }
  }

  // forced shears
  const BivarPoly circle = parse_poly("x^2+y^2-1");
  const BivarPoly h = load_tables(opt.data_dir).thm1_hessian;
  for (const auto& [name, curve] : {std::pair{std::string("circle"), circle}, std::pair{std::string("thm1 h"), h}}) {
    const int base = oval_upper_bound(curve).oval_upper_bound;
    for (int lambda = 1; lambda <= 3; ++lambda) {
      const int sheared = oval_upper_bound(shear(curve, lambda)).oval_upper_bound;
      check(sheared == base, name + " bound " + std::to_string(sheared) + " after shear " + std::to_string(lambda) +
                                 ", " + std::to_string(base) + " before");
    }
  }

  if (failures > 0) out.detail << "; " << failures << " failures";
  else out.detail << opt.property_trials << " random trials, forced shears on circle and thm1 h, 0 failures";
  return out;
}

struct CriterionSpec {
  const char* name;
  Outcome (*run)(const SuiteOptions&);
  double budget_seconds;  ///< 0 for no runtime bound
};

const CriterionSpec kCriteria[] = {
    {"table3-exact", table3, 1.0},
    {"hessian-identity", hessian_identity, 0.0},
    {"thm1-certificate", certificate, 0.0},
    {"quartic-crosscheck", quartic_crosscheck, 0.0},
    {"harnack-tables", harnack_tables, 0.0},
    {"example-screens", example_screens, 30.0},
    {"raster-components", raster_counts, 0.0},
    {"search-determinism", search_determinism, 0.0},
    {"property-suites", property_suites, 0.0},
};

}  // namespace

BivarPoly translate(const BivarPoly& p, const Rational& dx, const Rational& dy) {
  const BivarPoly sx = BivarPoly::x() + BivarPoly::constant(dx);
  const BivarPoly sy = BivarPoly::y() + BivarPoly::constant(dy);
  BivarPoly out;
  for (const auto& [m, c] : p.terms()) out += c * (power(sx, m.x) * power(sy, m.y));
  return out;
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  if (id < 1 || id > static_cast<int>(std::size(kCriteria))) {
    throw Error(Errc::InvalidArgument, "criterion must be in 1.." + std::to_string(std::size(kCriteria)));
  }
  const CriterionSpec& spec = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.name = spec.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = spec.run(options);
    result.passed = o.passed;
    result.detail = o.detail.str();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (spec.budget_seconds > 0 && result.seconds > spec.budget_seconds) {
    result.passed = false;
    char buf[96];
    std::snprintf(buf, sizeof buf, "; over the %.0f s budget", spec.budget_seconds);
    result.detail += buf;
  }
  return result;
}

std::vector<CriterionResult> run_paper_suite(const SuiteOptions& options,
                                             const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= static_cast<int>(std::size(kCriteria)); ++id) {
    results.push_back(run_criterion(id, options));
    if (on_result) on_result(results.back());
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s  %d  %-20s %8.2fs  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace hesscurve
