// hesscurve: command-line front end.
//
// Exit codes: 0 success, 1 verification or screening failure, 2 usage error,
// 3 internal error. Errors also go to stderr as one line:
//   error code=<Code> message="<text>"
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hesscurve/certify.hpp"
#include "hesscurve/error.hpp"
#include "hesscurve/fixtures.hpp"
#include "hesscurve/hessian.hpp"
#include "hesscurve/ovalbound.hpp"
#include "hesscurve/parse.hpp"
#include "hesscurve/render.hpp"
#include "hesscurve/reproduce.hpp"
#include "hesscurve/search.hpp"

using namespace hesscurve;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

int report_error(Errc code, const std::string& what) {
  const std::string name(to_string(code));
  std::string message = what;
  if (message.rfind(name + ": ", 0) == 0) message.erase(0, name.size() + 2);
  std::cerr << "error code=" << name << " message=" << quoted(message) << '\n';
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::ParseError:
    case Errc::ZeroPolynomial:
    case Errc::WrongDegree:
    case Errc::MalformedCertificate:
    case Errc::IoError:
      return kExitUsage;
    case Errc::NonSquareFree:
    case Errc::ShearBudgetExceeded:
    case Errc::IdenticallyZeroResultant:
    case Errc::RestrictionZero:
    case Errc::PointOnLine:
    case Errc::SinkFailure:
      return kExitFailure;
    default:
      return kExitInternal;
  }
}

int default_workers() {
  if (const char* env = std::getenv("HESSCURVE_WORKERS"); env != nullptr && *env != '\0') {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, std::string("HESSCURVE_WORKERS is not an integer: ") + env);
    }
  }
  return 1;
}

Window parse_window(const std::string& text, int grid) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != 4) throw Error(Errc::InvalidArgument, "window needs x_lo,x_hi,y_lo,y_hi");
  Window w{v[0], v[1], v[2], v[3], grid, grid};
  w.validate();
  return w;
}

void print_summary(const CurveSummary& s) {
  std::cout << "degree=" << s.degree << " oval_upper_bound=" << s.oval_upper_bound
            << " infinite_real_points=" << s.infinite_real_points << " vertical_tangents=" << s.vertical_tangent_count
            << " horizontal_tangents=" << s.horizontal_tangent_count << " sheared=" << (s.sheared ? "true" : "false")
            << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for hessian curves of bivariate polynomials"};
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1);

  std::string poly_text;

  auto* hessian = app.add_subcommand("hessian", "Print Hess(f) = f_xx f_yy - f_xy^2");
  hessian->set_help_flag("--help");
  hessian->add_option("-f,--poly", poly_text, "polynomial f")->required();

  auto* bound = app.add_subcommand("bound", "Tangent counts, oval bound and points at infinity of h = 0");
  bound->set_help_flag("--help");
  bound->add_option("-h,--curve", poly_text, "curve polynomial h")->required();
  bool bound_of_hessian = false;
  bound->add_flag("--of-hessian", bound_of_hessian, "treat the input as f and bound Hess(f)");

  auto* certify = app.add_subcommand("certify", "Verify an oval-count certificate");
  certify->set_help_flag("--help");
  std::string cert_path;
  certify->add_option("--cert", cert_path, "certificate file")->required();

  auto* search = app.add_subcommand("search", "Random search for hessians with many ovals");
  search->set_help_flag("--help");
  SearchConfig cfg;
  bool keep_low = false;
  std::string out_path, stats_path, perturb_text;
  int radius = 0;
  std::int64_t trials = 0;
  search->add_option("--degree", cfg.degree, "degree of f (3..8)")->capture_default_str();
  search->add_option("--coeff-min", cfg.coeff_min)->capture_default_str();
  search->add_option("--coeff-max", cfg.coeff_max)->capture_default_str();
  search->add_flag("--keep-low-terms", keep_low, "also draw constant and linear terms");
  search->add_option("--threshold", cfg.oval_threshold, "minimum oval bound")->capture_default_str();
  search->add_flag("--compact", cfg.require_compact, "reject curves with real points at infinity");
  search->add_option("--max-candidates", cfg.max_candidates)->capture_default_str();
  search->add_option("--max-examined", cfg.max_examined)->capture_default_str();
  search->add_option("--batch-size", cfg.batch_size)->capture_default_str();
  search->add_option("--seed", cfg.seed)->capture_default_str();
  std::optional<int> workers;
  search->add_option("--workers", workers, "OpenMP threads (default $HESSCURVE_WORKERS or 1)");
  search->add_option("-o,--out", out_path, "candidate file, one JSON object per line (default stdout)");
  search->add_option("--stats", stats_path, "statistics file, one JSON line (default stderr)");
  search->add_option("--perturb", perturb_text, "perturb this integer polynomial instead of drawing new ones");
  search->add_option("--radius", radius, "perturbation radius")->capture_default_str();
  search->add_option("--trials", trials, "number of perturbations")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "Render h = 0 as SVG and count raster components");
  plot->set_help_flag("--help");
  std::string window_text, svg_path;
  int grid = 200;
  plot->add_option("-h,--curve", poly_text, "curve polynomial h")->required();
  plot->add_option("--window", window_text, "x_lo,x_hi,y_lo,y_hi (default: auto)");
  plot->add_option("--grid", grid, "nodes per axis")->capture_default_str();
  plot->add_option("-o,--out", svg_path, "SVG output path")->required();

  auto* paper = app.add_subcommand("paper", "Run the full reproduction suite and print a pass/fail table");
  paper->set_help_flag("--help");
  std::string figure_dir;
  SuiteOptions suite;
  paper->add_option("--figures", figure_dir, "write one SVG per example here");
  paper->add_option("--quartics", suite.random_quartics, "random quartics for the criterion check")->capture_default_str();
  paper->add_option("--trials", suite.property_trials, "random trials per property")->capture_default_str();
  paper->add_option("--search", suite.search_polynomials, "polynomials in the determinism run")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error code=Usage message=" << quoted(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    if (*hessian) {
      std::cout << to_string(hessian_of(parse_poly(poly_text))) << '\n';
      return 0;
    }
    if (*bound) {
      BivarPoly h = parse_poly(poly_text);
      if (bound_of_hessian) h = hessian_of(h);
      print_summary(oval_upper_bound(h));
      return 0;
    }
    if (*certify) {
      const CertificateReport report = verify_certificate(load_certificate(cert_path));
      std::cout << to_string(report) << '\n';
      if (!report.verified) std::cout << "failure: " << report.failure << '\n';
      return report.verified ? 0 : kExitFailure;
    }
    if (*search) {
      cfg.omit_low_terms = !keep_low;
      cfg.workers = workers.value_or(default_workers());
      cfg.validate();
      std::ofstream out_file;
      if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) throw Error(Errc::IoError, "cannot open " + out_path);
      }
      std::ostream& out = out_path.empty() ? std::cout : out_file;
      JsonLinesSink sink(out);
      if (!perturb_text.empty()) {
        for (const auto& rec : perturb(parse_poly(perturb_text), radius, cfg, trials)) sink.write(rec);
        return 0;
      }
      SearchStats stats;
      try {
        stats = run_search(cfg, sink);
      } catch (const SearchAborted& e) {
        std::cerr << to_json_line(e.stats, cfg) << '\n';
        throw;
      }
      if (stats_path.empty()) {
        std::cerr << to_json_line(stats, cfg) << '\n';
      } else {
        std::ofstream s(stats_path);
        if (!(s << to_json_line(stats, cfg) << '\n')) throw Error(Errc::IoError, "cannot write " + stats_path);
      }
      return 0;
    }
    if (*plot) {
      const BivarPoly h = parse_poly(poly_text);
      const Window w = window_text.empty() ? auto_window(h, grid, grid) : parse_window(window_text, grid);
      const SignRaster r = rasterize(h, w);
      emit_svg(r, svg_path, poly_text);
      std::cout << "window=" << to_string(w.x_lo) << ',' << to_string(w.x_hi) << ',' << to_string(w.y_lo) << ','
                << to_string(w.y_hi) << " grid=" << grid << " components=" << count_curve_components(r)
                << " bounded=" << count_bounded_components(r) << '\n';
      return 0;
    }
    if (*paper) {
      if (!figure_dir.empty()) suite.figure_dir = figure_dir;
      int failed = 0;
      run_paper_suite(suite, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        failed += r.passed ? 0 : 1;
      });
      std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
      return failed == 0 ? 0 : kExitFailure;
    }
  } catch (const Error& e) {
    return report_error(e.code(), e.what());
  } catch (const std::exception& e) {
    return report_error(Errc::Internal, e.what());
  }
  return kExitInternal;
}
