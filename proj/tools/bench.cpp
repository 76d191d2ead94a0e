// Serial reference vs OpenMP kernels: raster evaluation and batch search.
#include <CLI11.hpp>

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "hesscurve/fixtures.hpp"
#include "hesscurve/hessian.hpp"
#include "hesscurve/render.hpp"
#include "hesscurve/search.hpp"

using namespace hesscurve;

namespace {

template <class F>
double best_of(int repeats, F&& run) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    run();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const char* kernel, const char* variant, int threads, double seconds, double serial) {
  std::printf("%-10s %-8s %7d %10.4f %8.2f\n", kernel, variant, threads, seconds, serial / seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hesscurve kernel benchmark"};
  int grid = 800, repeats = 3, threads = omp_get_max_threads();
  std::int64_t polys = 2000;
  app.add_option("--grid", grid, "raster nodes per axis")->capture_default_str();
  app.add_option("--polys", polys, "polynomials per search run")->capture_default_str();
  app.add_option("--threads", threads, "OpenMP threads for the parallel variants")->capture_default_str();
  app.add_option("--repeats", repeats, "best of this many runs")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::printf("%-10s %-8s %7s %10s %8s\n", "kernel", "variant", "threads", "seconds", "speedup");

  const BivarPoly h = hessian_of(find_example(load_examples(), "fig6a_sextic").f);
  const Window w = auto_window(h, grid, grid);
  omp_set_num_threads(threads);
  const double raster_serial = best_of(repeats, [&] { rasterize_serial(h, w); });
  const double raster_par = best_of(repeats, [&] { rasterize(h, w); });
  row("rasterize", "serial", 1, raster_serial, raster_serial);
  row("rasterize", "openmp", threads, raster_par, raster_serial);

  SearchConfig cfg;
  cfg.max_examined = polys;
  cfg.max_candidates = polys;
  const double search_serial = best_of(repeats, [&] {
    VectorSink sink;
    run_search_serial(cfg, sink);
  });
  cfg.workers = threads;
  const double search_par = best_of(repeats, [&] {
    VectorSink sink;
    run_search(cfg, sink);
  });
  row("search", "serial", 1, search_serial, search_serial);
  row("search", "openmp", threads, search_par, search_serial);
  std::printf("search throughput: %.0f polynomials/s serial\n", static_cast<double>(polys) / search_serial);
  return 0;
}
