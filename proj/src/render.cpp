#include "hesscurve/render.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hesscurve/error.hpp"
#include "hesscurve/ovalbound.hpp"

namespace hesscurve {

void Window::validate() const {
  if (!(x_lo < x_hi) || !(y_lo < y_hi)) throw Error(Errc::InvalidArgument, "window must have x_lo < x_hi and y_lo < y_hi");
  if (nx < 2 || ny < 2) throw Error(Errc::InvalidArgument, "window needs at least 2 nodes per axis");
}

Rational Window::node_x(int ix) const {
  Rational t = x_lo + (x_hi - x_lo) * ratio(Integer(ix), Integer(nx - 1));
  t.canonicalize();
  return t;
}

Rational Window::node_y(int iy) const {
  Rational t = y_lo + (y_hi - y_lo) * ratio(Integer(iy), Integer(ny - 1));
  t.canonicalize();
  return t;
}

namespace {

constexpr double kExactFallback = 1e-9;

struct FloatPoly {
  // rows[i] holds the coefficients of x^i as a dense polynomial in y
  std::vector<std::vector<double>> rows;
};

FloatPoly to_float(const BivarPoly& h) {
  FloatPoly fp;
  for (const auto& row : as_poly_in(h, Var::X)) {
    std::vector<double> cs;
    for (const auto& c : row.coeffs()) cs.push_back(c.get_d());
    fp.rows.push_back(std::move(cs));
  }
  return fp;
}

NodeSign sign_of(int s) { return s > 0 ? NodeSign::Positive : (s < 0 ? NodeSign::Negative : NodeSign::Zero); }

void fill_row(const BivarPoly& h, const FloatPoly& fp, const Window& w, int iy, std::vector<double> const& xs,
              NodeSign* out) {
  const double y = w.node_y(iy).get_d();
  const double ay = std::fabs(y);
  // per-row Horner in y once, then Horner in x per node
  std::vector<double> row_val(fp.rows.size()), row_mag(fp.rows.size());
  for (std::size_t i = 0; i < fp.rows.size(); ++i) {
    double v = 0.0, m = 0.0;
    for (auto it = fp.rows[i].rbegin(); it != fp.rows[i].rend(); ++it) {
      v = v * y + *it;
      m = m * ay + std::fabs(*it);
    }
    row_val[i] = v;
    row_mag[i] = m;
  }
  for (int ix = 0; ix < w.nx; ++ix) {
    const double x = xs[static_cast<std::size_t>(ix)];
    const double ax = std::fabs(x);
    double v = 0.0, m = 0.0;
    for (std::size_t i = fp.rows.size(); i-- > 0;) {
      v = v * x + row_val[i];
      m = m * ax + row_mag[i];
    }
    if (std::fabs(v) <= kExactFallback * m) {
      out[ix] = sign_of(sgn(evaluate(h, w.node_x(ix), w.node_y(iy))));
    } else {
      out[ix] = v > 0 ? NodeSign::Positive : NodeSign::Negative;
    }
  }
}

SignRaster prepare(const Window& w, std::vector<double>& xs) {
  w.validate();
  SignRaster r;
  r.window = w;
  r.signs.assign(static_cast<std::size_t>(w.nx) * static_cast<std::size_t>(w.ny), NodeSign::Zero);
  xs.resize(static_cast<std::size_t>(w.nx));
  for (int ix = 0; ix < w.nx; ++ix) xs[static_cast<std::size_t>(ix)] = w.node_x(ix).get_d();
  return r;
}

}  // namespace

SignRaster rasterize(const BivarPoly& h, const Window& w) {
  std::vector<double> xs;
  SignRaster r = prepare(w, xs);
  const FloatPoly fp = to_float(h);
#pragma omp parallel for schedule(static)
  for (int iy = 0; iy < w.ny; ++iy) {
    fill_row(h, fp, w, iy, xs, r.signs.data() + static_cast<std::size_t>(iy) * w.nx);
  }
  return r;
}

SignRaster rasterize_serial(const BivarPoly& h, const Window& w) {
  std::vector<double> xs;
  SignRaster r = prepare(w, xs);
  const FloatPoly fp = to_float(h);
  for (int iy = 0; iy < w.ny; ++iy) {
    fill_row(h, fp, w, iy, xs, r.signs.data() + static_cast<std::size_t>(iy) * w.nx);
  }
  return r;
}

namespace {

struct Components {
  int total = 0;
  int bounded = 0;
};

Components label_components(const SignRaster& r) {
  const int cx = r.window.nx - 1, cy = r.window.ny - 1;
  auto index = [cx](int i, int j) { return static_cast<std::size_t>(j) * cx + i; };
  std::vector<char> curve(static_cast<std::size_t>(cx) * cy, 0);
  for (int j = 0; j < cy; ++j) {
    for (int i = 0; i < cx; ++i) {
      const NodeSign s = r.at(i, j);
      const bool mixed = s == NodeSign::Zero || r.at(i + 1, j) != s || r.at(i, j + 1) != s || r.at(i + 1, j + 1) != s;
      curve[index(i, j)] = mixed ? 1 : 0;
    }
  }

  Components out;
  std::vector<char> seen(curve.size(), 0);
  std::vector<std::pair<int, int>> stack;
  for (int j = 0; j < cy; ++j) {
    for (int i = 0; i < cx; ++i) {
      if (!curve[index(i, j)] || seen[index(i, j)]) continue;
      ++out.total;
      bool touches_border = false;
      seen[index(i, j)] = 1;
      stack.assign(1, {i, j});
      while (!stack.empty()) {
        const auto [a, b] = stack.back();
        stack.pop_back();
        if (a == 0 || b == 0 || a == cx - 1 || b == cy - 1) touches_border = true;
        for (int db = -1; db <= 1; ++db) {
          for (int da = -1; da <= 1; ++da) {
            const int na = a + da, nb = b + db;
            if (na < 0 || nb < 0 || na >= cx || nb >= cy) continue;
            const std::size_t k = index(na, nb);
            if (curve[k] && !seen[k]) {
              seen[k] = 1;
              stack.emplace_back(na, nb);
            }
          }
        }
      }
      if (!touches_border) ++out.bounded;
    }
  }
  return out;
}

Rational round_down(const Rational& q, long den) {
  Integer scaled = q.get_num() * den;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  return ratio(scaled, Integer(den));
}

Rational round_up(const Rational& q, long den) {
  Integer scaled = q.get_num() * den;
  mpz_cdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  return ratio(scaled, Integer(den));
}

std::pair<Rational, Rational> padded_range(const BivarPoly& h, Axis axis) {
  const auto roots = critical_values(h, axis);
  Rational lo(-1), hi(1);
  if (!roots.empty()) {
    lo = roots.front().lo;
    hi = roots.back().hi;
  }
  Rational margin = (hi - lo) / 5;
  if (sgn(margin) == 0) margin = 1;
  return {round_down(lo - margin, 1024), round_up(hi + margin, 1024)};
}

}  // namespace

int count_curve_components(const SignRaster& r) { return label_components(r).total; }

int count_bounded_components(const SignRaster& r) { return label_components(r).bounded; }

Window auto_window(const BivarPoly& h, int nx, int ny) {
  Window w;
  std::tie(w.x_lo, w.x_hi) = padded_range(h, Axis::X);
  std::tie(w.y_lo, w.y_hi) = padded_range(h, Axis::Y);
  w.nx = nx;
  w.ny = ny;
  w.validate();
  return w;
}

std::string render_svg(const SignRaster& r, const std::string& title) {
  const Window& w = r.window;
  const double x0 = w.x_lo.get_d(), x1 = w.x_hi.get_d(), y0 = w.y_lo.get_d(), y1 = w.y_hi.get_d();
  const double margin = 40.0;
  const double width = 800.0;
  const double height = std::clamp(width * (y1 - y0) / (x1 - x0), 200.0, 1600.0);
  const double sx = width / (x1 - x0), sy = height / (y1 - y0);
  auto px = [&](double x) { return margin + (x - x0) * sx; };
  auto py = [&](double y) { return margin + (y1 - y) * sy; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width + 2 * margin << "\" height=\""
      << height + 2 * margin << "\">\n";
  if (!title.empty()) out << "<title>" << title << "</title>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width + 2 * margin << "\" height=\"" << height + 2 * margin
      << "\" fill=\"white\"/>\n";

  // axes through the origin when it is in view, integer ticks
  const double span = std::max(x1 - x0, y1 - y0);
  double step = 1.0;
  while (span / step > 20.0) step *= 10.0;
  out << "<g stroke=\"#888\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n";
  const double axis_y = (y0 <= 0.0 && 0.0 <= y1) ? 0.0 : y0;
  const double axis_x = (x0 <= 0.0 && 0.0 <= x1) ? 0.0 : x0;
  out << "<line x1=\"" << px(x0) << "\" y1=\"" << py(axis_y) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(axis_y)
      << "\"/>\n";
  out << "<line x1=\"" << px(axis_x) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(axis_x) << "\" y2=\"" << py(y1)
      << "\"/>\n";
  for (double t = std::ceil(x0 / step) * step; t <= x1; t += step) {
    out << "<line x1=\"" << px(t) << "\" y1=\"" << py(axis_y) - 3 << "\" x2=\"" << px(t) << "\" y2=\""
        << py(axis_y) + 3 << "\"/>";
    out << "<text x=\"" << px(t) + 2 << "\" y=\"" << py(axis_y) + 13 << "\" stroke=\"none\">"
        << static_cast<long long>(std::llround(t)) << "</text>\n";
  }
  for (double t = std::ceil(y0 / step) * step; t <= y1; t += step) {
    out << "<line x1=\"" << px(axis_x) - 3 << "\" y1=\"" << py(t) << "\" x2=\"" << px(axis_x) + 3 << "\" y2=\""
        << py(t) << "\"/>";
    out << "<text x=\"" << px(axis_x) + 5 << "\" y=\"" << py(t) - 2 << "\" stroke=\"none\">"
        << static_cast<long long>(std::llround(t)) << "</text>\n";
  }
  out << "</g>\n";

  const double cw = (x1 - x0) / (w.nx - 1), ch = (y1 - y0) / (w.ny - 1);
  out << "<g fill=\"#c02020\" stroke=\"none\">\n";
  for (int j = 0; j + 1 < w.ny; ++j) {
    for (int i = 0; i + 1 < w.nx; ++i) {
      const NodeSign s = r.at(i, j);
      const bool mixed = s == NodeSign::Zero || r.at(i + 1, j) != s || r.at(i, j + 1) != s || r.at(i + 1, j + 1) != s;
      if (!mixed) continue;
      const double cx = x0 + i * cw, cy = y0 + (j + 1) * ch;
      out << "<rect x=\"" << px(cx) << "\" y=\"" << py(cy) << "\" width=\"" << std::max(cw * sx, 0.5)
          << "\" height=\"" << std::max(ch * sy, 0.5) << "\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void emit_svg(const SignRaster& r, const std::filesystem::path& path, const std::string& title) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
  out << render_svg(r, title);
  if (!out) throw Error(Errc::IoError, "write to " + path.string() + " failed");
}

}  // namespace hesscurve
