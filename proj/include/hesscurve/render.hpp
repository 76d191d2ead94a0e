#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hesscurve/polyring.hpp"

namespace hesscurve {

/// Rectangle [x_lo, x_hi] x [y_lo, y_hi] sampled at nx x ny grid nodes,
/// endpoints included.
struct Window {
  Rational x_lo, x_hi, y_lo, y_hi;
  int nx = 200;
  int ny = 200;

  /// Throws Error(InvalidArgument) on an empty rectangle or fewer than 2 nodes per axis.
  void validate() const;
  Rational node_x(int ix) const;
  Rational node_y(int iy) const;
};

enum class NodeSign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

/// Row-major signs; row iy = 0 is y_lo.
struct SignRaster {
  Window window;
  std::vector<NodeSign> signs;

  NodeSign at(int ix, int iy) const { return signs[static_cast<std::size_t>(iy) * window.nx + ix]; }
};

/// Node signs from a double Horner evaluation; when |h| <= 1e-9 times the
/// node's term-magnitude sum, the exact rational sign is used instead. Rows
/// are split across OpenMP threads.
SignRaster rasterize(const BivarPoly& h, const Window& w);

/// Serial reference for rasterize.
SignRaster rasterize_serial(const BivarPoly& h, const Window& w);

/// Number of 8-connected components of curve cells (cells whose four corner
/// signs are not all equal). Its fidelity depends on the resolution: a small
/// oval inside one cell is invisible and close ovals can merge.
int count_curve_components(const SignRaster& r);

/// Components of curve cells that do not touch the window border.
int count_bounded_components(const SignRaster& r);

/// Bounding box of all real critical values of h along both axes, inflated by
/// 20% on each side and rounded outward to multiples of 1/1024.
Window auto_window(const BivarPoly& h, int nx, int ny);

/// Curve cells as filled squares over integer-tick axes.
std::string render_svg(const SignRaster& r, const std::string& title = {});

/// Throws Error(IoError) when the file cannot be written.
void emit_svg(const SignRaster& r, const std::filesystem::path& path, const std::string& title = {});

}  // namespace hesscurve
