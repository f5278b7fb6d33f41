#include "gmsel/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmsel {

double ThicknessField::sample(double x, double y) const {
  const auto& g = grid;
  double fx = x / g.dx;
  double fy = y / g.dy;
  fx = std::clamp(fx, 0.0, double(g.nx - 1));
  fy = std::clamp(fy, 0.0, double(g.ny - 1));
  int ix = std::min(int(fx), g.nx - 2);
  int iy = std::min(int(fy), g.ny - 2);
  if (g.nx == 1) ix = 0;
  if (g.ny == 1) iy = 0;
  double tx = g.nx == 1 ? 0.0 : fx - ix;
  double ty = g.ny == 1 ? 0.0 : fy - iy;
  int ix1 = std::min(ix + 1, g.nx - 1);
  int iy1 = std::min(iy + 1, g.ny - 1);
  double v00 = at(ix, iy), v10 = at(ix1, iy), v01 = at(ix, iy1), v11 = at(ix1, iy1);
  return (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v10 + (1 - tx) * ty * v01 + tx * ty * v11;
}

double ThicknessField::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

double ThicknessField::max_value() const {
  return *std::max_element(values.begin(), values.end());
}

namespace {
// Mirror an out-of-range index about the boundary node.
inline int reflect(int i, int n) {
  if (n == 1) return 0;
  if (i < 0) return -i;
  if (i >= n) return 2 * (n - 1) - i;
  return i;
}
}  // namespace

ThicknessField laplace_smooth(const ThicknessField& field, int iters) {
  if (iters < 0) throw std::invalid_argument("laplace_smooth: iters must be >= 0");
  ThicknessField cur = field;
  if (iters == 0) return cur;
  ThicknessField next(field.grid);
  const int nx = field.grid.nx, ny = field.grid.ny;
  for (int pass = 0; pass < iters; ++pass) {
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        double s = cur.at(ix, iy)
                 + cur.at(reflect(ix - 1, nx), iy)
                 + cur.at(reflect(ix + 1, nx), iy)
                 + cur.at(ix, reflect(iy - 1, ny))
                 + cur.at(ix, reflect(iy + 1, ny));
        next.at(ix, iy) = s / 5.0;
      }
    }
    std::swap(cur.values, next.values);
  }
  return cur;
}

double reference_thickness_at(const ChannelSpec& spec, const GridSpec& grid, double x, double y) {
  const double two_pi = 6.283185307179586476925286766559;
  double center = 0.5 * grid.extent_y()
                + spec.meander_amplitude * std::sin(two_pi * x / spec.meander_period);
  double d = y - center;
  double w = spec.channel_width;
  return spec.base_thickness + spec.channel_depth * std::exp(-0.5 * (d * d) / (w * w));
}

ThicknessField synth_reference_field(const ChannelSpec& spec, const GridSpec& grid) {
  if (spec.channel_width <= 0 || spec.meander_period <= 0)
    throw std::invalid_argument("synth_reference_field: width and period must be positive");
  ThicknessField f(grid);
  for (int iy = 0; iy < grid.ny; ++iy)
    for (int ix = 0; ix < grid.nx; ++ix)
      f.at(ix, iy) = reference_thickness_at(spec, grid, ix * grid.dx, iy * grid.dy);
  return f;
}

}  // namespace gmsel
