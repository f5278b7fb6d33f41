#pragma once

#include <cstddef>
#include <vector>

namespace gmsel {

/// Regular surface grid: nx*ny nodes spaced (dx, dy), node (0,0) at the origin.
struct GridSpec {
  int nx = 0;
  int ny = 0;
  double dx = 0.0;
  double dy = 0.0;

  double extent_x() const { return (nx - 1) * dx; }
  double extent_y() const { return (ny - 1) * dy; }
  bool operator==(const GridSpec&) const = default;
};

/// Gridded sediment-layer thickness z(x1, x2) in meters.
/// values are stored row-major with x fastest: values[iy * nx + ix].
struct ThicknessField {
  GridSpec grid;
  std::vector<double> values;

  ThicknessField() = default;
  explicit ThicknessField(const GridSpec& g) : grid(g), values(size_t(g.nx) * g.ny, 0.0) {}

  double& at(int ix, int iy) { return values[size_t(iy) * grid.nx + ix]; }
  double at(int ix, int iy) const { return values[size_t(iy) * grid.nx + ix]; }

  /// Bilinear interpolation; coordinates are clamped to the grid rectangle.
  double sample(double x, double y) const;

  double min_value() const;
  double max_value() const;
};

/// Five-point averaging pass (self + 4 axis neighbors, weights 1/5 each) applied
/// `iters` times. Out-of-range neighbors are mirrored about the boundary node.
/// iters == 0 returns the input unchanged.
ThicknessField laplace_smooth(const ThicknessField& field, int iters);

/// Synthetic reference interface: a meandering channel incised into a uniform
/// sediment sheet. The channel cross-section is Gaussian and its centerline
/// follows a sinusoid along x1.
struct ChannelSpec {
  double base_thickness = 30.0;    // sheet thickness away from the channel [m]
  double channel_depth = 30.0;     // extra thickness at the channel axis [m]
  double channel_width = 80.0;     // Gaussian sigma of the cross-section [m]
  double meander_period = 400.0;   // sinusoid period along x1 [m]
  double meander_amplitude = 100.0;  // lateral swing of the centerline [m]
};

ThicknessField synth_reference_field(const ChannelSpec& spec, const GridSpec& grid);

/// Closed-form value of the reference interface at a point.
double reference_thickness_at(const ChannelSpec& spec, const GridSpec& grid, double x, double y);

}  // namespace gmsel
