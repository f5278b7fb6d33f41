#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "gmsel/hex_mesh.hpp"
#include "gmsel/simulate.hpp"

namespace gmsel {

/// Velocity Green's functions of one model: response component i at station k
/// to a unit Hann impulse injected at the bottom along direction j.
/// Samples are stored [station][dir_in][dir_out][time].
struct GreenBank {
  std::string model_id;
  std::vector<std::array<double, 2>> stations;  // surface coordinates [m]
  double dt = 0.0;
  double pulse_width = 0.0;
  int n_step = 0;
  std::vector<double> samples;

  size_t index(size_t k, int j, int i, int t) const {
    return ((k * 3 + size_t(j)) * 3 + size_t(i)) * size_t(n_step) + size_t(t);
  }
  double at(size_t k, int j, int i, int t) const { return samples[index(k, j, i, t)]; }
  const double* series(size_t k, int j, int i) const { return &samples[index(k, j, i, 0)]; }

  /// Bank files carry only the station count; coordinates live in the config.
  size_t station_count() const {
    return stations.empty() ? samples.size() / (9 * size_t(n_step)) : stations.size();
  }
};

/// Three forward runs (unit impulse along x1, x2, x3); duration must be an
/// integer multiple of cfg.dt within 1e-9 relative.
GreenBank compute_green_bank(const HexMesh& mesh, const TimeIntegratorConfig& cfg,
                             const std::vector<std::array<double, 2>>& stations,
                             double pulse_width, double duration, SimStats* stats = nullptr);

/// GBK1 binary format, little endian:
///   "GBK1"  u32 version=1  u32 n_station  u32 n_dir_in=3  u32 n_dir_out=3
///   u32 n_step  f64 dt  f64 pulse_width  then n_station*3*3*n_step f64 samples
///   in [station][dir_in][dir_out][time] order.
/// Written atomically (temp file + rename).
void write_green_bank(const std::filesystem::path& path, const GreenBank& bank);
GreenBank read_green_bank(const std::filesystem::path& path);

}  // namespace gmsel
