#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <vector>

namespace gmsel {

/// Sampled 3-component velocity time history. Components are stored
/// separately so inner products over one component are contiguous.
struct Waveform {
  double dt = 0.0;
  double start_time = 0.0;
  std::array<std::vector<double>, 3> comp;  // m/s, components along x1, x2, x3

  Waveform() = default;
  Waveform(double dt_, size_t n, double start = 0.0) : dt(dt_), start_time(start) {
    for (auto& c : comp) c.assign(n, 0.0);
  }

  size_t size() const { return comp[0].size(); }

  /// Sample of component `i` at step `n`; zero outside the recorded window.
  double at(int i, ptrdiff_t n) const {
    return (n < 0 || size_t(n) >= comp[i].size()) ? 0.0 : comp[i][size_t(n)];
  }
};

/// Energy of one component, rectangle rule: sum(v^2) * dt.
double component_energy(const Waveform& w, int i);

/// Relative L2 difference sqrt(sum |a-b|^2) / sqrt(sum |b|^2) over all components.
double relative_l2(const Waveform& a, const Waveform& b);

/// CSV with header `t,v1,v2,v3` (seconds, m/s).
void write_waveform_csv(const std::filesystem::path& path, const Waveform& w);
Waveform read_waveform_csv(const std::filesystem::path& path);

}  // namespace gmsel
