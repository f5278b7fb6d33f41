#pragma once

#include <array>

#include "gmsel/waveform.hpp"

namespace gmsel {

/// Impulse-basis geometry for the unknown input wave: n_lags Hann pulses per
/// direction, lag stride basis_dt, each of width pulse_width.
struct BasisConfig {
  double basis_dt = 0.4;      // s, must be an integer multiple of sim_dt
  double pulse_width = 0.8;   // s
  double input_duration = 8.0;  // s
  double sim_dt = 0.002;      // s

  int n_lags() const;
  int lag_stride() const;  // basis_dt / sim_dt, whole steps
  void validate() const;
};

/// Impulse-basis amplitudes c[j][l]: input direction j, lag l.
struct Coefficients {
  int n_lags = 0;
  std::array<std::vector<double>, 3> c;

  static Coefficients zeros(int n_lags);
  size_t dim() const { return 3 * size_t(n_lags); }

  /// Packed index used by the normal system: j * n_lags + l.
  double& packed(size_t idx) { return c[idx / n_lags][idx % n_lags]; }
  double packed(size_t idx) const { return c[idx / n_lags][idx % n_lags]; }
};

/// f_j(t) = sum_l c[j][l] p(t - l basis_dt), sampled at sim_dt over the input
/// duration.
Waveform reconstruct_input(const Coefficients& c, const BasisConfig& basis);

}  // namespace gmsel
