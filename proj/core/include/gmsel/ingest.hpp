#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmsel/waveform.hpp"

namespace gmsel {

/// One strong-motion ASCII record: `Key. Value` header lines followed by
/// whitespace-separated integer counts.
struct StrongMotionRecord {
  std::string station_code;
  std::string origin_time;
  double sampling_rate_hz = 0.0;
  double scale_numerator = 0.0;  // physical units per...
  double scale_denominator = 1.0;  // ...this many counts
  std::string scale_unit;  // e.g. "gal"
  std::string direction;   // e.g. "N-S", "E-W", "U-D"
  std::vector<int64_t> counts;

  /// counts * (numerator / denominator), converted to m/s^2 at this boundary
  /// (gal and cm/s/s multiply by 0.01).
  std::vector<double> to_acceleration() const;
};

/// Parse one record. Mandatory headers: Origin Time, Station Code,
/// Sampling Freq(Hz), Scale Factor, Dir. Errors carry the offending line
/// number. Trailing blank lines are tolerated.
StrongMotionRecord parse_strong_motion_ascii(const std::string& text);

/// Regenerate the ASCII form (used for round-trip checks).
std::string serialize_strong_motion_ascii(const StrongMotionRecord& rec);

/// Zero-phase low-pass: 4th-order Butterworth applied forward then backward.
/// DC gain is exactly 1; fc must be below Nyquist.
Waveform lowpass(const Waveform& w, double fc_hz);

/// Linear interpolation onto a new sample interval; endpoints clamped.
Waveform resample(const Waveform& w, double new_dt);

/// Trapezoidal integration of acceleration to velocity, zero initial value.
/// A linear trend is removed from the input first unless detrend is false.
Waveform integrate_accel_to_vel(const Waveform& w, bool detrend = true);

/// Single-component helper used when assembling 3-component waveforms from
/// per-direction files.
std::vector<double> lowpass_series(const std::vector<double>& x, double dt, double fc_hz);

}  // namespace gmsel
