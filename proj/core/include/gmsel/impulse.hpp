#pragma once

#include <cmath>

namespace gmsel {

/// Unit Hann impulse: p(t) = 0.5 (1 - cos(2 pi t / width)) on [0, width],
/// zero elsewhere. Peaks at 1 for t = width / 2; integral is width / 2.
inline double impulse_p(double t, double width) {
  if (t < 0.0 || t > width) return 0.0;
  return 0.5 * (1.0 - std::cos(6.283185307179586476925286766559 * t / width));
}

}  // namespace gmsel
