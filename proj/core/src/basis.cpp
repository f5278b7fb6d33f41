#include "gmsel/basis.hpp"

#include <cmath>
#include <stdexcept>

#include "gmsel/impulse.hpp"

namespace gmsel {

int BasisConfig::n_lags() const {
  return int(std::ceil(input_duration / basis_dt - 1e-9));
}

int BasisConfig::lag_stride() const {
  return int(std::llround(basis_dt / sim_dt));
}

void BasisConfig::validate() const {
  if (!(sim_dt > 0.0) || !(basis_dt > 0.0) || !(pulse_width > 0.0) || !(input_duration > 0.0))
    throw std::invalid_argument("BasisConfig: all durations must be positive");
  const double ratio = basis_dt / sim_dt;
  if (std::abs(ratio - std::llround(ratio)) > 1e-9 * ratio)
    throw std::invalid_argument("BasisConfig: basis_dt must be an integer multiple of sim_dt");
  if (n_lags() < 1) throw std::invalid_argument("BasisConfig: at least one lag required");
}

Coefficients Coefficients::zeros(int n_lags) {
  Coefficients out;
  out.n_lags = n_lags;
  for (auto& v : out.c) v.assign(size_t(n_lags), 0.0);
  return out;
}

Waveform reconstruct_input(const Coefficients& c, const BasisConfig& basis) {
  basis.validate();
  if (c.n_lags != basis.n_lags())
    throw std::invalid_argument("reconstruct_input: coefficient/basis lag mismatch");
  const size_t n = size_t(std::llround(basis.input_duration / basis.sim_dt));
  Waveform w(basis.sim_dt, n);
  for (int j = 0; j < 3; ++j) {
    for (int l = 0; l < c.n_lags; ++l) {
      const double amp = c.c[j][size_t(l)];
      if (amp == 0.0) continue;
      const double t0 = l * basis.basis_dt;
      // pulse support is [t0, t0 + width]
      const ptrdiff_t first = ptrdiff_t(std::floor(t0 / basis.sim_dt));
      const ptrdiff_t last =
          std::min<ptrdiff_t>(ptrdiff_t(n) - 1,
                              ptrdiff_t(std::ceil((t0 + basis.pulse_width) / basis.sim_dt)));
      for (ptrdiff_t s = std::max<ptrdiff_t>(first, 0); s <= last; ++s)
        w.comp[j][size_t(s)] += amp * impulse_p(s * basis.sim_dt - t0, basis.pulse_width);
    }
  }
  return w;
}

}  // namespace gmsel
