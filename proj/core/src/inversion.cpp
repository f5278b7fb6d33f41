#include "gmsel/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "gmsel/fsio.hpp"

namespace gmsel {

namespace {
constexpr double kEnergyFloorRel = 1e-12;

// Per-(station, component) energies and the exclusion mask shared by the
// normal system and ERR so that both see exactly the same quadrature.
struct EnergyMask {
  std::vector<double> energy;
  std::vector<char> counted;
  int n_counted = 0;
};

EnergyMask component_energies(const std::vector<Waveform>& obs) {
  EnergyMask em;
  em.energy.reserve(obs.size() * 3);
  double max_e = 0.0;
  for (const auto& w : obs) {
    for (int i = 0; i < 3; ++i) {
      double acc = 0.0;
      for (double v : w.comp[i]) acc += v * v;
      acc *= w.dt;
      em.energy.push_back(acc);
      max_e = std::max(max_e, acc);
    }
  }
  em.counted.assign(em.energy.size(), 0);
  if (max_e <= 0.0) return em;
  for (size_t c = 0; c < em.energy.size(); ++c) {
    if (em.energy[c] >= kEnergyFloorRel * max_e) {
      em.counted[c] = 1;
      ++em.n_counted;
    }
  }
  return em;
}
}  // namespace

std::vector<Waveform> synthesize_response(const GreenBank& bank, const Coefficients& c,
                                          const BasisConfig& basis) {
  basis.validate();
  if (c.n_lags != basis.n_lags())
    throw std::invalid_argument("synthesize_response: coefficient/basis lag mismatch");
  if (std::abs(bank.dt - basis.sim_dt) > 1e-12 * basis.sim_dt)
    throw std::invalid_argument("synthesize_response: bank dt != basis sim_dt");
  const int n = bank.n_step;
  const int stride = basis.lag_stride();
  const size_t n_sta = bank.station_count();

  std::vector<Waveform> out(n_sta, Waveform(bank.dt, size_t(n)));
  for (size_t k = 0; k < n_sta; ++k) {
    for (int i = 0; i < 3; ++i) {
      double* u = out[k].comp[i].data();
      for (int j = 0; j < 3; ++j) {
        const double* g = bank.series(k, j, i);
        for (int l = 0; l < c.n_lags; ++l) {
          const double amp = c.c[j][size_t(l)];
          if (amp == 0.0) continue;
          const int shift = l * stride;
          for (int t = shift; t < n; ++t) u[t] += amp * g[t - shift];
        }
      }
    }
  }
  return out;
}

NormalSystem build_normal_system(const GreenBank& bank, const std::vector<Waveform>& obs,
                                 const BasisConfig& basis) {
  basis.validate();
  const size_t n_sta = bank.station_count();
  if (obs.size() != n_sta)
    throw std::invalid_argument("build_normal_system: station count mismatch");
  const int n = bank.n_step;
  for (const auto& w : obs) {
    if (int(w.size()) != n)
      throw std::invalid_argument("build_normal_system: observation length mismatch");
    if (std::abs(w.dt - bank.dt) > 1e-12 * bank.dt)
      throw std::invalid_argument("build_normal_system: observation dt mismatch");
  }
  const int L = basis.n_lags();
  const int stride = basis.lag_stride();
  const int dim = 3 * L;
  const double dt = bank.dt;

  EnergyMask em = component_energies(obs);
  if (em.n_counted == 0)
    throw std::invalid_argument("build_normal_system: all components below the energy floor");

  NormalSystem sys;
  sys.n_lags = L;
  sys.lag_stride = stride;
  sys.energy = em.energy;
  sys.counted = em.counted;
  sys.obs_const = double(em.n_counted);
  sys.a = Eigen::MatrixXd::Zero(dim, dim);
  sys.b = Eigen::VectorXd::Zero(dim);

  std::vector<double> prefix(size_t(n) + 1);

  for (size_t k = 0; k < n_sta; ++k) {
    for (int i = 0; i < 3; ++i) {
      const size_t ci = k * 3 + size_t(i);
      if (!em.counted[ci]) continue;
      const double w = dt / em.energy[ci];

      // Gram blocks via shifted-product prefix sums. For l >= l',
      //   sum_t G_ij(t - l s) G_ij'(t - l' s) = P[n - l s],
      // with P[m] = sum_{tau < m} G_ij(tau) G_ij'(tau + (l - l') s).
      for (int j = 0; j < 3; ++j) {
        const double* gj = bank.series(k, j, i);
        for (int jp = 0; jp < 3; ++jp) {
          const double* gp = bank.series(k, jp, i);
          for (int d = 0; d < L; ++d) {
            if (d == 0 && jp < j) continue;  // unordered at equal lags
            const int off = d * stride;
            prefix[0] = 0.0;
            for (int m = 0; m < n; ++m) {
              const double g2 = (m + off < n) ? gp[m + off] : 0.0;
              prefix[size_t(m) + 1] = prefix[size_t(m)] + gj[m] * g2;
            }
            for (int lp = 0; lp + d < L; ++lp) {
              const int l = lp + d;
              const int m = std::max(0, n - l * stride);
              const double val = w * prefix[size_t(m)];
              const int row = j * L + l, col = jp * L + lp;
              sys.a(row, col) += val;
              if (row != col) sys.a(col, row) += val;
            }
          }
        }
      }

      const double* o = obs[k].comp[i].data();
      for (int j = 0; j < 3; ++j) {
        const double* gj = bank.series(k, j, i);
        for (int l = 0; l < L; ++l) {
          const int shift = l * stride;
          double acc = 0.0;
          for (int t = shift; t < n; ++t) acc += gj[t - shift] * o[t];
          sys.b(j * L + l) += w * acc;
        }
      }
    }
  }
  return sys;
}

TsvdSolution truncated_svd_solve(const NormalSystem& system, double rel_cutoff) {
  if (!(rel_cutoff >= 0.0 && rel_cutoff < 1.0))
    throw std::invalid_argument("truncated_svd_solve: rel_cutoff must be in [0, 1)");
  const int dim = int(system.a.rows());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system.a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) <= 0.0)
    throw std::invalid_argument("truncated_svd_solve: A is all-zero");
  const double floor = rel_cutoff * sigma(0);

  Eigen::VectorXd ub = svd.matrixU().transpose() * system.b;
  Eigen::VectorXd y = Eigen::VectorXd::Zero(dim);
  int rank = 0;
  for (int r = 0; r < sigma.size(); ++r) {
    if (sigma(r) >= floor && sigma(r) > 0.0) {
      y(r) = ub(r) / sigma(r);
      ++rank;
    }
  }
  Eigen::VectorXd x = svd.matrixV() * y;

  TsvdSolution sol;
  sol.retained_rank = rank;
  sol.coeff = Coefficients::zeros(system.n_lags);
  for (int idx = 0; idx < dim; ++idx) sol.coeff.packed(size_t(idx)) = x(idx);
  return sol;
}

double compute_err(const std::vector<Waveform>& u, const std::vector<Waveform>& obs) {
  if (u.size() != obs.size()) throw std::invalid_argument("compute_err: station count mismatch");
  if (obs.empty()) throw std::invalid_argument("compute_err: no observations");
  EnergyMask em = component_energies(obs);
  if (em.n_counted == 0)
    throw std::invalid_argument("compute_err: zero-energy observations in all components");

  double sum = 0.0;
  for (size_t k = 0; k < obs.size(); ++k) {
    if (u[k].size() != obs[k].size())
      throw std::invalid_argument("compute_err: sample count mismatch");
    for (int i = 0; i < 3; ++i) {
      const size_t ci = k * 3 + size_t(i);
      if (!em.counted[ci]) continue;
      double acc = 0.0;
      const auto& uc = u[k].comp[i];
      const auto& oc = obs[k].comp[i];
      for (size_t t = 0; t < oc.size(); ++t) {
        const double d = uc[t] - oc[t];
        acc += d * d;
      }
      acc *= obs[k].dt;
      sum += std::sqrt(acc) / std::sqrt(em.energy[ci]);
    }
  }
  return sum / double(em.n_counted);
}

double quadratic_misfit(const NormalSystem& system, const Coefficients& c) {
  const int dim = int(system.a.rows());
  Eigen::VectorXd x(dim);
  for (int idx = 0; idx < dim; ++idx) x(idx) = c.packed(size_t(idx));
  return x.dot(system.a * x) - 2.0 * system.b.dot(x) + system.obs_const;
}

EstimateResult estimate_for_model(const GreenBank& bank, const std::vector<Waveform>& obs,
                                  const BasisConfig& basis, double rel_cutoff) {
  NormalSystem sys = build_normal_system(bank, obs, basis);
  TsvdSolution sol = truncated_svd_solve(sys, rel_cutoff);
  std::vector<Waveform> u = synthesize_response(bank, sol.coeff, basis);
  EstimateResult res;
  res.coeff = std::move(sol.coeff);
  res.retained_rank = sol.retained_rank;
  res.err = compute_err(u, obs);
  res.err_quadratic = quadratic_misfit(sys, res.coeff);
  return res;
}

void write_estimate_json(const std::filesystem::path& path, const std::string& model_id,
                         const std::string& event_id, const EstimateResult& result,
                         const BasisConfig& basis) {
  nlohmann::json j;
  j["model_id"] = model_id;
  j["event_id"] = event_id;
  j["err"] = result.err;
  j["err_quadratic"] = result.err_quadratic;
  j["retained_rank"] = result.retained_rank;
  j["n_lags"] = result.coeff.n_lags;
  j["basis_dt"] = basis.basis_dt;
  j["pulse_width"] = basis.pulse_width;
  j["c"] = {result.coeff.c[0], result.coeff.c[1], result.coeff.c[2]};
  atomic_write_file(path, j.dump(1));
}

}  // namespace gmsel
