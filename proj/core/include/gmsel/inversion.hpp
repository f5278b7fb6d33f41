#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gmsel/basis.hpp"
#include "gmsel/green_bank.hpp"
#include "gmsel/waveform.hpp"

namespace gmsel {

/// Normal system A c = b of the energy-normalized quadratic misfit
///   J(c) = sum_{k,i} w_ki * int (U^k_i(c) - obs^k_i)^2 dt,
/// with w_ki = 1 / int (obs^k_i)^2 dt. Components whose energy falls below
/// 1e-12 of the largest component are excluded (weight zero). The packed
/// unknown index is j * n_lags + l.
struct NormalSystem {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  int n_lags = 0;
  int lag_stride = 0;
  std::vector<double> energy;    // per (station, component), int obs^2 dt
  std::vector<char> counted;     // per (station, component), 0 = excluded
  double obs_const = 0.0;        // sum_ki w_ki * int obs^2 dt (= number counted)
};

/// U^k_i(t) = sum_j sum_l G^k_ij(t - l basis_dt) c[j][l], one waveform per
/// station. Lagged windows beyond the bank duration are zero-padded.
std::vector<Waveform> synthesize_response(const GreenBank& bank, const Coefficients& c,
                                          const BasisConfig& basis);

/// Assemble A and b from the bank and the observations (matching station
/// order, dt, and sample count required).
NormalSystem build_normal_system(const GreenBank& bank, const std::vector<Waveform>& obs,
                                 const BasisConfig& basis);

struct TsvdSolution {
  Coefficients coeff;
  int retained_rank = 0;
};

/// Minimum-norm least-squares solve of A c = b through the SVD pseudoinverse;
/// singular values below rel_cutoff * sigma_max are discarded.
TsvdSolution truncated_svd_solve(const NormalSystem& system, double rel_cutoff);

/// Normalized waveform misfit: mean over counted (station, component) pairs of
/// ||U - obs||_2 / ||obs||_2 (rectangle rule). Zero-energy components are
/// excluded from both the sum and the divisor.
double compute_err(const std::vector<Waveform>& u, const std::vector<Waveform>& obs);

struct EstimateResult {
  Coefficients coeff;
  double err = 0.0;            // Eq.-style normalized misfit at the solution
  double err_quadratic = 0.0;  // J(c) at the solution
  int retained_rank = 0;
};

/// build_normal_system -> truncated_svd_solve -> synthesize_response -> ERR.
EstimateResult estimate_for_model(const GreenBank& bank, const std::vector<Waveform>& obs,
                                  const BasisConfig& basis, double rel_cutoff);

/// Quadratic misfit J(c) evaluated directly (used by tests and reporting).
double quadratic_misfit(const NormalSystem& system, const Coefficients& c);

/// JSON estimate file: model id, event id, ERR, J, retained rank, c array.
void write_estimate_json(const std::filesystem::path& path, const std::string& model_id,
                         const std::string& event_id, const EstimateResult& result,
                         const BasisConfig& basis);

}  // namespace gmsel
