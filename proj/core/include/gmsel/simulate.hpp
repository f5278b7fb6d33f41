#pragma once

#include <array>
#include <memory>
#include <vector>

#include "gmsel/cg.hpp"
#include "gmsel/hex_mesh.hpp"
#include "gmsel/wave_operator.hpp"
#include "gmsel/waveform.hpp"

namespace gmsel {

struct TimeIntegratorConfig {
  double dt = 0.002;       // s
  int steps = 4000;        // recorded samples; steps - 1 time advances
  double beta = 0.25;      // Newmark beta (1/4: unconditionally stable)
  double gamma = 0.5;      // Newmark gamma
  double cg_tol = 1e-6;    // relative residual per step
  int cg_max_iter = 500;

  void validate() const;
};

struct SimStats {
  long total_cg_iterations = 0;
  int max_cg_iterations = 0;
  double max_rel_residual = 0.0;  // worst accepted relative residual
};

/// Newmark-beta time stepper over a WaveOperator. Owns its state exclusively;
/// the mesh is shared immutable input. Each step solves the effective system
/// with Jacobi-preconditioned CG, warm-started from extrapolated acceleration.
class Simulator {
 public:
  Simulator(const HexMesh& mesh, const TimeIntegratorConfig& cfg, bool absorbing = true);

  /// Impose an initial state (free-vibration tests). Solves M a0 = -K u0 - C v0.
  void set_state(const std::vector<double>& u0, const std::vector<double>& v0);

  /// Advance one step with the given incident bottom velocity at t_{n+1}.
  void step(const std::array<double, 3>& v_inc_next);

  const std::vector<double>& displacement() const { return u_; }
  const std::vector<double>& velocity() const { return v_; }
  const std::vector<double>& acceleration() const { return a_; }
  double energy() const { return op_.energy(u_, v_); }
  const WaveOperator& op() const { return op_; }
  const SimStats& stats() const { return stats_; }
  int step_index() const { return n_; }

 private:
  TimeIntegratorConfig cfg_;
  WaveOperator op_;
  std::vector<double> u_, v_, a_, anew_;
  std::vector<double> a_hist_[3];  // previous accelerations, most recent first
  int hist_count_ = 0;
  std::vector<double> rhs_, tmp_, force_;
  CgWorkspace ws_;
  SimStats stats_;
  int n_ = 0;

  void solve_initial_acceleration(const std::array<double, 3>& v_inc0);
  friend std::vector<Waveform> run_forward(const HexMesh&, const TimeIntegratorConfig&,
                                           const Waveform&,
                                           const std::vector<std::array<double, 2>>&, SimStats*);
};

/// Surface station to nearest-surface-node dof mapping. Throws if the station
/// lies outside the surface rectangle.
size_t station_node(const HexMesh& mesh, double x1, double x2);

/// Forward-simulate a bottom-injected 3-component velocity input and return
/// surface velocity time histories at the stations (cfg.steps samples each,
/// sample 0 at t = 0). input.dt must equal cfg.dt.
std::vector<Waveform> run_forward(const HexMesh& mesh, const TimeIntegratorConfig& cfg,
                                  const Waveform& input,
                                  const std::vector<std::array<double, 2>>& stations,
                                  SimStats* stats = nullptr);

}  // namespace gmsel
