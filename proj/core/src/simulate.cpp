#include "gmsel/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gmsel {

void TimeIntegratorConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("TimeIntegratorConfig: dt must be positive");
  if (steps < 1) throw std::invalid_argument("TimeIntegratorConfig: steps must be >= 1");
  if (!(cg_tol > 0.0 && cg_tol < 1.0))
    throw std::invalid_argument("TimeIntegratorConfig: cg_tol must be in (0, 1)");
  if (cg_max_iter < 1) throw std::invalid_argument("TimeIntegratorConfig: cg_max_iter >= 1");
  if (!(beta > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("TimeIntegratorConfig: beta and gamma must be positive");
}

Simulator::Simulator(const HexMesh& mesh, const TimeIntegratorConfig& cfg, bool absorbing)
    : cfg_(cfg), op_(mesh, cfg.dt, cfg.beta, cfg.gamma, absorbing) {
  cfg_.validate();
  const size_t n = op_.ndof();
  u_.assign(n, 0.0);
  v_.assign(n, 0.0);
  a_.assign(n, 0.0);
  rhs_.assign(n, 0.0);
  tmp_.assign(n, 0.0);
  force_.assign(n, 0.0);
}

void Simulator::solve_initial_acceleration(const std::array<double, 3>& v_inc0) {
  // M a0 = f0 - C v0 - K u0
  op_.incident_force(v_inc0, force_);
  op_.apply_stiffness(u_, tmp_);
  const auto& damp = op_.damping_diag();
  double norm = 0.0;
  for (size_t i = 0; i < rhs_.size(); ++i) {
    rhs_[i] = force_[i] - damp[i] * v_[i] - tmp_[i];
    norm += rhs_[i] * rhs_[i];
  }
  std::fill(a_.begin(), a_.end(), 0.0);
  if (norm == 0.0) return;
  auto apply = [this](const std::vector<double>& x, std::vector<double>& y) {
    op_.apply_mass(x, y);
  };
  cg_solve(apply, rhs_, a_, &op_.mass_inv_diag(), cfg_.cg_tol, cfg_.cg_max_iter, &ws_);
}

void Simulator::set_state(const std::vector<double>& u0, const std::vector<double>& v0) {
  if (u0.size() != u_.size() || v0.size() != v_.size())
    throw std::invalid_argument("Simulator::set_state: size mismatch");
  u_ = u0;
  v_ = v0;
  hist_count_ = 0;
  n_ = 0;
  solve_initial_acceleration({0.0, 0.0, 0.0});
}

void Simulator::step(const std::array<double, 3>& v_inc_next) {
  const double dt = cfg_.dt;
  const double b = cfg_.beta, g = cfg_.gamma;

  // rhs = f(t+dt) - C (v + dt (1-g) a) - K (u + dt v + dt^2 (1/2-b) a)
  op_.incident_force(v_inc_next, force_);
  for (size_t i = 0; i < u_.size(); ++i)
    tmp_[i] = u_[i] + dt * v_[i] + dt * dt * (0.5 - b) * a_[i];
  op_.apply_stiffness(tmp_, rhs_);
  const auto& damp = op_.damping_diag();
  for (size_t i = 0; i < rhs_.size(); ++i)
    rhs_[i] = force_[i] - damp[i] * (v_[i] + dt * (1.0 - g) * a_[i]) - rhs_[i];

  // Warm start: extrapolate the acceleration from up to three previous steps.
  if (anew_.size() != u_.size()) anew_.resize(u_.size());
  std::vector<double>& anew = anew_;
  if (hist_count_ >= 3) {
    for (size_t i = 0; i < anew.size(); ++i)
      anew[i] = 4.0 * a_[i] - 6.0 * a_hist_[0][i] + 4.0 * a_hist_[1][i] - a_hist_[2][i];
  } else if (hist_count_ == 2) {
    for (size_t i = 0; i < anew.size(); ++i)
      anew[i] = 3.0 * a_[i] - 3.0 * a_hist_[0][i] + a_hist_[1][i];
  } else if (hist_count_ == 1) {
    for (size_t i = 0; i < anew.size(); ++i) anew[i] = 2.0 * a_[i] - a_hist_[0][i];
  } else {
    anew = a_;
  }

  auto apply = [this](const std::vector<double>& x, std::vector<double>& y) {
    op_.apply_effective(x, y);
  };
  CgResult res;
  try {
    res = cg_solve(apply, rhs_, anew, &op_.effective_inv_diag(), cfg_.cg_tol, cfg_.cg_max_iter,
                   &ws_);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error("step " + std::to_string(n_ + 1) + ": " + e.what());
  }
  stats_.total_cg_iterations += res.iterations;
  stats_.max_cg_iterations = std::max(stats_.max_cg_iterations, res.iterations);
  stats_.max_rel_residual = std::max(stats_.max_rel_residual, res.rel_residual);

  for (size_t i = 0; i < u_.size(); ++i) {
    u_[i] += dt * v_[i] + dt * dt * ((0.5 - b) * a_[i] + b * anew[i]);
    v_[i] += dt * ((1.0 - g) * a_[i] + g * anew[i]);
  }

  // rotate acceleration history, recycling the oldest buffer
  if (hist_count_ < 3) ++hist_count_;
  std::vector<double> spare = std::move(a_hist_[2]);
  a_hist_[2] = std::move(a_hist_[1]);
  a_hist_[1] = std::move(a_hist_[0]);
  a_hist_[0] = std::move(a_);
  a_ = std::move(anew_);
  anew_ = std::move(spare);
  ++n_;
}

size_t station_node(const HexMesh& mesh, double x1, double x2) {
  const double fi = x1 / mesh.h, fj = x2 / mesh.h;
  const int i = int(std::llround(fi)), j = int(std::llround(fj));
  if (i < 0 || i > mesh.ex || j < 0 || j > mesh.ey || x1 < -mesh.h || x2 < -mesh.h ||
      x1 > (mesh.ex + 1) * mesh.h || x2 > (mesh.ey + 1) * mesh.h)
    throw std::invalid_argument("station (" + std::to_string(x1) + ", " + std::to_string(x2) +
                                ") lies outside the surface rectangle");
  return mesh.node_id(i, j, 0);
}

std::vector<Waveform> run_forward(const HexMesh& mesh, const TimeIntegratorConfig& cfg,
                                  const Waveform& input,
                                  const std::vector<std::array<double, 2>>& stations,
                                  SimStats* stats) {
  cfg.validate();
  if (std::abs(input.dt - cfg.dt) > 1e-12 * cfg.dt)
    throw std::invalid_argument("run_forward: input.dt must equal the simulation dt");

  std::vector<size_t> nodes;
  nodes.reserve(stations.size());
  for (const auto& s : stations) nodes.push_back(station_node(mesh, s[0], s[1]));

  Simulator sim(mesh, cfg, /*absorbing=*/true);
  sim.solve_initial_acceleration({input.at(0, 0), input.at(1, 0), input.at(2, 0)});

  std::vector<Waveform> out(stations.size(), Waveform(cfg.dt, size_t(cfg.steps)));
  auto record = [&](int n) {
    const auto& v = sim.velocity();
    for (size_t k = 0; k < nodes.size(); ++k)
      for (int r = 0; r < 3; ++r) out[k].comp[r][size_t(n)] = v[3 * nodes[k] + r];
  };
  record(0);
  for (int n = 1; n < cfg.steps; ++n) {
    sim.step({input.at(0, n), input.at(1, n), input.at(2, n)});
    record(n);
  }
  if (stats) *stats = sim.stats();
  return out;
}

}  // namespace gmsel
