#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gmsel/element.hpp"
#include "gmsel/hex_mesh.hpp"

namespace gmsel {

/// Matrix-free elastodynamic operators over a HexMesh.
///
/// Element contributions are applied element-by-element; elements are grouped
/// by material so each group reduces to one dense 24xN product against a
/// cached element matrix. No global matrix is assembled.
///
/// Boundary conditions: traction-free top; Lysmer-Kuhlemeyer viscous dashpots
/// on the bottom and side faces (diagonal damping, lumped tributary areas).
/// The incident wave enters through the bottom dashpots with the usual
/// doubled-velocity forcing f = 2 rho c v_inc per unit area.
class WaveOperator {
 public:
  WaveOperator(const HexMesh& mesh, double dt, double beta, double gamma, bool absorbing);

  size_t ndof() const { return ndof_; }
  const HexMesh& mesh() const { return *mesh_; }

  /// y = (M + beta dt^2 K) x + gamma dt C x  -- the Newmark effective operator.
  void apply_effective(const std::vector<double>& x, std::vector<double>& y) const;
  /// y = K x
  void apply_stiffness(const std::vector<double>& x, std::vector<double>& y) const;
  /// y = M x
  void apply_mass(const std::vector<double>& x, std::vector<double>& y) const;

  /// Jacobi preconditioner for the effective operator.
  const std::vector<double>& effective_inv_diag() const { return eff_inv_diag_; }
  /// Jacobi preconditioner for the mass matrix (initial-acceleration solves).
  const std::vector<double>& mass_inv_diag() const { return mass_inv_diag_; }
  /// Dashpot diagonal C (zero when constructed with absorbing = false).
  const std::vector<double>& damping_diag() const { return damp_; }

  /// Nodal force for a spatially uniform incident velocity at the bottom.
  void incident_force(const std::array<double, 3>& v_inc, std::vector<double>& f) const;

  /// Discrete mechanical energy 1/2 (v' M v + u' K u).
  double energy(const std::vector<double>& u, const std::vector<double>& v) const;

 private:
  void apply_batched(const Mat24 mats[2], const std::vector<double>& x,
                     std::vector<double>& y) const;

  const HexMesh* mesh_;
  size_t ndof_ = 0;
  double gamma_dt_ = 0.0;
  Mat24 stiff_[2], mass_[2], eff_[2];
  std::vector<int32_t> dofs_;              // 24 per element
  std::vector<int32_t> group_[2];          // element indices by material
  std::vector<double> damp_;               // dashpot diagonal
  std::vector<double> eff_inv_diag_;
  std::vector<double> mass_inv_diag_;
  struct BottomNode {
    int32_t dof0;
    std::array<double, 3> coeff;  // rho * c * tributary area per component
  };
  std::vector<BottomNode> bottom_;
  mutable Eigen::Matrix<double, 24, Eigen::Dynamic> xbuf_, ybuf_;
  mutable std::vector<double> scratch_;
};

}  // namespace gmsel
