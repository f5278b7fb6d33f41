#include "gmsel/wave_operator.hpp"

#include <algorithm>
#include <cstring>

namespace gmsel {

WaveOperator::WaveOperator(const HexMesh& mesh, double dt, double beta, double gamma,
                           bool absorbing)
    : mesh_(&mesh), ndof_(mesh.dof_count()), gamma_dt_(gamma * dt) {
  for (int m = 0; m < 2; ++m) {
    stiff_[m] = hex_stiffness(mesh.mat[m], mesh.h);
    mass_[m] = hex_mass(mesh.mat[m], mesh.h);
    eff_[m] = mass_[m] + beta * dt * dt * stiff_[m];
  }

  // Element dof lists and material groups.
  const size_t ne = mesh.elem_count();
  dofs_.resize(24 * ne);
  for (int k = 0; k < mesh.ez; ++k) {
    for (int j = 0; j < mesh.ey; ++j) {
      for (int i = 0; i < mesh.ex; ++i) {
        const size_t e = mesh.elem_id(i, j, k);
        for (int a = 0; a < 8; ++a) {
          const size_t nid =
              mesh.node_id(i + kHexOffset[a][0], j + kHexOffset[a][1], k + kHexOffset[a][2]);
          for (int r = 0; r < 3; ++r) dofs_[24 * e + 3 * a + r] = int32_t(3 * nid + r);
        }
        group_[mesh.elem_mat[e]].push_back(int32_t(e));
      }
    }
  }
  size_t max_group = std::max(group_[0].size(), group_[1].size());
  xbuf_.resize(24, max_group);
  ybuf_.resize(24, max_group);
  scratch_.resize(ndof_);

  // Dashpot diagonal and bottom-injection coefficients. Tributary area h^2/4
  // per face node; impedance rho*vp normal to the face, rho*vs tangential.
  damp_.assign(ndof_, 0.0);
  std::vector<std::array<double, 3>> bottom_coeff(mesh.node_count(), {0.0, 0.0, 0.0});
  const double face_area = mesh.h * mesh.h / 4.0;
  auto add_face = [&](std::vector<double>& target, size_t nid, const MaterialLayer& m,
                      int normal_comp) {
    for (int r = 0; r < 3; ++r) {
      const double c = r == normal_comp ? m.vp : m.vs;
      target[3 * nid + r] += m.rho * c * face_area;
    }
  };

  if (absorbing) {
    // bottom (normal x3)
    for (int j = 0; j < mesh.ey; ++j) {
      for (int i = 0; i < mesh.ex; ++i) {
        const MaterialLayer& m = mesh.mat[mesh.material_of(i, j, mesh.ez - 1)];
        for (int b = 0; b < 4; ++b) {
          const size_t nid = mesh.node_id(i + (b & 1), j + (b >> 1), mesh.ez);
          add_face(damp_, nid, m, 2);
          for (int r = 0; r < 3; ++r)
            bottom_coeff[nid][r] += m.rho * (r == 2 ? m.vp : m.vs) * face_area;
        }
      }
    }
    // sides (normals x1 and x2)
    for (int k = 0; k < mesh.ez; ++k) {
      for (int j = 0; j < mesh.ey; ++j) {
        for (int b = 0; b < 4; ++b) {
          const int jj = j + (b & 1), kk = k + (b >> 1);
          add_face(damp_, mesh.node_id(0, jj, kk), mesh.mat[mesh.material_of(0, j, k)], 0);
          add_face(damp_, mesh.node_id(mesh.ex, jj, kk),
                   mesh.mat[mesh.material_of(mesh.ex - 1, j, k)], 0);
        }
      }
      for (int i = 0; i < mesh.ex; ++i) {
        for (int b = 0; b < 4; ++b) {
          const int ii = i + (b & 1), kk = k + (b >> 1);
          add_face(damp_, mesh.node_id(ii, 0, kk), mesh.mat[mesh.material_of(i, 0, k)], 1);
          add_face(damp_, mesh.node_id(ii, mesh.ey, kk),
                   mesh.mat[mesh.material_of(i, mesh.ey - 1, k)], 1);
        }
      }
    }
    for (size_t nid = 0; nid < mesh.node_count(); ++nid) {
      if (bottom_coeff[nid][0] != 0.0 || bottom_coeff[nid][2] != 0.0)
        bottom_.push_back({int32_t(3 * nid), bottom_coeff[nid]});
    }
  }

  // Jacobi diagonals.
  eff_inv_diag_.assign(ndof_, 0.0);
  mass_inv_diag_.assign(ndof_, 0.0);
  for (size_t e = 0; e < ne; ++e) {
    const int m = mesh.elem_mat[e];
    for (int l = 0; l < 24; ++l) {
      eff_inv_diag_[dofs_[24 * e + l]] += eff_[m](l, l);
      mass_inv_diag_[dofs_[24 * e + l]] += mass_[m](l, l);
    }
  }
  for (size_t i = 0; i < ndof_; ++i) {
    eff_inv_diag_[i] = 1.0 / (eff_inv_diag_[i] + gamma_dt_ * damp_[i]);
    mass_inv_diag_[i] = 1.0 / mass_inv_diag_[i];
  }
}

void WaveOperator::apply_batched(const Mat24 mats[2], const std::vector<double>& x,
                                 std::vector<double>& y) const {
  y.assign(ndof_, 0.0);
  for (int m = 0; m < 2; ++m) {
    const auto& group = group_[m];
    if (group.empty()) continue;
    const Eigen::Index n = Eigen::Index(group.size());
    for (Eigen::Index c = 0; c < n; ++c) {
      const int32_t* d = &dofs_[24 * size_t(group[c])];
      double* col = xbuf_.col(c).data();
      for (int l = 0; l < 24; ++l) col[l] = x[d[l]];
    }
    ybuf_.leftCols(n).noalias() = mats[m] * xbuf_.leftCols(n);
    for (Eigen::Index c = 0; c < n; ++c) {
      const int32_t* d = &dofs_[24 * size_t(group[c])];
      const double* col = ybuf_.col(c).data();
      for (int l = 0; l < 24; ++l) y[d[l]] += col[l];
    }
  }
}

void WaveOperator::apply_effective(const std::vector<double>& x, std::vector<double>& y) const {
  apply_batched(eff_, x, y);
  if (gamma_dt_ != 0.0) {
    for (size_t i = 0; i < ndof_; ++i) y[i] += gamma_dt_ * damp_[i] * x[i];
  }
}

void WaveOperator::apply_stiffness(const std::vector<double>& x, std::vector<double>& y) const {
  apply_batched(stiff_, x, y);
}

void WaveOperator::apply_mass(const std::vector<double>& x, std::vector<double>& y) const {
  apply_batched(mass_, x, y);
}

void WaveOperator::incident_force(const std::array<double, 3>& v_inc,
                                  std::vector<double>& f) const {
  std::fill(f.begin(), f.end(), 0.0);
  for (const auto& bn : bottom_) {
    for (int r = 0; r < 3; ++r) f[bn.dof0 + r] = 2.0 * bn.coeff[r] * v_inc[r];
  }
}

double WaveOperator::energy(const std::vector<double>& u, const std::vector<double>& v) const {
  double e = 0.0;
  apply_mass(v, scratch_);
  for (size_t i = 0; i < ndof_; ++i) e += v[i] * scratch_[i];
  apply_stiffness(u, scratch_);
  for (size_t i = 0; i < ndof_; ++i) e += u[i] * scratch_[i];
  return 0.5 * e;
}

}  // namespace gmsel
