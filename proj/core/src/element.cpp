#include "gmsel/element.hpp"

#include <cmath>

namespace gmsel {

namespace {

struct GaussPoint {
  double n[8];        // shape values
  double grad[8][3];  // world-coordinate derivatives
};

// Evaluate shape functions and derivatives at the 8 Gauss points of a cube
// element with edge h. Jacobian is diag(h/2).
void gauss_points(double h, GaussPoint out[8]) {
  const double g = 1.0 / std::sqrt(3.0);
  int gp = 0;
  for (int kz = 0; kz < 2; ++kz) {
    for (int ky = 0; ky < 2; ++ky) {
      for (int kx = 0; kx < 2; ++kx, ++gp) {
        const double xi = kx ? g : -g, eta = ky ? g : -g, zeta = kz ? g : -g;
        for (int a = 0; a < 8; ++a) {
          const double sx = 2.0 * kHexOffset[a][0] - 1.0;
          const double sy = 2.0 * kHexOffset[a][1] - 1.0;
          const double sz = 2.0 * kHexOffset[a][2] - 1.0;
          const double fx = 1.0 + sx * xi, fy = 1.0 + sy * eta, fz = 1.0 + sz * zeta;
          out[gp].n[a] = 0.125 * fx * fy * fz;
          out[gp].grad[a][0] = 0.125 * sx * fy * fz * (2.0 / h);
          out[gp].grad[a][1] = 0.125 * fx * sy * fz * (2.0 / h);
          out[gp].grad[a][2] = 0.125 * fx * fy * sz * (2.0 / h);
        }
      }
    }
  }
}

}  // namespace

Mat24 hex_stiffness(const MaterialLayer& mat, double h) {
  GaussPoint gp[8];
  gauss_points(h, gp);
  const double lambda = mat.lambda();
  const double mu = mat.mu();
  const double wdet = h * h * h / 8.0;  // unit Gauss weights x jacobian determinant

  Mat24 k = Mat24::Zero();
  for (int p = 0; p < 8; ++p) {
    const auto& grad = gp[p].grad;
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        const double dot =
            grad[a][0] * grad[b][0] + grad[a][1] * grad[b][1] + grad[a][2] * grad[b][2];
        for (int r = 0; r < 3; ++r) {
          for (int s = 0; s < 3; ++s) {
            double v = lambda * grad[a][r] * grad[b][s] + mu * grad[a][s] * grad[b][r];
            if (r == s) v += mu * dot;
            k(3 * a + r, 3 * b + s) += wdet * v;
          }
        }
      }
    }
  }
  return k;
}

Mat24 hex_mass(const MaterialLayer& mat, double h) {
  GaussPoint gp[8];
  gauss_points(h, gp);
  const double wdet = h * h * h / 8.0;

  Mat24 m = Mat24::Zero();
  for (int p = 0; p < 8; ++p) {
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        const double v = wdet * mat.rho * gp[p].n[a] * gp[p].n[b];
        for (int r = 0; r < 3; ++r) m(3 * a + r, 3 * b + r) += v;
      }
    }
  }
  return m;
}

}  // namespace gmsel
