#include "gmsel/hex_mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gmsel {

namespace {
int checked_div(double extent, double h, const char* axis) {
  double r = extent / h;
  int n = int(std::llround(r));
  if (n < 1 || std::abs(r - n) > 1e-6 * r)
    throw std::invalid_argument(std::string("build_mesh: h does not divide the ") + axis +
                                " extent");
  return n;
}
}  // namespace

HexMesh build_mesh(const GroundModel& model, double h) {
  if (h <= 0) throw std::invalid_argument("build_mesh: h must be positive");
  HexMesh mesh;
  mesh.h = h;
  mesh.ex = checked_div(model.lx, h, "x1");
  mesh.ey = checked_div(model.ly, h, "x2");
  mesh.ez = checked_div(model.lz, h, "x3");
  mesh.mat[0] = model.layer1;
  mesh.mat[1] = model.layer2;
  mesh.elem_mat.resize(mesh.elem_count());
  for (int k = 0; k < mesh.ez; ++k) {
    const double depth = (k + 0.5) * h;
    for (int j = 0; j < mesh.ey; ++j) {
      for (int i = 0; i < mesh.ex; ++i) {
        double local = model.field.sample((i + 0.5) * h, (j + 0.5) * h);
        mesh.elem_mat[mesh.elem_id(i, j, k)] = depth < local ? 0 : 1;
      }
    }
  }
  return mesh;
}

}  // namespace gmsel
