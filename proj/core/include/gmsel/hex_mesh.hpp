#pragma once

#include <cstdint>
#include <vector>

#include "gmsel/ground_model.hpp"

namespace gmsel {

/// Structured trilinear hexahedral mesh over the model box. The depth axis x3
/// points downward: node layer k = 0 is the free surface, k = ez the bottom.
/// Each element carries the material of the layer its centroid falls in
/// (0 = sediment, 1 = bedrock).
struct HexMesh {
  int ex = 0, ey = 0, ez = 0;  // element counts
  double h = 0.0;              // element edge length [m]
  MaterialLayer mat[2];
  std::vector<uint8_t> elem_mat;  // ex*ey*ez, x fastest, then y, then depth

  int nx() const { return ex + 1; }
  int ny() const { return ey + 1; }
  int nz() const { return ez + 1; }
  size_t node_count() const { return size_t(nx()) * ny() * nz(); }
  size_t elem_count() const { return size_t(ex) * ey * ez; }
  size_t dof_count() const { return 3 * node_count(); }

  size_t node_id(int i, int j, int k) const {
    return (size_t(k) * ny() + j) * nx() + i;
  }
  size_t elem_id(int i, int j, int k) const {
    return (size_t(k) * ey + j) * ex + i;
  }
  uint8_t material_of(int i, int j, int k) const { return elem_mat[elem_id(i, j, k)]; }
};

/// Build a uniform hex mesh with per-element material chosen by comparing the
/// element centroid depth against the thickness field sampled at the centroid.
/// `h` must divide all three domain extents to 1e-6 relative.
HexMesh build_mesh(const GroundModel& model, double h);

}  // namespace gmsel
