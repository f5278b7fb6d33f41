#pragma once

#include <Eigen/Dense>

#include "gmsel/ground_model.hpp"

namespace gmsel {

using Mat24 = Eigen::Matrix<double, 24, 24>;

/// Local corner order of the trilinear hexahedron; offsets in (i, j, k).
inline constexpr int kHexOffset[8][3] = {
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
    {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
};

/// Consistent stiffness of a cube element of edge h, isotropic material,
/// 2x2x2 Gauss quadrature (exact for trilinear shape functions).
/// Local dof ordering is 3*a + component.
Mat24 hex_stiffness(const MaterialLayer& mat, double h);

/// Consistent mass of the same element.
Mat24 hex_mass(const MaterialLayer& mat, double h);

}  // namespace gmsel
