#pragma once

#include <filesystem>
#include <vector>

#include "gmsel/grid.hpp"

namespace gmsel {

/// One borehole-style measurement of sediment thickness at a surface location.
struct SurveyPoint {
  double x1 = 0.0;        // m
  double x2 = 0.0;        // m
  double thickness = 0.0; // m, >= 0
};

/// Inverse-distance-weighted interpolation of survey thickness onto a grid.
///
/// At each node the M nearest survey points are combined with weights 1/d^q.
/// A node closer than 1e-9 m to a survey point takes that point's value
/// exactly. Output at a node always lies within the [min, max] range of the
/// contributing samples, and M == 1 reduces to nearest-neighbor.
ThicknessField idw_thickness(const std::vector<SurveyPoint>& survey, int m_nearest, double q,
                             const GridSpec& grid);

/// CSV with header `x1,x2,thickness`, one point per row, SI units.
std::vector<SurveyPoint> read_survey_csv(const std::filesystem::path& path);
void write_survey_csv(const std::filesystem::path& path, const std::vector<SurveyPoint>& survey);

}  // namespace gmsel
