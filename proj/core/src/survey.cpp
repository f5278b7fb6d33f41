#include "gmsel/survey.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gmsel/fsio.hpp"

namespace gmsel {

namespace {
constexpr double kCoincidentDist = 1e-9;  // below this a node adopts the survey value
}

ThicknessField idw_thickness(const std::vector<SurveyPoint>& survey, int m_nearest, double q,
                             const GridSpec& grid) {
  if (survey.empty()) throw std::invalid_argument("idw_thickness: empty survey list");
  if (m_nearest < 1) throw std::invalid_argument("idw_thickness: M must be >= 1");
  if (m_nearest > int(survey.size()))
    throw std::invalid_argument("idw_thickness: M exceeds number of survey points");
  if (q <= 0) throw std::invalid_argument("idw_thickness: q must be positive");

  ThicknessField out(grid);
  const int m = m_nearest;
  std::vector<std::pair<double, int>> dist(survey.size());  // (distance, index)

  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double x = ix * grid.dx, y = iy * grid.dy;
      for (size_t i = 0; i < survey.size(); ++i) {
        double dx = x - survey[i].x1, dy = y - survey[i].x2;
        dist[i] = {std::sqrt(dx * dx + dy * dy), int(i)};
      }
      std::partial_sort(dist.begin(), dist.begin() + m, dist.end());

      double num = 0.0, den = 0.0;
      bool coincident = false;
      for (int k = 0; k < m && !coincident; ++k) {
        const auto& [d, idx] = dist[k];
        if (d < kCoincidentDist) {
          out.at(ix, iy) = survey[idx].thickness;
          coincident = true;
          break;
        }
        double w = 1.0 / std::pow(d, q);
        num += survey[idx].thickness * w;
        den += w;
      }
      if (!coincident) out.at(ix, iy) = num / den;
    }
  }
  return out;
}

std::vector<SurveyPoint> read_survey_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open survey file: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty survey file: " + path.string());
  std::vector<SurveyPoint> pts;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    SurveyPoint p;
    char c1, c2;
    std::istringstream ss(line);
    if (!(ss >> p.x1 >> c1 >> p.x2 >> c2 >> p.thickness) || c1 != ',' || c2 != ',')
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": malformed survey row");
    pts.push_back(p);
  }
  return pts;
}

void write_survey_csv(const std::filesystem::path& path, const std::vector<SurveyPoint>& survey) {
  std::ostringstream ss;
  ss << "x1,x2,thickness\n";
  char buf[96];
  for (const auto& p : survey) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", p.x1, p.x2, p.thickness);
    ss << buf;
  }
  atomic_write_file(path, ss.str());
}

}  // namespace gmsel
