#include "gmsel/waveform.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gmsel/fsio.hpp"

namespace gmsel {

double component_energy(const Waveform& w, int i) {
  double acc = 0.0;
  for (double v : w.comp[i]) acc += v * v;
  return acc * w.dt;
}

double relative_l2(const Waveform& a, const Waveform& b) {
  if (a.size() != b.size()) throw std::invalid_argument("relative_l2: length mismatch");
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (size_t n = 0; n < a.size(); ++n) {
      double d = a.comp[i][n] - b.comp[i][n];
      num += d * d;
      den += b.comp[i][n] * b.comp[i][n];
    }
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

void write_waveform_csv(const std::filesystem::path& path, const Waveform& w) {
  std::ostringstream ss;
  ss << "t,v1,v2,v3\n";
  char buf[160];
  for (size_t n = 0; n < w.size(); ++n) {
    double t = w.start_time + double(n) * w.dt;
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", t, w.comp[0][n], w.comp[1][n],
                  w.comp[2][n]);
    ss << buf;
  }
  atomic_write_file(path, ss.str());
}

Waveform read_waveform_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open waveform file: " + path.string());
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty waveform file: " + path.string());
  Waveform w;
  std::vector<double> times;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    double t, v1, v2, v3;
    char c1, c2, c3;
    std::istringstream ss(line);
    if (!(ss >> t >> c1 >> v1 >> c2 >> v2 >> c3 >> v3) || c1 != ',' || c2 != ',' || c3 != ',')
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": malformed waveform row");
    times.push_back(t);
    w.comp[0].push_back(v1);
    w.comp[1].push_back(v2);
    w.comp[2].push_back(v3);
  }
  if (times.empty()) throw std::runtime_error("waveform file has no samples: " + path.string());
  w.start_time = times.front();
  w.dt = times.size() > 1 ? (times.back() - times.front()) / double(times.size() - 1) : 1.0;
  return w;
}

}  // namespace gmsel
