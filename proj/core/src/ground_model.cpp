#include "gmsel/ground_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "gmsel/fsio.hpp"

namespace gmsel {

bool MaterialLayer::valid() const {
  return vs > 0.0 && rho > 0.0 && vp > vs * std::sqrt(2.0);
}

void GroundModel::validate() const {
  if (!layer1.valid() || !layer2.valid())
    throw std::invalid_argument("GroundModel " + id + ": invalid material layer");
  if (lx <= 0 || ly <= 0 || lz <= 0)
    throw std::invalid_argument("GroundModel " + id + ": non-positive domain extent");
  if (field.values.empty()) throw std::invalid_argument("GroundModel " + id + ": empty field");
  for (double v : field.values) {
    if (!(v >= 0.0)) throw std::invalid_argument("GroundModel " + id + ": negative thickness");
    if (!(v < lz)) throw std::invalid_argument("GroundModel " + id + ": thickness reaches bottom");
  }
}

std::string model_id(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "model%06d", index);
  return buf;
}

CandidateSet generate_candidate_set(const std::vector<SurveyPoint>& survey,
                                    const std::vector<int>& m_list,
                                    const std::vector<double>& q_list, int smooth_iters,
                                    const GridSpec& grid, const MaterialLayer& layer1,
                                    const MaterialLayer& layer2, double lx, double ly, double lz) {
  if (m_list.empty() || q_list.empty())
    throw std::invalid_argument("generate_candidate_set: empty parameter list");
  CandidateSet set;
  set.models.reserve(m_list.size() * q_list.size());
  int index = 0;
  for (int m : m_list) {
    for (double q : q_list) {
      GroundModel gm;
      gm.id = model_id(index);
      gm.field = laplace_smooth(idw_thickness(survey, m, q, grid), smooth_iters);
      gm.layer1 = layer1;
      gm.layer2 = layer2;
      gm.lx = lx;
      gm.ly = ly;
      gm.lz = lz;
      set.models.push_back(std::move(gm));
      set.provenance.push_back({m, q, smooth_iters});
      ++index;
    }
  }
  return set;
}

double model_distance(const GroundModel& a, const GroundModel& b) {
  if (!(a.field.grid == b.field.grid))
    throw std::invalid_argument("model_distance: grid mismatch");
  double acc = 0.0;
  const size_t n = a.field.values.size();
  for (size_t i = 0; i < n; ++i) {
    double d = a.field.values[i] - b.field.values[i];
    acc += d * d;
  }
  return std::sqrt(acc / double(n));
}

CandidateSet select_diverse_subset(const CandidateSet& set, int baseline_m, double baseline_q,
                                   int count) {
  const int n = int(set.size());
  if (count > n) throw std::invalid_argument("select_diverse_subset: count exceeds pool size");
  if (count < 1) throw std::invalid_argument("select_diverse_subset: count must be >= 1");

  int seed = -1;
  const double q_tol = 1e-9 * std::max(1.0, std::abs(baseline_q));
  for (int i = 0; i < n; ++i) {
    if (set.provenance[i].m_nearest == baseline_m &&
        std::abs(set.provenance[i].q - baseline_q) <= q_tol) {
      seed = i;
      break;
    }
  }
  if (seed < 0) throw std::invalid_argument("select_diverse_subset: baseline (M, q) not in pool");

  std::vector<int> picked{seed};
  std::vector<char> used(n, 0);
  used[seed] = 1;
  // min distance from each pool model to the selected set, updated incrementally
  std::vector<double> min_dist(n, std::numeric_limits<double>::infinity());
  int last = seed;
  while (int(picked.size()) < count) {
    int best = -1;
    double best_d = -1.0;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      double d = model_distance(set.models[i], set.models[last]);
      if (d < min_dist[i]) min_dist[i] = d;
      if (min_dist[i] > best_d) {
        best_d = min_dist[i];
        best = i;
      }
    }
    picked.push_back(best);
    used[best] = 1;
    last = best;
  }

  CandidateSet out;
  out.models.reserve(picked.size());
  for (size_t k = 0; k < picked.size(); ++k) {
    GroundModel gm = set.models[picked[k]];
    gm.id = model_id(int(k));
    out.models.push_back(std::move(gm));
    out.provenance.push_back(set.provenance[picked[k]]);
  }
  return out;
}

void write_model_json(const std::filesystem::path& path, const GroundModel& model,
                      const Provenance& prov) {
  nlohmann::json j;
  j["id"] = model.id;
  j["m_nearest"] = prov.m_nearest;
  j["q"] = prov.q;
  j["smooth_iters"] = prov.smooth_iters;
  j["grid"] = {{"nx", model.field.grid.nx},
               {"ny", model.field.grid.ny},
               {"dx", model.field.grid.dx},
               {"dy", model.field.grid.dy}};
  j["domain"] = {model.lx, model.ly, model.lz};
  j["layer1"] = {{"vp", model.layer1.vp}, {"vs", model.layer1.vs}, {"rho", model.layer1.rho}};
  j["layer2"] = {{"vp", model.layer2.vp}, {"vs", model.layer2.vs}, {"rho", model.layer2.rho}};
  j["thickness"] = model.field.values;  // row-major, x fastest
  atomic_write_file(path, j.dump(1));
}

GroundModel read_model_json(const std::filesystem::path& path, Provenance* prov) {
  nlohmann::json j = nlohmann::json::parse(read_text_file(path));
  GroundModel gm;
  gm.id = j.at("id").get<std::string>();
  GridSpec g;
  g.nx = j.at("grid").at("nx").get<int>();
  g.ny = j.at("grid").at("ny").get<int>();
  g.dx = j.at("grid").at("dx").get<double>();
  g.dy = j.at("grid").at("dy").get<double>();
  gm.field.grid = g;
  gm.field.values = j.at("thickness").get<std::vector<double>>();
  if (gm.field.values.size() != size_t(g.nx) * g.ny)
    throw std::runtime_error(path.string() + ": thickness array size mismatch");
  auto dom = j.at("domain");
  gm.lx = dom.at(0).get<double>();
  gm.ly = dom.at(1).get<double>();
  gm.lz = dom.at(2).get<double>();
  auto mat = [](const nlohmann::json& m) {
    return MaterialLayer{m.at("vp").get<double>(), m.at("vs").get<double>(),
                         m.at("rho").get<double>()};
  };
  gm.layer1 = mat(j.at("layer1"));
  gm.layer2 = mat(j.at("layer2"));
  if (prov) {
    prov->m_nearest = j.at("m_nearest").get<int>();
    prov->q = j.at("q").get<double>();
    prov->smooth_iters = j.at("smooth_iters").get<int>();
  }
  gm.validate();
  return gm;
}

}  // namespace gmsel
