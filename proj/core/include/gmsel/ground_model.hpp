#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gmsel/grid.hpp"
#include "gmsel/survey.hpp"

namespace gmsel {

/// Isotropic linear-elastic layer properties.
struct MaterialLayer {
  double vp = 0.0;   // m/s
  double vs = 0.0;   // m/s
  double rho = 0.0;  // kg/m^3

  double mu() const { return rho * vs * vs; }
  double lambda() const { return rho * (vp * vp - 2.0 * vs * vs); }

  /// vs > 0, rho > 0, vp > vs*sqrt(2) so that lambda > 0.
  bool valid() const;
};

/// Two-layer ground model over a box domain: a sediment sheet of laterally
/// varying thickness (layer1) over bedrock (layer2). The free surface is flat.
struct GroundModel {
  std::string id;
  ThicknessField field;
  MaterialLayer layer1;  // sediment
  MaterialLayer layer2;  // bedrock
  double lx = 0.0, ly = 0.0, lz = 0.0;  // domain extents [m]

  void validate() const;  // throws std::invalid_argument on violated invariants
};

struct Provenance {
  int m_nearest = 0;
  double q = 0.0;
  int smooth_iters = 0;
};

/// Ordered pool of candidate models with per-model generation parameters.
struct CandidateSet {
  std::vector<GroundModel> models;
  std::vector<Provenance> provenance;

  size_t size() const { return models.size(); }
};

/// Format a sequential model id ("model000018").
std::string model_id(int index);

/// One model per (M, q) pair, M-major then q, each IDW field smoothed
/// `smooth_iters` times. Ids are assigned in generation order.
CandidateSet generate_candidate_set(const std::vector<SurveyPoint>& survey,
                                    const std::vector<int>& m_list,
                                    const std::vector<double>& q_list, int smooth_iters,
                                    const GridSpec& grid, const MaterialLayer& layer1,
                                    const MaterialLayer& layer2, double lx, double ly, double lz);

/// Root-mean-square of node-wise thickness differences [m]. Requires equal grids.
double model_distance(const GroundModel& a, const GroundModel& b);

/// Greedy farthest-point subset of `count` models seeded with the model whose
/// provenance matches (baseline_m, baseline_q). Each added model maximizes its
/// minimum distance to the already-selected ones; ties break to the lower
/// generation index. Models in the result are re-labelled sequentially in
/// selection order.
CandidateSet select_diverse_subset(const CandidateSet& set, int baseline_m, double baseline_q,
                                   int count);

/// JSON model file; thickness is a row-major flattened array (x fastest) and
/// round-trips bit-exactly for finite doubles.
void write_model_json(const std::filesystem::path& path, const GroundModel& model,
                      const Provenance& prov);
GroundModel read_model_json(const std::filesystem::path& path, Provenance* prov = nullptr);

}  // namespace gmsel
