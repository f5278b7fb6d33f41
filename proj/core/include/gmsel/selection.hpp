#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace gmsel {

/// (model x event) misfit matrix with running per-model maxima. Events are
/// ordered by occurrence; the cumulative maximum along the event axis is the
/// stability criterion used for selection.
struct ErrTable {
  std::vector<std::string> model_ids;
  std::vector<std::string> event_ids;
  // err[e][m] and cum_max[e][m], event-major
  std::vector<std::vector<double>> err;
  std::vector<std::vector<double>> cum_max;

  size_t model_count() const { return model_ids.size(); }
  size_t event_count() const { return event_ids.size(); }
  int event_index(const std::string& event_id) const;
  int model_index(const std::string& model_id) const;
};

ErrTable make_err_table(const std::vector<std::string>& model_ids);

/// Append one event column and update the cumulative maxima.
/// `errs` must be ordered like table.model_ids. Duplicate event ids are errors.
void accumulate(ErrTable& table, const std::string& event_id, const std::vector<double>& errs);

struct RankCriterion {
  enum Kind { kPerEvent, kCumulativeMax } kind = kCumulativeMax;
  // event to evaluate at; -1 means the latest
  int event = -1;
};

struct Ranking {
  std::vector<std::string> model_ids;  // ascending score
  std::vector<double> scores;
  RankCriterion criterion;
};

/// Ascending sort by score, ties broken by model id.
Ranking rank(const ErrTable& table, const RankCriterion& criterion);

/// Top-n prefix of rank() when top_n > 0, otherwise every model with
/// score <= threshold (may be empty).
std::vector<std::string> select_credible(const ErrTable& table, const RankCriterion& criterion,
                                         int top_n, double threshold);

/// CSV `model_id,event_id,err,cum_max_err`, event-major row order.
void write_err_table_csv(const std::filesystem::path& path, const ErrTable& table);
ErrTable read_err_table_csv(const std::filesystem::path& path);

/// CSV `rank,model_id,score`.
void write_ranking_csv(const std::filesystem::path& path, const Ranking& ranking);

}  // namespace gmsel
