#include "gmsel/selection.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gmsel/fsio.hpp"

namespace gmsel {

int ErrTable::event_index(const std::string& event_id) const {
  for (size_t e = 0; e < event_ids.size(); ++e)
    if (event_ids[e] == event_id) return int(e);
  return -1;
}

int ErrTable::model_index(const std::string& model_id) const {
  for (size_t m = 0; m < model_ids.size(); ++m)
    if (model_ids[m] == model_id) return int(m);
  return -1;
}

ErrTable make_err_table(const std::vector<std::string>& model_ids) {
  ErrTable t;
  t.model_ids = model_ids;
  return t;
}

void accumulate(ErrTable& table, const std::string& event_id, const std::vector<double>& errs) {
  if (errs.size() != table.model_count())
    throw std::invalid_argument("accumulate: model count mismatch");
  if (table.event_index(event_id) >= 0)
    throw std::invalid_argument("accumulate: duplicate event id " + event_id);
  table.event_ids.push_back(event_id);
  table.err.push_back(errs);
  if (table.cum_max.empty()) {
    table.cum_max.push_back(errs);
  } else {
    std::vector<double> cm = table.cum_max.back();
    for (size_t m = 0; m < errs.size(); ++m) cm[m] = std::max(cm[m], errs[m]);
    table.cum_max.push_back(std::move(cm));
  }
}

Ranking rank(const ErrTable& table, const RankCriterion& criterion) {
  if (table.event_count() == 0) throw std::invalid_argument("rank: empty table");
  int e = criterion.event < 0 ? int(table.event_count()) - 1 : criterion.event;
  if (e < 0 || e >= int(table.event_count()))
    throw std::invalid_argument("rank: requested event does not exist");
  const auto& scores =
      criterion.kind == RankCriterion::kPerEvent ? table.err[size_t(e)] : table.cum_max[size_t(e)];

  std::vector<size_t> order(table.model_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (scores[a] != scores[b]) return scores[a] < scores[b];
    return table.model_ids[a] < table.model_ids[b];
  });

  Ranking r;
  r.criterion = criterion;
  r.criterion.event = e;
  for (size_t idx : order) {
    r.model_ids.push_back(table.model_ids[idx]);
    r.scores.push_back(scores[idx]);
  }
  return r;
}

std::vector<std::string> select_credible(const ErrTable& table, const RankCriterion& criterion,
                                         int top_n, double threshold) {
  Ranking r = rank(table, criterion);
  std::vector<std::string> out;
  if (top_n > 0) {
    const size_t n = std::min(size_t(top_n), r.model_ids.size());
    out.assign(r.model_ids.begin(), r.model_ids.begin() + n);
  } else {
    for (size_t i = 0; i < r.model_ids.size(); ++i)
      if (r.scores[i] <= threshold) out.push_back(r.model_ids[i]);
  }
  return out;
}

void write_err_table_csv(const std::filesystem::path& path, const ErrTable& table) {
  std::ostringstream ss;
  ss << "model_id,event_id,err,cum_max_err\n";
  char buf[160];
  for (size_t e = 0; e < table.event_count(); ++e) {
    for (size_t m = 0; m < table.model_count(); ++m) {
      std::snprintf(buf, sizeof(buf), "%s,%s,%.17g,%.17g\n", table.model_ids[m].c_str(),
                    table.event_ids[e].c_str(), table.err[e][m], table.cum_max[e][m]);
      ss << buf;
    }
  }
  atomic_write_file(path, ss.str());
}

ErrTable read_err_table_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ERR table: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty ERR table: " + path.string());

  // rows arrive event-major; rebuild via accumulate to recheck the maxima
  std::vector<std::string> model_order;
  std::vector<std::string> event_order;
  std::map<std::string, std::map<std::string, double>> cell;  // event -> model -> err
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string model, event, err_s, cum_s;
    if (!std::getline(ss, model, ',') || !std::getline(ss, event, ',') ||
        !std::getline(ss, err_s, ',') || !std::getline(ss, cum_s))
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": malformed row");
    if (std::find(model_order.begin(), model_order.end(), model) == model_order.end())
      model_order.push_back(model);
    if (std::find(event_order.begin(), event_order.end(), event) == event_order.end())
      event_order.push_back(event);
    cell[event][model] = std::stod(err_s);
  }
  ErrTable t = make_err_table(model_order);
  for (const auto& ev : event_order) {
    std::vector<double> errs;
    errs.reserve(model_order.size());
    for (const auto& m : model_order) {
      auto it = cell[ev].find(m);
      if (it == cell[ev].end())
        throw std::runtime_error(path.string() + ": missing cell for " + m + " / " + ev);
      errs.push_back(it->second);
    }
    accumulate(t, ev, errs);
  }
  return t;
}

void write_ranking_csv(const std::filesystem::path& path, const Ranking& ranking) {
  std::ostringstream ss;
  ss << "rank,model_id,score\n";
  char buf[128];
  for (size_t i = 0; i < ranking.model_ids.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%s,%.17g\n", i + 1, ranking.model_ids[i].c_str(),
                  ranking.scores[i]);
    ss << buf;
  }
  atomic_write_file(path, ss.str());
}

}  // namespace gmsel
