#include "konig/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "konig/error.hpp"
#include "konig/konig.hpp"

namespace konig {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Standard distributions are implementation-defined; these two keep output
// identical across standard libraries.
bool bernoulli(std::mt19937_64& rng, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

TrialReport summarize(const TrialConfig& cfg, std::vector<TrialRecord> records) {
  TrialReport report;
  report.config = cfg;
  report.trials_run = records.size();
  std::map<std::size_t, SizeRow> rows;
  std::size_t excess = 0;
  for (const TrialRecord& r : records) {
    SizeRow& row = rows[r.min_cover_size];
    row.min_cover_size = r.min_cover_size;
    ++row.trials;
    row.total_excess += r.cover_size - r.min_cover_size;
    excess += r.cover_size - r.min_cover_size;
    if (r.is_minimum) {
      ++report.minimum_hits;
      ++row.minimum_hits;
    }
  }
  report.mean_cover_excess = records.empty() ? 0.0 : static_cast<double>(excess) / records.size();
  for (const auto& [size, row] : rows) report.by_min_cover_size.push_back(row);
  report.records = std::move(records);
  return report;
}

}  // namespace

void TrialConfig::validate() const {
  if (trials == 0) throw Error(ErrorKind::kInvalidArgument, "trials must be positive");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "edge probability must lie in [0, 1]");
  }
  if (n_left + n_right > std::numeric_limits<VertexId>::max() / 2) {
    throw Error(ErrorKind::kInvalidArgument, "graph too large");
  }
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::size_t trial_index) {
  return std::mt19937_64(splitmix64(seed + trial_index));
}

BipartiteGraph random_bipartite(const TrialConfig& cfg, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < cfg.n_left; ++i) {
    for (std::size_t j = 0; j < cfg.n_right; ++j) {
      if (bernoulli(rng, cfg.edge_probability)) edges.emplace_back(i, j);
    }
  }
  return build_graph(cfg.n_left, cfg.n_right, edges);
}

Matching random_maximal_matching(const BipartiteGraph& g, std::mt19937_64& rng) {
  std::vector<Edge> order(g.edges().begin(), g.edges().end());
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  return greedy_maximal_matching(g, order);
}

TrialRecord run_trial(const TrialConfig& cfg, std::size_t trial_index) {
  auto rng = trial_engine(cfg.rng_seed, trial_index);
  const BipartiteGraph g = random_bipartite(cfg, rng);
  const Matching m = random_maximal_matching(g, rng);
  TrialRecord r;
  r.trial_index = trial_index;
  r.matching_size = m.size();
  r.cover_size = konig_cover(g, m).size();
  r.min_cover_size = maximum_matching(g, m).size();
  r.is_minimum = r.cover_size == r.min_cover_size;
  return r;
}

TrialReport run_trials_serial(const TrialConfig& cfg) {
  cfg.validate();
  std::vector<TrialRecord> records(cfg.trials);
  for (std::size_t i = 0; i < cfg.trials; ++i) records[i] = run_trial(cfg, i);
  return summarize(cfg, std::move(records));
}

TrialReport run_trials(const TrialConfig& cfg) {
  cfg.validate();
  std::vector<TrialRecord> records(cfg.trials);
  const auto count = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) records[i] = run_trial(cfg, static_cast<std::size_t>(i));
  return summarize(cfg, std::move(records));
}

void write_trials_csv(std::ostream& out, const TrialReport& report, bool header) {
  if (header) out << "seed,n_left,n_right,p,trial_index,matching_size,cover_size,min_cover_size,is_minimum\n";
  const TrialConfig& c = report.config;
  for (const TrialRecord& r : report.records) {
    out << c.rng_seed << ',' << c.n_left << ',' << c.n_right << ',' << c.edge_probability << ',' << r.trial_index
        << ',' << r.matching_size << ',' << r.cover_size << ',' << r.min_cover_size << ','
        << (r.is_minimum ? "true" : "false") << '\n';
  }
}

}  // namespace konig
