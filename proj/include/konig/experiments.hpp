#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "konig/graph.hpp"
#include "konig/matching.hpp"

namespace konig {

struct TrialConfig {
  std::size_t n_left = 0;
  std::size_t n_right = 0;
  double edge_probability = 0.0;
  std::size_t trials = 0;
  std::uint64_t rng_seed = 0;

  /// Throws InvalidArgument.
  void validate() const;
};

struct TrialRecord {
  std::size_t trial_index = 0;
  std::size_t matching_size = 0;
  std::size_t cover_size = 0;
  std::size_t min_cover_size = 0;
  bool is_minimum = false;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Hit counts grouped by minimum cover size.
struct SizeRow {
  std::size_t min_cover_size = 0;
  std::size_t trials = 0;
  std::size_t minimum_hits = 0;
  std::size_t total_excess = 0;

  friend bool operator==(const SizeRow&, const SizeRow&) = default;
};

struct TrialReport {
  TrialConfig config;
  std::size_t trials_run = 0;
  std::size_t minimum_hits = 0;
  double mean_cover_excess = 0.0;
  std::vector<SizeRow> by_min_cover_size;
  std::vector<TrialRecord> records;

  double hit_rate() const { return trials_run == 0 ? 0.0 : static_cast<double>(minimum_hits) / trials_run; }
};

/// Independent stream for one trial: splitmix64(seed + index) seeds the engine.
std::mt19937_64 trial_engine(std::uint64_t seed, std::size_t trial_index);

/// Each (left, right) pair becomes an edge independently with the
/// configured probability.
BipartiteGraph random_bipartite(const TrialConfig& cfg, std::mt19937_64& rng);

/// Greedy maximal matching over a uniformly shuffled edge order.
Matching random_maximal_matching(const BipartiteGraph& g, std::mt19937_64& rng);

/// One trial: graph, matching, Kőnig cover and its size against the
/// maximum matching size.
TrialRecord run_trial(const TrialConfig& cfg, std::size_t trial_index);

TrialReport run_trials_serial(const TrialConfig& cfg);

/// Same report as run_trials_serial; trials are spread over OpenMP threads.
TrialReport run_trials(const TrialConfig& cfg);

void write_trials_csv(std::ostream& out, const TrialReport& report, bool header = true);

}  // namespace konig
