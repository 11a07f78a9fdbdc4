#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "konig/experiments.hpp"
#include "konig/graph.hpp"
#include "konig/oracle.hpp"

namespace konig {

enum class Execution { kSerial, kParallel };

/// Outcome of one property checked over a set of graphs. Non-gating suites
/// are measurements whose violations are reported but do not fail a run.
struct SuiteResult {
  std::string name;
  bool gating = true;
  std::size_t graphs = 0;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_counterexample;
  double seconds = 0.0;

  bool passed() const { return violations == 0; }
  friend bool operator==(const SuiteResult& a, const SuiteResult& b) {
    return a.name == b.name && a.gating == b.gating && a.graphs == b.graphs && a.cases == b.cases &&
           a.violations == b.violations && a.first_counterexample == b.first_counterexample;
  }
};

using Corpus = std::vector<BipartiteGraph>;

/// Maximum matching size equals the oracle's minimum cover size, the Kőnig
/// cover of a maximum matching is minimum, and the augmenting-path maximum
/// agrees with the largest matching found by enumeration.
std::vector<SuiteResult> suite_konig_equality(const Corpus& corpus, Execution exec);

/// Round trip cover -> reverse procedure -> Kőnig cover over every oracle
/// minimum cover. All visit orders when there are at most `exhaustive_roots`
/// roots, else the default order plus `samples` random permutations. Also
/// reports the lone-neighbour property of the produced upper matchings, the
/// Hall/saturation agreement, and how often the upper matching depends on
/// the visit order.
std::vector<SuiteResult> suite_reverse(const Corpus& corpus, Execution exec, std::size_t exhaustive_roots = 6,
                                       std::size_t samples = 5);

/// { K(m) : m any matching, K(m) minimum } equals the oracle's minimum covers.
std::vector<SuiteResult> suite_cover_surjectivity(const Corpus& corpus, Execution exec);

/// classify_matching agrees with is_minimum_cover(K(m)) on every maximal
/// matching. Also reports the same comparison for "some augmenting path
/// shrinks the cover".
std::vector<SuiteResult> suite_classification(const Corpus& corpus, Execution exec);

/// Matchings differing by a union of disjoint cycles share a Kőnig cover.
std::vector<SuiteResult> suite_cycle_fibers(const Corpus& corpus, Execution exec);

/// For maximal matchings: every matched edge has exactly one endpoint in
/// K(m), and K(m) is a minimal cover. Also measures how often K(m) is a
/// cover for non-maximal matchings.
std::vector<SuiteResult> suite_maximal_matching_covers(const Corpus& corpus, Execution exec);

/// Over (graph, maximal matching, augmenting path P) triples: localization
/// outside the path structure, cover equality under a unique root, strict
/// decrease under two free right vertices beyond the check truncation, the
/// hat truncation equivalence, the endpoint-only intersection observation,
/// meet/join symmetry, and the side of the cut vertices. Reference variants
/// are reported as non-gating.
std::vector<SuiteResult> suite_path_structure(const Corpus& corpus, Execution exec);

/// St(H) for every H: enumeratively Kőnig-Egerváry, every minimum cover of
/// H reached after restriction, and lift/restrict a bijection between the
/// minimum cover sets.
std::vector<SuiteResult> suite_star_studded(const Corpus& corpus, Execution exec);

/// Oracle self-consistency: maximal matchings are exactly the maximal
/// members of all_matchings, the subset scan and the branching search agree,
/// and Hall's condition on each side matches saturation by a maximum
/// matching.
std::vector<SuiteResult> suite_oracle_consistency(const Corpus& corpus, Execution exec);

/// Reruns each trial of cfg and checks its minimum verdict against the
/// subset oracle. Requires n_left + n_right <= 12.
SuiteResult experiment_oracle_agreement(const TrialConfig& cfg);

struct VerifyReport {
  std::size_t max_vertices = 0;
  std::size_t graphs = 0;
  std::vector<SuiteResult> suites;

  bool ok() const;
};

/// Suite groups, in run order.
const std::vector<std::string>& suite_groups();

/// Runs the named groups (all when `groups` is empty) over the corpus of
/// connected bipartite graphs up to max_vertices. The star-studded group
/// uses bases of at most min(max_vertices, 6) vertices. Throws
/// BudgetExceeded, InvalidArgument for an unknown group.
VerifyReport corpus_verify(std::size_t max_vertices, Execution exec = Execution::kParallel,
                           const std::vector<std::string>& groups = {}, const OracleBudget& budget = {});

/// Compact human-readable forms used in counterexample reports.
std::string describe(const BipartiteGraph& g);
std::string describe(const BipartiteGraph& g, const std::vector<VertexId>& vertices);

}  // namespace konig
