#pragma once

#include <cstddef>
#include <vector>

#include "konig/graph.hpp"
#include "konig/matching.hpp"

namespace konig {

/// Limits for the exponential enumerations.
///   max_vertices : graphs larger than this are refused by the subset scans
///   max_subsets  : cap on subsets scanned, search nodes visited, or
///                  results produced by any single enumeration
struct OracleBudget {
  std::size_t max_vertices = 16;
  std::size_t max_subsets = std::size_t{1} << 20;
};

/// Exact set of minimum vertex covers by a subset scan in increasing size.
/// Each cover is sorted; the list is sorted. Throws BudgetExceeded.
std::vector<VertexSet> all_minimum_covers(const BipartiteGraph& g, const OracleBudget& budget = {});

/// Same set through a bounded search tree (branch on an uncovered edge,
/// iterative deepening on the cover size). Works past max_vertices as long
/// as the minimum cover is small; search nodes count against max_subsets.
std::vector<VertexSet> minimum_covers_by_branching(const BipartiteGraph& g, const OracleBudget& budget = {});

/// Subset scan when g fits max_vertices, branching otherwise.
std::vector<VertexSet> enumerate_minimum_covers(const BipartiteGraph& g, const OracleBudget& budget = {});

/// Every matching, the empty one included, in include/exclude order over
/// the sorted edge list. Throws BudgetExceeded.
std::vector<Matching> all_matchings(const BipartiteGraph& g, const OracleBudget& budget = {});

/// Exactly the maximal matchings. Enumerated directly (a free vertex is
/// either matched to a free neighbour or left free for good) so graphs with
/// many non-maximal matchings stay cheap. Throws BudgetExceeded.
std::vector<Matching> all_maximal_matchings(const BipartiteGraph& g, const OracleBudget& budget = {});

/// Every subset W of the given side (raw side tags) has |W| <= |N(W)|.
/// Throws BudgetExceeded.
bool hall_condition(const BipartiteGraph& g, Side side, const OracleBudget& budget = {});

/// Hall's condition on an explicit vertex subset of one side.
bool hall_condition(const BipartiteGraph& g, const VertexSet& side_vertices, const OracleBudget& budget = {});

/// Connected bipartite graphs on 2..max_vertices vertices with |left| <=
/// |right|, one per side-preserving isomorphism class (canonical form: the
/// lexicographically least sorted list of right-vertex neighbourhood masks
/// over all left permutations). Deterministic order. Throws BudgetExceeded
/// when max_vertices exceeds the budget or a bipartition needs more than 20
/// edge bits.
std::vector<BipartiteGraph> connected_bipartite_corpus(std::size_t max_vertices, const OracleBudget& budget = {});

}  // namespace konig
