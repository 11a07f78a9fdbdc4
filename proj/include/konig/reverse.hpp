#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "konig/graph.hpp"
#include "konig/konig.hpp"
#include "konig/matching.hpp"

namespace konig {

/// The two halves of a graph cut along a minimum vertex cover C.
///
///   up   is induced by (V ∩ C) ∪ (U \ C)
///   down is induced by (U ∩ C) ∪ (V \ C)
///
/// Edges with both endpoints in C form the cut between them. Sides are the
/// per-component designations of the parent graph.
struct CoverSplit {
  Subgraph up;
  Subgraph down;
  std::vector<Edge> cut_edges;  // parent ids

  bool in_up(VertexId parent) const { return up.local_of(parent).has_value(); }
};

/// Throws NotMinimumCover unless `cover` is a minimum vertex cover of g.
CoverSplit split_by_cover(const BipartiteGraph& g, const VertexSet& cover);

/// A matching of g, supported on split.down, saturating every vertex of
/// U ∩ C. Throws SaturationImpossible when none exists (the cover was not
/// minimum).
Matching saturating_matching_down(const BipartiteGraph& g, const CoverSplit& split, const VertexSet& cover);

/// The reverse procedure on split.up. Roots are visited in `visit_order`
/// (a permutation of U \ C); from an unsaturated root each unsaturated up-
/// neighbour v is matched with its first unsaturated up-neighbour w other
/// than the root, and the search recurses from w. Returns a matching of g
/// supported on split.up.
Matching reverse_procedure_up(const BipartiteGraph& g, const CoverSplit& split, const VertexSet& cover,
                              const std::vector<VertexId>& visit_order);

struct ReverseResult {
  Matching m_up;
  Matching m_down;
  Matching combined;
  std::vector<VertexId> visit_order;
};

/// U \ C in ascending id order (the default visit order).
std::vector<VertexId> default_visit_order(const BipartiteGraph& g, const VertexSet& cover);

/// Recovers a matching whose Kőnig cover is `cover`. Disconnected graphs are
/// handled per component. The round trip is checked before returning;
/// a mismatch raises RoundTripFailed.
ReverseResult reverse_konig(const BipartiteGraph& g, const VertexSet& cover,
                            std::optional<std::vector<VertexId>> visit_order = std::nullopt);

/// Adjacent pairs (u, v) of split.up left unsaturated by m_up where v has an
/// up-neighbour other than u.
std::vector<std::pair<VertexId, VertexId>> lone_neighbour_violations(const BipartiteGraph& g,
                                                                     const CoverSplit& split,
                                                                     const Matching& m_up);

}  // namespace konig
