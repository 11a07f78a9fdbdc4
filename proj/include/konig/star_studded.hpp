#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "konig/graph.hpp"
#include "konig/konig.hpp"
#include "konig/oracle.hpp"

namespace konig {

/// H with a three-leaf star hung off every vertex. The star of base vertex
/// x is {center, leaf, leaf, leaf}: the center is adjacent to x and lies on
/// the opposite side, the leaves hang off the center on x's side.
struct StarStuddedGraph {
  BipartiteGraph base;
  BipartiteGraph full;
  std::vector<std::array<VertexId, 4>> attachment;  // base id -> (center, l1, l2, l3)

  bool is_base_vertex(VertexId v) const { return v < base.vertex_count(); }
};

/// Base ids are kept; star vertices follow in base-vertex order. Throws
/// EmptyGraph when either side of h is empty.
StarStuddedGraph star_stud(const BipartiteGraph& h);

/// c plus every star center. Throws NotMinimumCover.
VertexSet lift_cover(const StarStuddedGraph& ssg, const VertexSet& c);

/// c restricted to the base vertices. Throws NotMinimumCover.
VertexSet restrict_cover(const StarStuddedGraph& ssg, const VertexSet& c);

/// Every minimum cover arises as the Kőnig cover of some maximal matching.
/// Throws BudgetExceeded.
bool is_enumeratively_konig_egervary(const BipartiteGraph& g, const OracleBudget& budget = {});

}  // namespace konig
