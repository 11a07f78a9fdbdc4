#pragma once

#include "konig/graph.hpp"
#include "konig/matching.hpp"

namespace konig {

/// Vertices reachable by alternating paths from the unsaturated vertices of
/// the designated left side, the roots included.
struct ZSet {
  VertexSet vertices;
};

struct CoverVerdict {
  bool is_cover = false;
  bool is_minimal = false;
  bool is_minimum = false;

  friend bool operator==(const CoverVerdict&, const CoverVerdict&) = default;
};

/// A vertex set claimed to cover the graph. is_cover is evaluated by an edge
/// scan when the value is produced; minimality and minimality-in-size are
/// evaluated on demand through verdict().
struct VertexCover {
  VertexSet vertices;
  bool is_cover = false;

  CoverVerdict verdict(const BipartiteGraph& g) const;
  std::size_t size() const noexcept { return vertices.size(); }
};

/// Closure computation; the left side is chosen per connected component
/// (see BipartiteGraph::component_side). Throws ForeignMatching.
ZSet z_set(const BipartiteGraph& g, const Matching& m);

/// (U \ Z) ∪ (V ∩ Z), evaluated per connected component. Accepts any
/// matching, maximal or not; the returned is_cover reflects what holds.
VertexCover konig_cover(const BipartiteGraph& g, const Matching& m);

bool is_vertex_cover(const BipartiteGraph& g, const VertexSet& s);

/// No vertex of s can be dropped: no r in s with N(r) ⊆ s. Throws NotACover.
bool is_minimal_cover(const BipartiteGraph& g, const VertexSet& s);

/// s covers g and |s| equals the maximum matching size.
bool is_minimum_cover(const BipartiteGraph& g, const VertexSet& s);

/// Same test with a precomputed maximum matching size, for sweeps.
bool is_minimum_cover(const BipartiteGraph& g, const VertexSet& s, std::size_t maximum_matching_size);

}  // namespace konig
