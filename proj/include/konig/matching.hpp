#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "konig/graph.hpp"

namespace konig {

/// A set of pairwise vertex-disjoint edges of one host graph.
///
/// Stores the mate of every vertex; the host is identified by its uid, and
/// every operation taking (graph, matching) rejects a matching built for a
/// different graph with ForeignMatching.
class Matching {
 public:
  Matching() = default;
  explicit Matching(const BipartiteGraph& g);

  /// Validates membership (ForeignMatching) and disjointness (InvalidMatching).
  static Matching from_edges(const BipartiteGraph& g, std::span<const Edge> edges);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t vertex_count() const noexcept { return mate_.size(); }

  VertexId mate(VertexId v) const { return mate_.at(v); }
  bool saturated(VertexId v) const { return mate_.at(v) != kNoVertex; }
  bool contains(Edge e) const;

  /// Sorted edge list.
  std::vector<Edge> edges() const;

  std::uint64_t graph_uid() const noexcept { return graph_uid_; }
  bool belongs_to(const BipartiteGraph& g) const noexcept {
    return graph_uid_ == g.uid() && mate_.size() == g.vertex_count();
  }

  /// Adds an edge of the host graph whose endpoints are both free.
  void insert(const BipartiteGraph& g, Edge e);
  void erase(Edge e);

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.graph_uid_ == b.graph_uid_ && a.mate_ == b.mate_;
  }

 private:
  std::vector<VertexId> mate_;
  std::vector<Side> sides_;
  std::size_t size_ = 0;
  std::uint64_t graph_uid_ = 0;
};

/// Throws ForeignMatching unless m was built for g.
void require_host(const BipartiteGraph& g, const Matching& m);

/// A simple path whose edges alternate between non-matching and matching
/// edges. `augmenting` holds exactly when the vertex count is even and both
/// endpoints are unsaturated.
struct AlternatingPath {
  std::vector<VertexId> vertices;
  bool augmenting = false;

  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  std::size_t size() const noexcept { return vertices.size(); }
  std::vector<Edge> edges(const BipartiteGraph& g) const;

  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

/// Validates the alternating-path invariants against (g, m) and fills in the
/// augmenting flag. Throws InvalidPath.
AlternatingPath make_alternating_path(const BipartiteGraph& g, const Matching& m,
                                      std::vector<VertexId> vertices);

/// Scans `edge_order` and keeps every edge whose endpoints are both still
/// free. The order must be a permutation of g's edges (InvalidArgument).
Matching greedy_maximal_matching(const BipartiteGraph& g, std::span<const Edge> edge_order);

bool is_maximal(const BipartiteGraph& g, const Matching& m);

/// Breadth-first search for an augmenting path starting at the free vertex
/// `from`: non-matching edges are followed out of from's side, matching edges
/// out of the other side, and the first free vertex on the far side ends the
/// search. Throws SaturatedStart.
std::optional<AlternatingPath> find_augmenting_path(const BipartiteGraph& g, const Matching& m,
                                                    VertexId from);

/// m with the edges of p flipped (m symmetric-difference p).
Matching augment(const BipartiteGraph& g, const Matching& m, const AlternatingPath& p);

/// Grows `seed` to maximum cardinality by augmenting from the free left
/// vertices in ascending id order until none admits an augmenting path.
Matching maximum_matching(const BipartiteGraph& g, const Matching& seed);
Matching maximum_matching(const BipartiteGraph& g);

std::vector<Edge> symmetric_difference(const Matching& a, const Matching& b);

/// True when every vertex touched by `edges` has degree exactly two inside
/// `edges` (vacuously true for the empty set).
bool is_disjoint_cycle_union(const BipartiteGraph& g, std::span<const Edge> edges);

}  // namespace konig
