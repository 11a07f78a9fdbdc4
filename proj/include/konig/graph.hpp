#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace konig {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// kLeft is the designated side U that Kőnig's procedure starts from,
/// kRight is V.
enum class Side : std::uint8_t { kLeft, kRight };

constexpr Side opposite(Side s) noexcept { return s == Side::kLeft ? Side::kRight : Side::kLeft; }

/// An edge stored with its designated-left endpoint first.
struct Edge {
  VertexId left = kNoVertex;
  VertexId right = kNoVertex;

  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> ids);
bool contains(const VertexSet& set, VertexId v);

/// Immutable bipartite graph over dense ids 0..n-1.
///
/// Graphs built through build_graph() or the label-based builders are
/// normalized: when the declared left side is strictly larger than the right
/// side the roles are swapped (and sides_swapped() reports it), so the side
/// tagged kLeft is never the larger one. On a tie the declared left side is
/// kept. Subgraphs (induced_subgraph, edge_subgraph) keep the parent's side
/// tags verbatim.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  std::size_t vertex_count() const noexcept { return sides_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t count_on(Side s) const noexcept;

  Side side(VertexId v) const;
  bool has_vertex(VertexId v) const noexcept { return v < sides_.size(); }

  /// Sorted adjacency list. Throws UnknownVertex.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// All edges, sorted lexicographically by (left, right).
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(VertexId a, VertexId b) const;

  /// Orients an unordered vertex pair as an Edge; throws SameSideEdge or
  /// UnknownVertex. Does not require the edge to exist.
  Edge orient(VertexId a, VertexId b) const;

  VertexSet vertices_on(Side s) const;

  const std::string& label(VertexId v) const;
  std::optional<VertexId> find_label(std::string_view label) const;

  bool sides_swapped() const noexcept { return sides_swapped_; }
  bool left_is_smaller() const noexcept { return count_on(Side::kLeft) <= count_on(Side::kRight); }

  /// Side tag after re-running the |U| <= |V| choice inside each connected
  /// component (ties keep the graph's own tag). Computed at construction.
  Side component_side(VertexId v) const;
  std::span<const Side> component_sides() const noexcept { return component_sides_; }

  /// Identity token shared by copies of the same constructed graph.
  std::uint64_t uid() const noexcept { return uid_; }

  /// Raw constructor used by builders: explicit side per vertex, edges as
  /// unordered pairs. Duplicates are dropped; same-side pairs and
  /// self-loops raise SameSideEdge. When normalize is set and the left side
  /// is strictly larger, every side tag is flipped.
  static BipartiteGraph from_sides(std::vector<Side> sides,
                                   std::span<const std::pair<VertexId, VertexId>> edges,
                                   std::vector<std::string> labels, bool normalize);

 private:
  std::vector<Side> sides_;
  std::vector<Side> component_sides_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  bool sides_swapped_ = false;
  std::uint64_t uid_ = 0;
};

/// Left vertex i gets id i, right vertex j gets id left_count + j.
/// Throws IndexOutOfRange. Duplicate pairs are collapsed.
BipartiteGraph build_graph(std::size_t left_count, std::size_t right_count,
                           std::span<const std::pair<std::size_t, std::size_t>> edges,
                           std::vector<std::string> labels = {});

/// Label-based builder used by the JSON reader. Edge endpoints may be given
/// in either order. Throws DuplicateVertex, UnknownVertex, SameSideEdge.
BipartiteGraph build_graph_from_labels(const std::vector<std::string>& left,
                                       const std::vector<std::string>& right,
                                       const std::vector<std::pair<std::string, std::string>>& edges);

/// Builder for the plain edge-list format: sides come from a two-colouring
/// (the first vertex seen in each component is coloured left). Throws
/// NotBipartite when an odd cycle exists.
BipartiteGraph build_graph_from_pairs(const std::vector<std::pair<std::string, std::string>>& edges);

/// Exchanges the designated sides without normalizing.
BipartiteGraph swap_sides(const BipartiteGraph& g);

struct Subgraph {
  BipartiteGraph graph;
  std::vector<VertexId> to_parent;  // subgraph id -> parent id

  VertexId parent_of(VertexId v) const { return to_parent.at(v); }
  std::optional<VertexId> local_of(VertexId parent) const;
};

/// Subgraph induced by `vertices` (parent ids), keeping parent side tags.
Subgraph induced_subgraph(const BipartiteGraph& g, const VertexSet& vertices);

/// Subgraph made of exactly the given parent edges and their endpoints.
Subgraph edge_subgraph(const BipartiteGraph& g, std::span<const Edge> edges);

struct ComponentDecomposition {
  std::vector<Subgraph> components;      // normalized per component
  std::vector<std::size_t> component_of;  // parent id -> component index
};

ComponentDecomposition connected_components(const BipartiteGraph& g);
bool is_connected(const BipartiteGraph& g);

}  // namespace konig
