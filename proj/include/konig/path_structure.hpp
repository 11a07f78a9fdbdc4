#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "konig/graph.hpp"
#include "konig/matching.hpp"

namespace konig {

inline constexpr std::size_t kDefaultPathLimit = 1'000'000;

/// Every simple augmenting path that starts at an unsaturated vertex of the
/// designated left side (per component), sorted lexicographically by vertex
/// sequence. Throws PathExplosion once more than `limit` paths are found.
std::vector<AlternatingPath> enumerate_augmenting_paths(const BipartiteGraph& g, const Matching& m,
                                                        std::size_t limit = kDefaultPathLimit);

/// Position of each vertex along a path; kNotOnPath elsewhere.
struct PathOrder {
  static constexpr std::size_t kNotOnPath = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rank;

  PathOrder(const AlternatingPath& p, std::size_t vertex_count);
  bool on_path(VertexId v) const { return rank[v] != kNotOnPath; }
  bool less_equal(VertexId a, VertexId b) const { return rank[a] <= rank[b]; }
};

/// Which augmenting paths join the family of a base path P.
///   kEdgeShared : paths sharing at least one edge with P
///   kEdgeOrRoot : additionally every path starting at P's root
enum class FamilyMode : std::uint8_t { kEdgeShared, kEdgeOrRoot };

struct PathStructure {
  AlternatingPath base_path;
  std::vector<AlternatingPath> family;  // includes base_path
  VertexSet vertices;                   // union of the family, parent ids
  Subgraph subgraph;                    // union of the family's edges
  std::optional<VertexId> hat_cut_vertex;
  std::optional<VertexId> check_cut_vertex;  // the left vertex ǔ; its mate is the cut
  Matching matching;
  std::size_t root_count = 0;
  std::size_t endpoint_count = 0;
};

/// Builds the structure from a precomputed path list (the full output of
/// enumerate_augmenting_paths for (g, m)). Throws NotAugmenting.
PathStructure path_structure(const BipartiteGraph& g, const Matching& m, const AlternatingPath& p,
                             const std::vector<AlternatingPath>& all_paths,
                             FamilyMode mode = FamilyMode::kEdgeShared);

PathStructure path_structure(const BipartiteGraph& g, const Matching& m, const AlternatingPath& p,
                             std::size_t limit = kDefaultPathLimit, FamilyMode mode = FamilyMode::kEdgeShared);

struct MeetJoin {
  std::optional<VertexId> join;  // first common vertex along p
  std::optional<VertexId> meet;  // last common vertex along p
};

MeetJoin meet_join(const AlternatingPath& p, const AlternatingPath& q);

/// Vertices kept by the hat truncation: everything except, on each family
/// path through v̂, the prefix ending at v̂. Whole structure when every
/// family path starts at P's root.
VertexSet hat_vertices(const PathStructure& ps);

/// Vertices kept by the check truncation: on each family path through
/// v̌ = mate(ǔ), the prefix ending at v̌. Whole structure when every family
/// path ends at P's endpoint.
VertexSet check_vertices(const PathStructure& ps);

/// The truncations as subgraphs of the structure (ids map back to g).
Subgraph hat_subgraph(const BipartiteGraph& g, const PathStructure& ps);
Subgraph check_subgraph(const BipartiteGraph& g, const PathStructure& ps);

struct ClassificationWitness {
  AlternatingPath path;
  VertexSet unsaturated_right;  // outside the check truncation
};

struct ClassificationVerdict {
  bool is_minimum = true;
  std::optional<ClassificationWitness> witness;
};

/// Flags a maximal matching as non-minimum when some augmenting path P
/// leaves two or more unsaturated right vertices in the structure outside
/// its check truncation. Throws NotMaximal, PathExplosion.
ClassificationVerdict classify_matching(const BipartiteGraph& g, const Matching& m,
                                        std::size_t limit = kDefaultPathLimit);

/// Same predicate over a precomputed path list.
ClassificationVerdict classify_matching(const BipartiteGraph& g, const Matching& m,
                                        const std::vector<AlternatingPath>& all_paths);

/// |K(m)| - |K(m △ p)|. Throws NotAugmenting.
std::int64_t cover_delta_under_augment(const BipartiteGraph& g, const Matching& m, const AlternatingPath& p);

}  // namespace konig
