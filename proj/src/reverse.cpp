#include "konig/reverse.hpp"

#include <algorithm>

#include "konig/error.hpp"

namespace konig {

namespace {

void require_minimum(const BipartiteGraph& g, const VertexSet& cover) {
  for (VertexId v : cover) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(v));
  }
  if (!is_minimum_cover(g, make_vertex_set(cover))) {
    throw Error(ErrorKind::kNotMinimumCover, "cover of size " + std::to_string(cover.size()) + " is not minimum");
  }
}

}  // namespace

CoverSplit split_by_cover(const BipartiteGraph& g, const VertexSet& cover_in) {
  require_minimum(g, cover_in);
  const VertexSet cover = make_vertex_set(cover_in);
  VertexSet up;
  VertexSet down;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const bool in_cover = contains(cover, v);
    const bool left = g.component_side(v) == Side::kLeft;
    (left != in_cover ? up : down).push_back(v);
  }
  CoverSplit split{induced_subgraph(g, up), induced_subgraph(g, down), {}};
  for (const Edge& e : g.edges()) {
    if (contains(cover, e.left) && contains(cover, e.right)) split.cut_edges.push_back(e);
  }
  return split;
}

Matching saturating_matching_down(const BipartiteGraph& g, const CoverSplit& split, const VertexSet& cover) {
  const BipartiteGraph& down = split.down.graph;
  const Matching local = maximum_matching(down);
  Matching m(g);
  for (const Edge& e : local.edges()) m.insert(g, Edge{split.down.parent_of(e.left), split.down.parent_of(e.right)});
  for (VertexId v : cover) {
    if (g.component_side(v) == Side::kLeft && !m.saturated(v)) {
      throw Error(ErrorKind::kSaturationImpossible, g.label(v) + " cannot be saturated inside the lower half");
    }
  }
  return m;
}

std::vector<VertexId> default_visit_order(const BipartiteGraph& g, const VertexSet& cover_in) {
  const VertexSet cover = make_vertex_set(cover_in);
  std::vector<VertexId> order;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.component_side(v) == Side::kLeft && !contains(cover, v)) order.push_back(v);
  }
  return order;
}

Matching reverse_procedure_up(const BipartiteGraph& g, const CoverSplit& split, const VertexSet& cover,
                              const std::vector<VertexId>& visit_order) {
  std::vector<VertexId> expected = default_visit_order(g, cover);
  std::vector<VertexId> given = visit_order;
  std::sort(given.begin(), given.end());
  if (given != expected) throw Error(ErrorKind::kInvalidArgument, "visit order is not a permutation of U \\ C");

  std::vector<bool> in_up(g.vertex_count(), false);
  for (VertexId v : split.up.to_parent) in_up[v] = true;

  Matching m(g);
  // Depth is bounded by the number of left vertices in the upper half.
  auto visit = [&](auto&& self, VertexId from, VertexId root) -> void {
    for (VertexId v : g.neighbors(from)) {
      if (!in_up[v] || m.saturated(v)) continue;
      for (VertexId w : g.neighbors(v)) {
        if (!in_up[w] || w == root || m.saturated(w) || m.saturated(v)) continue;
        m.insert(g, g.orient(v, w));
        self(self, w, root);
      }
    }
  };
  for (VertexId root : visit_order) {
    if (!m.saturated(root)) visit(visit, root, root);
  }
  return m;
}

ReverseResult reverse_konig(const BipartiteGraph& g, const VertexSet& cover_in,
                            std::optional<std::vector<VertexId>> visit_order) {
  require_minimum(g, cover_in);
  const VertexSet cover = make_vertex_set(cover_in);
  std::vector<VertexId> order = visit_order ? *visit_order : default_visit_order(g, cover);

  ReverseResult result{Matching(g), Matching(g), Matching(g), order};
  if (is_connected(g)) {
    const CoverSplit split = split_by_cover(g, cover);
    result.m_down = saturating_matching_down(g, split, cover);
    result.m_up = reverse_procedure_up(g, split, cover, order);
  } else {
    std::vector<VertexId> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != default_visit_order(g, cover)) {
      throw Error(ErrorKind::kInvalidArgument, "visit order is not a permutation of U \\ C");
    }
    const auto decomposition = connected_components(g);
    for (std::size_t c = 0; c < decomposition.components.size(); ++c) {
      const Subgraph& comp = decomposition.components[c];
      VertexSet local_cover;
      std::vector<VertexId> local_order;
      for (VertexId v : cover) {
        if (decomposition.component_of[v] == c) local_cover.push_back(*comp.local_of(v));
      }
      for (VertexId v : order) {
        if (decomposition.component_of[v] == c) local_order.push_back(*comp.local_of(v));
      }
      const ReverseResult part = reverse_konig(comp.graph, make_vertex_set(local_cover), local_order);
      for (const Edge& e : part.m_up.edges()) result.m_up.insert(g, {comp.parent_of(e.left), comp.parent_of(e.right)});
      for (const Edge& e : part.m_down.edges()) {
        result.m_down.insert(g, {comp.parent_of(e.left), comp.parent_of(e.right)});
      }
    }
  }

  for (const Edge& e : result.m_up.edges()) result.combined.insert(g, e);
  for (const Edge& e : result.m_down.edges()) result.combined.insert(g, e);

  if (konig_cover(g, result.combined).vertices != cover) {
    throw Error(ErrorKind::kRoundTripFailed, "Kőnig's procedure does not return the input cover");
  }
  return result;
}

std::vector<std::pair<VertexId, VertexId>> lone_neighbour_violations(const BipartiteGraph& g,
                                                                     const CoverSplit& split,
                                                                     const Matching& m_up) {
  std::vector<bool> in_up(g.vertex_count(), false);
  for (VertexId v : split.up.to_parent) in_up[v] = true;
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const Edge& e : g.edges()) {
    if (!in_up[e.left] || !in_up[e.right] || m_up.saturated(e.left) || m_up.saturated(e.right)) continue;
    auto [u, v] = g.component_side(e.left) == Side::kLeft ? std::pair{e.left, e.right} : std::pair{e.right, e.left};
    const auto nbrs = g.neighbors(v);
    const auto up_degree = std::count_if(nbrs.begin(), nbrs.end(), [&](VertexId w) { return in_up[w]; });
    if (up_degree > 1) out.emplace_back(u, v);
  }
  return out;
}

}  // namespace konig
