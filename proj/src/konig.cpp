#include "konig/konig.hpp"

#include <algorithm>

#include "konig/error.hpp"

namespace konig {

ZSet z_set(const BipartiteGraph& g, const Matching& m) {
  require_host(g, m);
  const auto sides = g.component_sides();
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_z(n, false);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    if (sides[v] == Side::kLeft && !m.saturated(v)) {
      in_z[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    if (sides[x] == Side::kLeft) {
      for (VertexId y : g.neighbors(x)) {
        if (!in_z[y] && m.mate(x) != y) {
          in_z[y] = true;
          stack.push_back(y);
        }
      }
    } else if (VertexId w = m.mate(x); w != kNoVertex && !in_z[w]) {
      in_z[w] = true;
      stack.push_back(w);
    }
  }
  ZSet z;
  for (VertexId v = 0; v < n; ++v) {
    if (in_z[v]) z.vertices.push_back(v);
  }
  return z;
}

VertexCover konig_cover(const BipartiteGraph& g, const Matching& m) {
  const ZSet z = z_set(g, m);
  const auto sides = g.component_sides();
  VertexCover cover;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const bool reached = contains(z.vertices, v);
    if ((sides[v] == Side::kLeft) != reached) cover.vertices.push_back(v);
  }
  cover.is_cover = is_vertex_cover(g, cover.vertices);
  return cover;
}

bool is_vertex_cover(const BipartiteGraph& g, const VertexSet& s) {
  std::vector<bool> member(g.vertex_count(), false);
  for (VertexId v : s) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(v));
    member[v] = true;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return member[e.left] || member[e.right]; });
}

bool is_minimal_cover(const BipartiteGraph& g, const VertexSet& set) {
  if (!is_vertex_cover(g, set)) throw Error(ErrorKind::kNotACover, "set does not cover every edge");
  const VertexSet s = make_vertex_set(set);
  for (VertexId r : s) {
    const auto nbrs = g.neighbors(r);
    if (std::all_of(nbrs.begin(), nbrs.end(), [&](VertexId w) { return contains(s, w); })) return false;
  }
  return true;
}

bool is_minimum_cover(const BipartiteGraph& g, const VertexSet& s, std::size_t maximum_matching_size) {
  return s.size() == maximum_matching_size && is_vertex_cover(g, s);
}

bool is_minimum_cover(const BipartiteGraph& g, const VertexSet& s) {
  return is_minimum_cover(g, s, maximum_matching(g).size());
}

CoverVerdict VertexCover::verdict(const BipartiteGraph& g) const {
  CoverVerdict v;
  v.is_cover = is_vertex_cover(g, vertices);
  if (v.is_cover) {
    v.is_minimal = is_minimal_cover(g, vertices);
    v.is_minimum = is_minimum_cover(g, vertices);
  }
  return v;
}

}  // namespace konig
