#include "konig/star_studded.hpp"

#include <set>

#include "konig/error.hpp"
#include "konig/matching.hpp"

namespace konig {

StarStuddedGraph star_stud(const BipartiteGraph& h) {
  if (h.count_on(Side::kLeft) == 0 || h.count_on(Side::kRight) == 0) {
    throw Error(ErrorKind::kEmptyGraph, "both sides of the base graph must be nonempty");
  }
  const auto n = static_cast<VertexId>(h.vertex_count());
  std::vector<Side> sides(5 * n);
  std::vector<std::string> labels(5 * n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  StarStuddedGraph ssg;
  ssg.base = h;
  ssg.attachment.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    sides[v] = h.side(v);
    labels[v] = h.label(v);
  }
  for (const Edge& e : h.edges()) edges.emplace_back(e.left, e.right);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId center = n + 4 * v;
    ssg.attachment[v] = {center, center + 1, center + 2, center + 3};
    sides[center] = opposite(h.side(v));
    labels[center] = h.label(v) + "*";
    edges.emplace_back(v, center);
    for (VertexId k = 1; k <= 3; ++k) {
      sides[center + k] = h.side(v);
      labels[center + k] = h.label(v) + "*" + std::to_string(k);
      edges.emplace_back(center, center + k);
    }
  }
  ssg.full = BipartiteGraph::from_sides(std::move(sides), edges, std::move(labels), true);
  return ssg;
}

VertexSet lift_cover(const StarStuddedGraph& ssg, const VertexSet& c) {
  if (!is_minimum_cover(ssg.base, make_vertex_set(c))) {
    throw Error(ErrorKind::kNotMinimumCover, "cover is not minimum in the base graph");
  }
  VertexSet out = make_vertex_set(c);
  for (const auto& star : ssg.attachment) out.push_back(star[0]);
  return make_vertex_set(std::move(out));
}

VertexSet restrict_cover(const StarStuddedGraph& ssg, const VertexSet& c) {
  if (!is_minimum_cover(ssg.full, make_vertex_set(c))) {
    throw Error(ErrorKind::kNotMinimumCover, "cover is not minimum in the star-studded graph");
  }
  VertexSet out;
  for (VertexId v : make_vertex_set(c)) {
    if (ssg.is_base_vertex(v)) out.push_back(v);
  }
  return out;
}

bool is_enumeratively_konig_egervary(const BipartiteGraph& g, const OracleBudget& budget) {
  const auto covers = enumerate_minimum_covers(g, budget);
  std::set<VertexSet> reached;
  for (const Matching& m : all_maximal_matchings(g, budget)) reached.insert(konig_cover(g, m).vertices);
  for (const VertexSet& c : covers) {
    if (!reached.count(c)) return false;
  }
  return true;
}

}  // namespace konig
