#include "konig/path_structure.hpp"

#include <algorithm>
#include <set>

#include "konig/error.hpp"
#include "konig/konig.hpp"

namespace konig {

std::vector<AlternatingPath> enumerate_augmenting_paths(const BipartiteGraph& g, const Matching& m,
                                                        std::size_t limit) {
  require_host(g, m);
  if (limit == 0) throw Error(ErrorKind::kInvalidArgument, "path limit must be positive");
  const std::size_t n = g.vertex_count();
  std::vector<AlternatingPath> out;
  std::vector<bool> on_path(n, false);
  std::vector<VertexId> path;

  // path.back() is always a left vertex: the root or the mate just taken.
  auto extend = [&](auto&& self) -> void {
    const VertexId x = path.back();
    for (VertexId y : g.neighbors(x)) {
      if (on_path[y] || m.mate(x) == y) continue;
      if (!m.saturated(y)) {
        path.push_back(y);
        if (out.size() == limit) {
          throw Error(ErrorKind::kPathExplosion, "more than " + std::to_string(limit) + " augmenting paths");
        }
        out.push_back(AlternatingPath{path, true});
        path.pop_back();
        continue;
      }
      const VertexId w = m.mate(y);
      if (on_path[w]) continue;
      path.push_back(y);
      path.push_back(w);
      on_path[y] = on_path[w] = true;
      self(self);
      on_path[y] = on_path[w] = false;
      path.pop_back();
      path.pop_back();
    }
  };

  for (VertexId root = 0; root < n; ++root) {
    if (g.component_side(root) != Side::kLeft || m.saturated(root)) continue;
    path.assign(1, root);
    on_path[root] = true;
    extend(extend);
    on_path[root] = false;
  }
  std::sort(out.begin(), out.end(),
            [](const AlternatingPath& a, const AlternatingPath& b) { return a.vertices < b.vertices; });
  return out;
}

PathOrder::PathOrder(const AlternatingPath& p, std::size_t vertex_count) : rank(vertex_count, kNotOnPath) {
  for (std::size_t i = 0; i < p.vertices.size(); ++i) rank.at(p.vertices[i]) = i;
}

namespace {

AlternatingPath require_augmenting(const BipartiteGraph& g, const Matching& m, const AlternatingPath& p) {
  AlternatingPath checked;
  try {
    checked = make_alternating_path(g, m, p.vertices);
  } catch (const Error& e) {
    throw Error(ErrorKind::kNotAugmenting, e.what());
  }
  if (!checked.augmenting) throw Error(ErrorKind::kNotAugmenting, "path is not augmenting");
  if (g.component_side(checked.front()) != Side::kLeft) {
    std::reverse(checked.vertices.begin(), checked.vertices.end());
  }
  return checked;
}

bool shares_edge(const std::set<Edge>& edges, const BipartiteGraph& g, const AlternatingPath& q) {
  for (std::size_t i = 0; i + 1 < q.vertices.size(); ++i) {
    if (edges.count(g.orient(q.vertices[i], q.vertices[i + 1]))) return true;
  }
  return false;
}

// First (or last) vertex of q lying on the base path, ranked by the base path.
std::optional<VertexId> extreme_intersection(const PathOrder& order, const AlternatingPath& q, bool first) {
  std::optional<VertexId> best;
  for (VertexId v : q.vertices) {
    if (!order.on_path(v)) continue;
    if (!best || (first ? order.rank[v] < order.rank[*best] : order.rank[v] > order.rank[*best])) best = v;
  }
  return best;
}

// First (or last) vertex of q, walking along q, that lies on the base path.
std::optional<VertexId> boundary_on_path(const PathOrder& order, const AlternatingPath& q, bool first) {
  std::optional<VertexId> found;
  for (VertexId v : q.vertices) {
    if (!order.on_path(v)) continue;
    if (first) return v;
    found = v;
  }
  return found;
}

Subgraph induced_in_structure(const PathStructure& ps, const VertexSet& keep) {
  VertexSet local;
  for (VertexId v : keep) local.push_back(*ps.subgraph.local_of(v));
  Subgraph inner = induced_subgraph(ps.subgraph.graph, make_vertex_set(std::move(local)));
  for (VertexId& v : inner.to_parent) v = ps.subgraph.parent_of(v);
  return inner;
}

}  // namespace

PathStructure path_structure(const BipartiteGraph& g, const Matching& m, const AlternatingPath& p_in,
                             const std::vector<AlternatingPath>& all_paths, FamilyMode mode) {
  require_host(g, m);
  const AlternatingPath p = require_augmenting(g, m, p_in);
  const auto p_edges_list = p.edges(g);
  const std::set<Edge> p_edges(p_edges_list.begin(), p_edges_list.end());

  PathStructure ps;
  ps.base_path = p;
  ps.matching = m;
  bool has_base = false;
  for (const AlternatingPath& q : all_paths) {
    const bool same = q.vertices == p.vertices;
    has_base = has_base || same;
    if (same || shares_edge(p_edges, g, q) || (mode == FamilyMode::kEdgeOrRoot && q.front() == p.front())) {
      ps.family.push_back(q);
    }
  }
  if (!has_base) ps.family.insert(ps.family.begin(), p);

  std::set<Edge> union_edges;
  std::set<VertexId> roots;
  std::set<VertexId> ends;
  std::vector<VertexId> verts;
  for (const AlternatingPath& q : ps.family) {
    roots.insert(q.front());
    ends.insert(q.back());
    verts.insert(verts.end(), q.vertices.begin(), q.vertices.end());
    for (const Edge& e : q.edges(g)) union_edges.insert(e);
  }
  ps.vertices = make_vertex_set(std::move(verts));
  const std::vector<Edge> edge_list(union_edges.begin(), union_edges.end());
  ps.subgraph = edge_subgraph(g, edge_list);
  ps.root_count = roots.size();
  ps.endpoint_count = ends.size();

  // v̂ is the P-latest of the points where paths from other roots first
  // reach P (walking along each path), ǔ the P-earliest of the points where
  // paths to other endpoints last leave it. P itself is left out: it would
  // contribute its own root and endpoint, which lie on the wrong sides.
  const PathOrder order(p, g.vertex_count());
  for (const AlternatingPath& q : ps.family) {
    if (q.front() != p.front()) {
      const auto first = boundary_on_path(order, q, true);
      if (first && (!ps.hat_cut_vertex || order.rank[*first] > order.rank[*ps.hat_cut_vertex])) {
        ps.hat_cut_vertex = first;
      }
    }
    if (q.back() != p.back()) {
      const auto last = boundary_on_path(order, q, false);
      if (last && (!ps.check_cut_vertex || order.rank[*last] < order.rank[*ps.check_cut_vertex])) {
        ps.check_cut_vertex = last;
      }
    }
  }
  return ps;
}

PathStructure path_structure(const BipartiteGraph& g, const Matching& m, const AlternatingPath& p,
                             std::size_t limit, FamilyMode mode) {
  return path_structure(g, m, p, enumerate_augmenting_paths(g, m, limit), mode);
}

MeetJoin meet_join(const AlternatingPath& p, const AlternatingPath& q) {
  VertexId n = 0;
  for (VertexId v : p.vertices) n = std::max(n, v + 1);
  for (VertexId v : q.vertices) n = std::max(n, v + 1);
  const PathOrder order(p, n);
  return MeetJoin{extreme_intersection(order, q, true), extreme_intersection(order, q, false)};
}

VertexSet hat_vertices(const PathStructure& ps) {
  if (!ps.hat_cut_vertex) return ps.vertices;
  const VertexId cut = *ps.hat_cut_vertex;
  std::set<VertexId> removed;
  for (const AlternatingPath& q : ps.family) {
    const auto it = std::find(q.vertices.begin(), q.vertices.end(), cut);
    if (it != q.vertices.end()) removed.insert(q.vertices.begin(), it + 1);
  }
  VertexSet out;
  for (VertexId v : ps.vertices) {
    if (!removed.count(v)) out.push_back(v);
  }
  return out;
}

VertexSet check_vertices(const PathStructure& ps) {
  if (!ps.check_cut_vertex) return ps.vertices;
  const VertexId u = *ps.check_cut_vertex;
  const VertexId cut = ps.matching.mate(u);
  if (cut == kNoVertex) {
    throw Error(ErrorKind::kMalformedStructure, "check cut vertex " + std::to_string(u) + " is unsaturated");
  }
  std::vector<VertexId> kept;
  for (const AlternatingPath& q : ps.family) {
    const auto it = std::find(q.vertices.begin(), q.vertices.end(), cut);
    if (it != q.vertices.end()) kept.insert(kept.end(), q.vertices.begin(), it + 1);
  }
  return make_vertex_set(std::move(kept));
}

Subgraph hat_subgraph(const BipartiteGraph& g, const PathStructure& ps) {
  require_host(g, ps.matching);
  return induced_in_structure(ps, hat_vertices(ps));
}

Subgraph check_subgraph(const BipartiteGraph& g, const PathStructure& ps) {
  require_host(g, ps.matching);
  return induced_in_structure(ps, check_vertices(ps));
}

ClassificationVerdict classify_matching(const BipartiteGraph& g, const Matching& m,
                                        const std::vector<AlternatingPath>& all_paths) {
  if (!is_maximal(g, m)) throw Error(ErrorKind::kNotMaximal, "classification requires a maximal matching");
  ClassificationVerdict verdict;
  for (const AlternatingPath& p : all_paths) {
    const PathStructure ps = path_structure(g, m, p, all_paths);
    const VertexSet kept = check_vertices(ps);
    VertexSet free_right;
    for (VertexId v : ps.vertices) {
      if (!contains(kept, v) && g.component_side(v) == Side::kRight && !m.saturated(v)) free_right.push_back(v);
    }
    if (free_right.size() >= 2) {
      verdict.is_minimum = false;
      verdict.witness = ClassificationWitness{ps.base_path, std::move(free_right)};
      return verdict;
    }
  }
  return verdict;
}

ClassificationVerdict classify_matching(const BipartiteGraph& g, const Matching& m, std::size_t limit) {
  if (!is_maximal(g, m)) throw Error(ErrorKind::kNotMaximal, "classification requires a maximal matching");
  return classify_matching(g, m, enumerate_augmenting_paths(g, m, limit));
}

std::int64_t cover_delta_under_augment(const BipartiteGraph& g, const Matching& m, const AlternatingPath& p) {
  require_host(g, m);
  const AlternatingPath checked = require_augmenting(g, m, p);
  const Matching flipped = augment(g, m, checked);
  return static_cast<std::int64_t>(konig_cover(g, m).size()) - static_cast<std::int64_t>(konig_cover(g, flipped).size());
}

}  // namespace konig
