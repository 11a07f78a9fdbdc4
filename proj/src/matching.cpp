#include "konig/matching.hpp"

#include <algorithm>
#include <deque>
#include <iterator>

#include "konig/error.hpp"

namespace konig {

Matching::Matching(const BipartiteGraph& g)
    : mate_(g.vertex_count(), kNoVertex), sides_(g.vertex_count()), graph_uid_(g.uid()) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) sides_[v] = g.side(v);
}

Matching Matching::from_edges(const BipartiteGraph& g, std::span<const Edge> edges) {
  Matching m(g);
  for (const Edge& e : edges) m.insert(g, e);
  return m;
}

bool Matching::contains(Edge e) const {
  return e.left < mate_.size() && mate_[e.left] == e.right;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (VertexId v = 0; v < mate_.size(); ++v) {
    if (mate_[v] != kNoVertex && sides_[v] == Side::kLeft) out.push_back(Edge{v, mate_[v]});
  }
  return out;
}

void Matching::insert(const BipartiteGraph& g, Edge e) {
  if (!belongs_to(g)) throw Error(ErrorKind::kForeignMatching, "matching built for another graph");
  if (!g.has_edge(e.left, e.right)) {
    throw Error(ErrorKind::kForeignMatching, "pair (" + std::to_string(e.left) + "," +
                                                 std::to_string(e.right) + ") is not an edge of the graph");
  }
  e = g.orient(e.left, e.right);
  if (mate_[e.left] != kNoVertex || mate_[e.right] != kNoVertex) {
    throw Error(ErrorKind::kInvalidMatching,
                "edges share endpoint " + g.label(mate_[e.left] != kNoVertex ? e.left : e.right));
  }
  mate_[e.left] = e.right;
  mate_[e.right] = e.left;
  ++size_;
}

void Matching::erase(Edge e) {
  if (!contains(e)) throw Error(ErrorKind::kInvalidArgument, "edge not in matching");
  mate_[e.left] = kNoVertex;
  mate_[e.right] = kNoVertex;
  --size_;
}

void require_host(const BipartiteGraph& g, const Matching& m) {
  if (!m.belongs_to(g)) throw Error(ErrorKind::kForeignMatching, "matching built for another graph");
}

std::vector<Edge> AlternatingPath::edges(const BipartiteGraph& g) const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back(g.orient(vertices[i], vertices[i + 1]));
  return out;
}

AlternatingPath make_alternating_path(const BipartiteGraph& g, const Matching& m,
                                      std::vector<VertexId> vertices) {
  require_host(g, m);
  if (vertices.empty()) throw Error(ErrorKind::kInvalidPath, "empty path");
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId v : vertices) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::kInvalidPath, "unknown vertex " + std::to_string(v));
    if (seen[v]) throw Error(ErrorKind::kInvalidPath, "vertex " + g.label(v) + " repeats");
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!g.has_edge(vertices[i], vertices[i + 1])) {
      throw Error(ErrorKind::kInvalidPath, g.label(vertices[i]) + "-" + g.label(vertices[i + 1]) + " is not an edge");
    }
    if (i + 2 < vertices.size()) {
      bool here = m.mate(vertices[i]) == vertices[i + 1];
      bool next = m.mate(vertices[i + 1]) == vertices[i + 2];
      if (here == next) throw Error(ErrorKind::kInvalidPath, "matching membership does not alternate");
    }
  }
  AlternatingPath p;
  p.augmenting = vertices.size() % 2 == 0 && !m.saturated(vertices.front()) && !m.saturated(vertices.back());
  p.vertices = std::move(vertices);
  return p;
}

Matching greedy_maximal_matching(const BipartiteGraph& g, std::span<const Edge> edge_order) {
  if (edge_order.size() != g.edge_count()) {
    throw Error(ErrorKind::kInvalidArgument, "edge order is not a permutation of the edge set");
  }
  std::vector<Edge> sorted(edge_order.begin(), edge_order.end());
  for (Edge& e : sorted) e = g.orient(e.left, e.right);
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), g.edges().begin(), g.edges().end())) {
    throw Error(ErrorKind::kInvalidArgument, "edge order is not a permutation of the edge set");
  }
  Matching m(g);
  for (const Edge& raw : edge_order) {
    Edge e = g.orient(raw.left, raw.right);
    if (!m.saturated(e.left) && !m.saturated(e.right)) m.insert(g, e);
  }
  return m;
}

bool is_maximal(const BipartiteGraph& g, const Matching& m) {
  require_host(g, m);
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return !m.saturated(e.left) && !m.saturated(e.right); });
}

std::optional<AlternatingPath> find_augmenting_path(const BipartiteGraph& g, const Matching& m,
                                                    VertexId from) {
  require_host(g, m);
  if (!g.has_vertex(from)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(from));
  if (m.saturated(from)) throw Error(ErrorKind::kSaturatedStart, g.label(from) + " is saturated");

  std::vector<VertexId> parent(g.vertex_count(), kNoVertex);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    // x lies on from's side; the far side is entered by a free edge.
    for (VertexId y : g.neighbors(x)) {
      if (seen[y] || m.mate(x) == y) continue;
      seen[y] = true;
      parent[y] = x;
      if (!m.saturated(y)) {
        std::vector<VertexId> path;
        for (VertexId at = y; at != kNoVertex; at = parent[at]) path.push_back(at);
        std::reverse(path.begin(), path.end());
        return AlternatingPath{std::move(path), true};
      }
      VertexId w = m.mate(y);
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = y;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

Matching augment(const BipartiteGraph& g, const Matching& m, const AlternatingPath& p) {
  require_host(g, m);
  // The flag on p may describe another matching; read it against m.
  if (!make_alternating_path(g, m, p.vertices).augmenting) {
    throw Error(ErrorKind::kNotAugmenting, "path is not augmenting");
  }
  Matching out = m;
  const auto edges = p.edges(g);
  for (std::size_t i = 1; i < edges.size(); i += 2) out.erase(edges[i]);
  for (std::size_t i = 0; i < edges.size(); i += 2) out.insert(g, edges[i]);
  return out;
}

Matching maximum_matching(const BipartiteGraph& g, const Matching& seed) {
  require_host(g, seed);
  Matching m = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (g.side(u) != Side::kLeft || m.saturated(u)) continue;
      if (auto p = find_augmenting_path(g, m, u)) {
        m = augment(g, m, *p);
        grew = true;
      }
    }
  }
  return m;
}

Matching maximum_matching(const BipartiteGraph& g) { return maximum_matching(g, Matching(g)); }

std::vector<Edge> symmetric_difference(const Matching& a, const Matching& b) {
  if (a.graph_uid() != b.graph_uid() || a.vertex_count() != b.vertex_count()) {
    throw Error(ErrorKind::kForeignMatching, "matchings belong to different graphs");
  }
  const auto ea = a.edges();
  const auto eb = b.edges();
  std::vector<Edge> out;
  std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
  return out;
}

bool is_disjoint_cycle_union(const BipartiteGraph& g, std::span<const Edge> edges) {
  std::vector<int> degree(g.vertex_count(), 0);
  for (const Edge& e : edges) {
    if (!g.has_edge(e.left, e.right)) throw Error(ErrorKind::kInvalidArgument, "edge not in graph");
    ++degree[e.left];
    ++degree[e.right];
  }
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d == 0 || d == 2; });
}

}  // namespace konig
