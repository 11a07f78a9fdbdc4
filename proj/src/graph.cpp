#include "konig/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <unordered_map>

#include "konig/error.hpp"

namespace konig {

namespace {

std::uint64_t next_uid() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kSameSideEdge: return "SameSideEdge";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kDuplicateVertex: return "DuplicateVertex";
    case ErrorKind::kUnknownVertex: return "UnknownVertex";
    case ErrorKind::kNotBipartite: return "NotBipartite";
    case ErrorKind::kForeignMatching: return "ForeignMatching";
    case ErrorKind::kInvalidMatching: return "InvalidMatching";
    case ErrorKind::kInvalidPath: return "InvalidPath";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kSaturatedStart: return "SaturatedStart";
    case ErrorKind::kNotACover: return "NotACover";
    case ErrorKind::kNotMinimumCover: return "NotMinimumCover";
    case ErrorKind::kSaturationImpossible: return "SaturationImpossible";
    case ErrorKind::kRoundTripFailed: return "RoundTripFailed";
    case ErrorKind::kNotAugmenting: return "NotAugmenting";
    case ErrorKind::kMalformedStructure: return "MalformedStructure";
    case ErrorKind::kNotMaximal: return "NotMaximal";
    case ErrorKind::kPathExplosion: return "PathExplosion";
    case ErrorKind::kEmptyGraph: return "EmptyGraph";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

VertexSet make_vertex_set(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool contains(const VertexSet& set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

std::size_t BipartiteGraph::count_on(Side s) const noexcept {
  return static_cast<std::size_t>(std::count(sides_.begin(), sides_.end(), s));
}

Side BipartiteGraph::side(VertexId v) const {
  if (!has_vertex(v)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(v));
  return sides_[v];
}

std::span<const VertexId> BipartiteGraph::neighbors(VertexId v) const {
  if (!has_vertex(v)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(v));
  return adjacency_[v];
}

bool BipartiteGraph::has_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

Edge BipartiteGraph::orient(VertexId a, VertexId b) const {
  if (side(a) == side(b)) {
    throw Error(ErrorKind::kSameSideEdge, label(a) + " and " + label(b) + " lie on the same side");
  }
  return sides_[a] == Side::kLeft ? Edge{a, b} : Edge{b, a};
}

VertexSet BipartiteGraph::vertices_on(Side s) const {
  VertexSet out;
  for (VertexId v = 0; v < sides_.size(); ++v) {
    if (sides_[v] == s) out.push_back(v);
  }
  return out;
}

Side BipartiteGraph::component_side(VertexId v) const {
  if (!has_vertex(v)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(v));
  return component_sides_[v];
}

const std::string& BipartiteGraph::label(VertexId v) const {
  if (!has_vertex(v)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(v));
  return labels_[v];
}

std::optional<VertexId> BipartiteGraph::find_label(std::string_view label) const {
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

BipartiteGraph BipartiteGraph::from_sides(std::vector<Side> sides,
                                          std::span<const std::pair<VertexId, VertexId>> edges,
                                          std::vector<std::string> labels, bool normalize) {
  BipartiteGraph g;
  const std::size_t n = sides.size();
  if (labels.empty()) {
    labels.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
      labels.push_back((sides[v] == Side::kLeft ? "L" : "R") + std::to_string(v));
    }
  }
  if (labels.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "label count does not match vertex count");
  }
  g.sides_ = std::move(sides);
  g.labels_ = std::move(labels);
  g.adjacency_.assign(n, {});

  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw Error(ErrorKind::kIndexOutOfRange, "edge endpoint out of range");
    if (g.sides_[a] == g.sides_[b]) {
      throw Error(ErrorKind::kSameSideEdge, g.labels_[a] + " and " + g.labels_[b] + " lie on the same side");
    }
    g.edges_.push_back(g.sides_[a] == Side::kLeft ? Edge{a, b} : Edge{b, a});
  }

  if (normalize && g.count_on(Side::kLeft) > g.count_on(Side::kRight)) {
    for (auto& s : g.sides_) s = opposite(s);
    for (auto& e : g.edges_) std::swap(e.left, e.right);
    g.sides_swapped_ = true;
  }

  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.left].push_back(e.right);
    g.adjacency_[e.right].push_back(e.left);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());

  g.component_sides_ = g.sides_;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> members;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    members.assign(1, start);
    seen[start] = true;
    std::size_t left = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      VertexId x = members[i];
      if (g.sides_[x] == Side::kLeft) ++left;
      for (VertexId y : g.adjacency_[x]) {
        if (!seen[y]) {
          seen[y] = true;
          members.push_back(y);
        }
      }
    }
    if (2 * left > members.size()) {
      for (VertexId x : members) g.component_sides_[x] = opposite(g.sides_[x]);
    }
  }
  g.uid_ = next_uid();
  return g;
}

BipartiteGraph build_graph(std::size_t left_count, std::size_t right_count,
                           std::span<const std::pair<std::size_t, std::size_t>> edges,
                           std::vector<std::string> labels) {
  std::vector<Side> sides(left_count, Side::kLeft);
  sides.resize(left_count + right_count, Side::kRight);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges.size());
  for (auto [l, r] : edges) {
    if (l >= left_count || r >= right_count) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "edge (" + std::to_string(l) + "," + std::to_string(r) + ") outside " +
                      std::to_string(left_count) + "x" + std::to_string(right_count));
    }
    pairs.emplace_back(static_cast<VertexId>(l), static_cast<VertexId>(left_count + r));
  }
  return BipartiteGraph::from_sides(std::move(sides), pairs, std::move(labels), true);
}

BipartiteGraph build_graph_from_labels(const std::vector<std::string>& left,
                                       const std::vector<std::string>& right,
                                       const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::string> labels;
  std::vector<Side> sides;
  auto add = [&](const std::string& label, Side s) {
    if (!index.emplace(label, static_cast<VertexId>(labels.size())).second) {
      throw Error(ErrorKind::kDuplicateVertex, "label '" + label + "' appears twice");
    }
    labels.push_back(label);
    sides.push_back(s);
  };
  for (const auto& l : left) add(l, Side::kLeft);
  for (const auto& r : right) add(r, Side::kRight);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorKind::kUnknownVertex, "edge endpoint '" + a + "'");
    if (ib == index.end()) throw Error(ErrorKind::kUnknownVertex, "edge endpoint '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return BipartiteGraph::from_sides(std::move(sides), pairs, std::move(labels), true);
}

BipartiteGraph build_graph_from_pairs(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::string> labels;
  std::vector<std::vector<VertexId>> adj;
  auto intern = [&](const std::string& label) {
    auto [it, fresh] = index.emplace(label, static_cast<VertexId>(labels.size()));
    if (fresh) {
      labels.push_back(label);
      adj.emplace_back();
    }
    return it->second;
  };
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& [a, b] : edges) {
    VertexId ia = intern(a);
    VertexId ib = intern(b);
    if (ia == ib) throw Error(ErrorKind::kNotBipartite, "self-loop at '" + a + "'");
    adj[ia].push_back(ib);
    adj[ib].push_back(ia);
    pairs.emplace_back(ia, ib);
  }

  const std::size_t n = labels.size();
  std::vector<int> colour(n, -1);
  for (VertexId start = 0; start < n; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : adj[x]) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          throw Error(ErrorKind::kNotBipartite,
                      "odd cycle through '" + labels[x] + "' and '" + labels[y] + "'");
        }
      }
    }
  }
  std::vector<Side> sides(n);
  for (VertexId v = 0; v < n; ++v) sides[v] = colour[v] == 0 ? Side::kLeft : Side::kRight;
  return BipartiteGraph::from_sides(std::move(sides), pairs, std::move(labels), true);
}

BipartiteGraph swap_sides(const BipartiteGraph& g) {
  std::vector<Side> sides(g.vertex_count());
  std::vector<std::string> labels(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    sides[v] = opposite(g.side(v));
    labels[v] = g.label(v);
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.left, e.right);
  return BipartiteGraph::from_sides(std::move(sides), pairs, std::move(labels), false);
}

std::optional<VertexId> Subgraph::local_of(VertexId parent) const {
  auto it = std::find(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end()) return std::nullopt;
  return static_cast<VertexId>(it - to_parent.begin());
}

namespace {

Subgraph make_subgraph(const BipartiteGraph& g, const VertexSet& vertices, std::span<const Edge> edges,
                       bool normalize) {
  std::vector<VertexId> local(g.vertex_count(), kNoVertex);
  std::vector<Side> sides;
  std::vector<std::string> labels;
  for (VertexId v : vertices) {
    local[v] = static_cast<VertexId>(sides.size());
    sides.push_back(g.side(v));
    labels.push_back(g.label(v));
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : edges) {
    if (local[e.left] != kNoVertex && local[e.right] != kNoVertex) {
      pairs.emplace_back(local[e.left], local[e.right]);
    }
  }
  return Subgraph{BipartiteGraph::from_sides(std::move(sides), pairs, std::move(labels), normalize),
                  vertices};
}

}  // namespace

Subgraph induced_subgraph(const BipartiteGraph& g, const VertexSet& vertices) {
  for (VertexId v : vertices) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(v));
  }
  return make_subgraph(g, vertices, g.edges(), false);
}

Subgraph edge_subgraph(const BipartiteGraph& g, std::span<const Edge> edges) {
  std::vector<VertexId> ids;
  for (const Edge& e : edges) {
    if (!g.has_edge(e.left, e.right)) throw Error(ErrorKind::kInvalidArgument, "edge not in graph");
    ids.push_back(e.left);
    ids.push_back(e.right);
  }
  return make_subgraph(g, make_vertex_set(std::move(ids)), edges, false);
}

ComponentDecomposition connected_components(const BipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  ComponentDecomposition out;
  out.component_of.assign(n, static_cast<std::size_t>(-1));
  std::vector<VertexSet> members;
  for (VertexId start = 0; start < n; ++start) {
    if (out.component_of[start] != static_cast<std::size_t>(-1)) continue;
    const std::size_t c = members.size();
    members.emplace_back();
    std::deque<VertexId> queue{start};
    out.component_of[start] = c;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      members[c].push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (out.component_of[y] == static_cast<std::size_t>(-1)) {
          out.component_of[y] = c;
          queue.push_back(y);
        }
      }
    }
  }
  for (auto& m : members) {
    out.components.push_back(make_subgraph(g, make_vertex_set(std::move(m)), g.edges(), true));
  }
  return out;
}

bool is_connected(const BipartiteGraph& g) {
  return g.vertex_count() == 0 || connected_components(g).components.size() == 1;
}


}  // namespace konig
