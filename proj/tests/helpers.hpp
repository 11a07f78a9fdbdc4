#pragma once

#include <doctest.h>

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "konig/error.hpp"
#include "konig/graph.hpp"
#include "konig/matching.hpp"

namespace testing {

using namespace konig;

// Path 1-2-3-4 with U = {1, 3}.
inline BipartiteGraph p4() {
  const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 0}, {1, 0}, {1, 1}};
  return build_graph(2, 2, edges, {"1", "3", "2", "4"});
}

// a1, a2 -- b1 -- c1 -- d1, d2, d3 with U = {a1, a2, c1}.
inline BipartiteGraph fork_graph() {
  return build_graph_from_labels({"a1", "a2", "c1"}, {"b1", "d1", "d2", "d3"},
                                 {{"a1", "b1"}, {"a2", "b1"}, {"c1", "b1"}, {"c1", "d1"}, {"c1", "d2"}, {"c1", "d3"}});
}

inline BipartiteGraph k2() {
  const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 0}};
  return build_graph(1, 1, edges);
}

inline BipartiteGraph complete(std::size_t l, std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < r; ++j) edges.emplace_back(i, j);
  }
  return build_graph(l, r, edges);
}

inline VertexId id(const BipartiteGraph& g, const std::string& label) {
  const auto v = g.find_label(label);
  REQUIRE(v.has_value());
  return *v;
}

inline VertexSet ids(const BipartiteGraph& g, std::initializer_list<const char*> labels) {
  std::vector<VertexId> out;
  for (const char* l : labels) out.push_back(id(g, l));
  return make_vertex_set(out);
}

inline Matching matching(const BipartiteGraph& g, std::initializer_list<std::pair<const char*, const char*>> pairs) {
  Matching m(g);
  for (const auto& [a, b] : pairs) m.insert(g, g.orient(id(g, a), id(g, b)));
  return m;
}

inline AlternatingPath path(const BipartiteGraph& g, const Matching& m, std::initializer_list<const char*> labels) {
  std::vector<VertexId> vs;
  for (const char* l : labels) vs.push_back(id(g, l));
  return make_alternating_path(g, m, vs);
}

inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no konig::Error thrown");
  return ErrorKind::kIo;
}

// Independent brute force, written without the library's enumerators.

// Every vertex subset that touches every edge, smallest size only.
inline std::set<VertexSet> brute_minimum_covers(const BipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  std::set<VertexSet> best;
  std::size_t best_size = n + 1;
  std::vector<VertexId> chosen;
  std::function<void(VertexId)> rec = [&](VertexId v) {
    if (chosen.size() > best_size) return;
    if (v == n) {
      for (const Edge& e : g.edges()) {
        bool hit = false;
        for (VertexId c : chosen) hit = hit || c == e.left || c == e.right;
        if (!hit) return;
      }
      if (chosen.size() < best_size) {
        best.clear();
        best_size = chosen.size();
      }
      best.insert(chosen);
      return;
    }
    rec(v + 1);
    chosen.push_back(v);
    rec(v + 1);
    chosen.pop_back();
  };
  rec(0);
  return best;
}

// Matchings counted by deciding each vertex in turn: free, or matched to a
// later neighbour.
inline std::size_t brute_matching_count(const BipartiteGraph& g, std::size_t* largest = nullptr) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> used(n, false);
  std::size_t count = 0;
  std::size_t best = 0;
  std::function<void(VertexId, std::size_t)> rec = [&](VertexId v, std::size_t size) {
    while (v < n && used[v]) ++v;
    if (v == n) {
      ++count;
      best = std::max(best, size);
      return;
    }
    rec(v + 1, size);
    for (VertexId w : g.neighbors(v)) {
      if (w < v || used[w]) continue;
      used[v] = used[w] = true;
      rec(v + 1, size + 1);
      used[v] = used[w] = false;
    }
  };
  rec(0, 0);
  if (largest) *largest = best;
  return count;
}

inline std::size_t brute_maximum_matching_size(const BipartiteGraph& g) {
  std::size_t best = 0;
  brute_matching_count(g, &best);
  return best;
}

}  // namespace testing
