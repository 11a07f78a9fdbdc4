#include "konig/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "konig/error.hpp"

namespace konig {

namespace {

void over_budget(const std::string& what) { throw Error(ErrorKind::kBudgetExceeded, what); }

void require_vertices(const BipartiteGraph& g, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices || g.vertex_count() > 63) {
    over_budget(std::to_string(g.vertex_count()) + " vertices exceed the oracle limit of " +
                std::to_string(std::min<std::size_t>(budget.max_vertices, 63)));
  }
}

VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

std::vector<VertexSet> all_minimum_covers(const BipartiteGraph& g, const OracleBudget& budget) {
  require_vertices(g, budget);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> edge_masks;
  for (const Edge& e : g.edges()) edge_masks.push_back((std::uint64_t{1} << e.left) | (std::uint64_t{1} << e.right));

  std::size_t scanned = 0;
  std::vector<VertexSet> out;
  for (std::size_t k = 0; k <= n && out.empty(); ++k) {
    // Gosper's hack walks the k-subsets of n bits in increasing order.
    std::uint64_t s = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      if (++scanned > budget.max_subsets) over_budget("subset scan exceeded " + std::to_string(budget.max_subsets));
      if (std::all_of(edge_masks.begin(), edge_masks.end(), [s](std::uint64_t e) { return (e & s) != 0; })) {
        out.push_back(mask_to_set(s));
      }
      if (s == 0) break;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> minimum_covers_by_branching(const BipartiteGraph& g, const OracleBudget& budget) {
  const auto edges = g.edges();
  std::vector<char> chosen(g.vertex_count(), 0);
  std::vector<VertexId> stack;
  std::set<VertexSet> found;
  std::size_t nodes = 0;

  auto search = [&](auto&& self, std::size_t k) -> void {
    if (++nodes > budget.max_subsets) over_budget("cover search exceeded " + std::to_string(budget.max_subsets) + " nodes");
    const auto open = std::find_if(edges.begin(), edges.end(),
                                   [&](const Edge& e) { return !chosen[e.left] && !chosen[e.right]; });
    if (open == edges.end()) {
      found.insert(make_vertex_set(stack));
      return;
    }
    if (stack.size() == k) return;
    for (VertexId v : {open->left, open->right}) {
      chosen[v] = 1;
      stack.push_back(v);
      self(self, k);
      stack.pop_back();
      chosen[v] = 0;
    }
  };
  for (std::size_t k = 0; found.empty(); ++k) search(search, k);
  return {found.begin(), found.end()};
}

std::vector<VertexSet> enumerate_minimum_covers(const BipartiteGraph& g, const OracleBudget& budget) {
  if (g.vertex_count() <= budget.max_vertices && g.vertex_count() <= 63) return all_minimum_covers(g, budget);
  return minimum_covers_by_branching(g, budget);
}

std::vector<Matching> all_matchings(const BipartiteGraph& g, const OracleBudget& budget) {
  const auto edges = g.edges();
  std::vector<Matching> out;
  Matching current(g);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      if (out.size() == budget.max_subsets) over_budget("more than " + std::to_string(budget.max_subsets) + " matchings");
      out.push_back(current);
      return;
    }
    self(self, i + 1);
    const Edge& e = edges[i];
    if (!current.saturated(e.left) && !current.saturated(e.right)) {
      current.insert(g, e);
      self(self, i + 1);
      current.erase(e);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Matching> all_maximal_matchings(const BipartiteGraph& g, const OracleBudget& budget) {
  const std::size_t n = g.vertex_count();
  std::vector<Matching> out;
  Matching current(g);
  // Vertices below the cursor are settled: matched, or free for good.
  auto rec = [&](auto&& self, VertexId v) -> void {
    while (v < n && current.saturated(v)) ++v;
    if (v == n) {
      if (!is_maximal(g, current)) return;
      if (out.size() == budget.max_subsets) {
        over_budget("more than " + std::to_string(budget.max_subsets) + " maximal matchings");
      }
      out.push_back(current);
      return;
    }
    bool can_stay_free = true;
    for (VertexId w : g.neighbors(v)) {
      if (current.saturated(w)) continue;
      if (w < v) {
        can_stay_free = false;
        continue;
      }
      current.insert(g, g.orient(v, w));
      self(self, v + 1);
      current.erase(g.orient(v, w));
    }
    if (can_stay_free) self(self, v + 1);
  };
  rec(rec, 0);
  return out;
}

bool hall_condition(const BipartiteGraph& g, const VertexSet& side_vertices, const OracleBudget& budget) {
  if (side_vertices.size() >= 63 || (std::uint64_t{1} << side_vertices.size()) > budget.max_subsets) {
    over_budget("Hall check over " + std::to_string(side_vertices.size()) + " vertices exceeds the subset budget");
  }
  if (g.vertex_count() > 64) over_budget("Hall check limited to 64 vertices");
  std::vector<std::uint64_t> nbr;
  for (VertexId v : side_vertices) {
    std::uint64_t mask = 0;
    for (VertexId w : g.neighbors(v)) mask |= std::uint64_t{1} << w;
    nbr.push_back(mask);
  }
  const std::uint64_t total = std::uint64_t{1} << side_vertices.size();
  for (std::uint64_t w = 1; w < total; ++w) {
    std::uint64_t hood = 0;
    for (std::uint64_t rest = w; rest; rest &= rest - 1) hood |= nbr[std::countr_zero(rest)];
    if (std::popcount(hood) < std::popcount(w)) return false;
  }
  return true;
}

bool hall_condition(const BipartiteGraph& g, Side side, const OracleBudget& budget) {
  return hall_condition(g, g.vertices_on(side), budget);
}

std::vector<BipartiteGraph> connected_bipartite_corpus(std::size_t max_vertices, const OracleBudget& budget) {
  if (max_vertices > budget.max_vertices) {
    over_budget("corpus of " + std::to_string(max_vertices) + " vertices exceeds the oracle limit of " +
                std::to_string(budget.max_vertices));
  }
  constexpr std::size_t kMaxEdgeBits = 20;
  std::vector<BipartiteGraph> out;
  for (std::size_t nl = 1; nl < max_vertices; ++nl) {
    for (std::size_t nr = nl; nl + nr <= max_vertices; ++nr) {
      const std::size_t bits = nl * nr;
      if (bits > kMaxEdgeBits) {
        over_budget("bipartition " + std::to_string(nl) + "x" + std::to_string(nr) + " needs " +
                    std::to_string(bits) + " edge bits");
      }
      std::vector<std::size_t> perm(nl);
      std::set<std::vector<std::uint32_t>> seen;
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << bits); ++mask) {
        std::vector<std::uint32_t> left_adj(nl, 0);  // bit j: right j
        std::vector<std::uint32_t> right_adj(nr, 0);  // bit i: left i
        for (std::size_t k = 0; k < bits; ++k) {
          if (mask >> k & 1) {
            left_adj[k / nr] |= 1u << (k % nr);
            right_adj[k % nr] |= 1u << (k / nr);
          }
        }
        if (std::find(left_adj.begin(), left_adj.end(), 0u) != left_adj.end()) continue;
        if (std::find(right_adj.begin(), right_adj.end(), 0u) != right_adj.end()) continue;

        // Connectivity: grow left and right masks from left vertex 0.
        std::uint32_t reach_l = 1;
        std::uint32_t reach_r = 0;
        for (bool grew = true; grew;) {
          grew = false;
          for (std::size_t i = 0; i < nl; ++i) {
            if ((reach_l >> i & 1) && (left_adj[i] & ~reach_r)) {
              reach_r |= left_adj[i];
              grew = true;
            }
          }
          for (std::size_t j = 0; j < nr; ++j) {
            if ((reach_r >> j & 1) && (right_adj[j] & ~reach_l)) {
              reach_l |= right_adj[j];
              grew = true;
            }
          }
        }
        if (std::popcount(reach_l) != static_cast<int>(nl) || std::popcount(reach_r) != static_cast<int>(nr)) continue;

        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::uint32_t> best;
        std::vector<std::uint32_t> sig(nr);
        do {
          for (std::size_t j = 0; j < nr; ++j) {
            std::uint32_t s = 0;
            for (std::size_t i = 0; i < nl; ++i) {
              if (right_adj[j] >> i & 1) s |= 1u << perm[i];
            }
            sig[j] = s;
          }
          std::sort(sig.begin(), sig.end());
          if (best.empty() || sig < best) best = sig;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(best).second) continue;

        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t k = 0; k < bits; ++k) {
          if (mask >> k & 1) edges.emplace_back(k / nr, k % nr);
        }
        out.push_back(build_graph(nl, nr, edges));
      }
    }
  }
  return out;
}

}  // namespace konig
