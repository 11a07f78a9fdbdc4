#include "konig/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "konig/error.hpp"
#include "konig/konig.hpp"
#include "konig/path_structure.hpp"
#include "konig/reverse.hpp"
#include "konig/star_studded.hpp"

namespace konig {

namespace {

struct Partial {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first;

  template <class Msg>
  void check(bool ok, Msg&& message) {
    ++cases;
    if (ok) return;
    if (violations++ == 0) first = message();
  }
};

struct SubCheck {
  const char* name;
  bool gating;
};

// Runs fn(graph, index, partials) over the corpus and folds the per-graph
// partials in corpus order, so serial and parallel runs report identically.
template <std::size_t K, class F>
std::vector<SuiteResult> sweep(const std::array<SubCheck, K>& specs, const Corpus& corpus, Execution exec, F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  const auto n = static_cast<std::int64_t>(corpus.size());
  std::vector<std::array<Partial, K>> parts(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  auto body = [&](std::int64_t i) {
    try {
      fn(corpus[i], static_cast<std::size_t>(i), parts[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<SuiteResult> out;
  for (std::size_t k = 0; k < K; ++k) {
    SuiteResult r;
    r.name = specs[k].name;
    r.gating = specs[k].gating;
    r.graphs = corpus.size();
    r.seconds = seconds;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Partial& p = parts[i][k];
      r.cases += p.cases;
      if (p.violations && r.violations == 0) r.first_counterexample = p.first;
      r.violations += p.violations;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string describe_matching(const BipartiteGraph& g, const Matching& m) {
  std::string s = "{";
  for (const Edge& e : m.edges()) {
    if (s.size() > 1) s += ' ';
    s += g.label(e.left) + "-" + g.label(e.right);
  }
  return s + "}";
}

std::string describe_path(const BipartiteGraph& g, const AlternatingPath& p) {
  std::string s;
  for (VertexId v : p.vertices) s += (s.empty() ? "" : "-") + g.label(v);
  return s;
}

std::size_t count_in(const VertexSet& a, const VertexSet& within) {
  return static_cast<std::size_t>(
      std::count_if(a.begin(), a.end(), [&](VertexId v) { return contains(within, v); }));
}

bool is_oracle_cover(const std::vector<VertexSet>& covers, const VertexSet& s) {
  return std::binary_search(covers.begin(), covers.end(), s);
}

}  // namespace

std::string describe(const BipartiteGraph& g) {
  std::string s = "edges [";
  bool first = true;
  for (const Edge& e : g.edges()) {
    s += (first ? "" : " ") + g.label(e.left) + "-" + g.label(e.right);
    first = false;
  }
  return s + "]";
}

std::string describe(const BipartiteGraph& g, const std::vector<VertexId>& vertices) {
  std::string s = "{";
  for (VertexId v : vertices) s += (s.size() > 1 ? "," : "") + g.label(v);
  return s + "}";
}

std::vector<SuiteResult> suite_konig_equality(const Corpus& corpus, Execution exec) {
  static const std::array<SubCheck, 3> specs{{{"konig_equality", true},
                                               {"maximum_matching_cover_is_minimum", true},
                                               {"maximum_matching_vs_enumeration", true}}};
  return sweep(specs, corpus, exec, [](const BipartiteGraph& g, std::size_t, auto& part) {
    const Matching mm = maximum_matching(g);
    const auto covers = all_minimum_covers(g);
    part[0].check(covers.front().size() == mm.size(), [&] {
      return describe(g) + ": maximum matching " + std::to_string(mm.size()) + ", minimum cover " +
             std::to_string(covers.front().size());
    });
    const VertexSet k = konig_cover(g, mm).vertices;
    part[1].check(is_oracle_cover(covers, k), [&] {
      return describe(g) + ": K" + describe_matching(g, mm) + " = " + describe(g, k) + " is not minimum";
    });
    std::size_t best = 0;
    for (const Matching& m : all_matchings(g)) best = std::max(best, m.size());
    part[2].check(best == mm.size(), [&] {
      return describe(g) + ": enumeration finds " + std::to_string(best) + ", augmentation " + std::to_string(mm.size());
    });
  });
}

std::vector<SuiteResult> suite_reverse(const Corpus& corpus, Execution exec, std::size_t exhaustive_roots,
                                       std::size_t samples) {
  static const std::array<SubCheck, 4> specs{{{"reverse_round_trip", true},
                                               {"lone_neighbour", true},
                                               {"hall_down_saturation", true},
                                               {"visit_order_dependence", false}}};
  return sweep(specs, corpus, exec, [&](const BipartiteGraph& g, std::size_t index, auto& part) {
    for (const VertexSet& c : all_minimum_covers(g)) {
      const std::vector<VertexId> base_order = default_visit_order(g, c);
      std::vector<std::vector<VertexId>> orders{base_order};
      if (base_order.size() <= exhaustive_roots) {
        std::vector<VertexId> perm = base_order;
        while (std::next_permutation(perm.begin(), perm.end())) orders.push_back(perm);
      } else {
        std::mt19937_64 rng = trial_engine(0x5eed, index);
        for (std::size_t s = 0; s < samples; ++s) {
          std::vector<VertexId> perm = base_order;
          std::shuffle(perm.begin(), perm.end(), rng);
          orders.push_back(perm);
        }
      }

      const CoverSplit split = split_by_cover(g, c);
      std::set<std::vector<Edge>> uppers;
      for (const auto& order : orders) {
        std::string failure;
        try {
          const ReverseResult r = reverse_konig(g, c, order);
          uppers.insert(r.m_up.edges());
          const auto lone = lone_neighbour_violations(g, split, r.m_up);
          part[1].check(lone.empty(), [&] {
            return describe(g) + ", cover " + describe(g, c) + ", order " + describe(g, order) + ": " +
                   g.label(lone.front().first) + " and " + g.label(lone.front().second) +
                   " both free, upper matching " + describe_matching(g, r.m_up);
          });
        } catch (const Error& e) {
          failure = e.what();
        }
        part[0].check(failure.empty(), [&] {
          return describe(g) + ", cover " + describe(g, c) + ", order " + describe(g, order) + ": " + failure;
        });
      }
      part[3].check(uppers.size() <= 1, [&] {
        return describe(g) + ", cover " + describe(g, c) + ": " + std::to_string(uppers.size()) +
               " distinct upper matchings across visit orders";
      });

      VertexSet down_left;
      for (VertexId v : c) {
        if (g.component_side(v) == Side::kLeft) down_left.push_back(*split.down.local_of(v));
      }
      const bool hall = hall_condition(split.down.graph, make_vertex_set(down_left));
      bool saturated = true;
      try {
        saturating_matching_down(g, split, c);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kSaturationImpossible) throw;
        saturated = false;
      }
      part[2].check(hall == saturated, [&] { return describe(g) + ", cover " + describe(g, c); });
    }
  });
}

std::vector<SuiteResult> suite_cover_surjectivity(const Corpus& corpus, Execution exec) {
  static const std::array<SubCheck, 1> specs{{{"cover_surjectivity", true}}};
  return sweep(specs, corpus, exec, [](const BipartiteGraph& g, std::size_t, auto& part) {
    const auto covers = all_minimum_covers(g);
    const std::size_t nu = covers.front().size();
    std::set<VertexSet> reached;
    for (const Matching& m : all_matchings(g)) {
      VertexSet k = konig_cover(g, m).vertices;
      if (is_minimum_cover(g, k, nu)) reached.insert(std::move(k));
    }
    const std::set<VertexSet> expected(covers.begin(), covers.end());
    part[0].check(reached == expected, [&] {
      return describe(g) + ": " + std::to_string(reached.size()) + " covers reached, " +
             std::to_string(expected.size()) + " minimum covers exist";
    });
  });
}

std::vector<SuiteResult> suite_classification(const Corpus& corpus, Execution exec) {
  static const std::array<SubCheck, 2> specs{{{"classification_agreement", true},
                                               {"shrinking_augmentation_agreement", false}}};
  return sweep(specs, corpus, exec, [](const BipartiteGraph& g, std::size_t, auto& part) {
    const std::size_t nu = maximum_matching(g).size();
    for (const Matching& m : all_maximal_matchings(g)) {
      const VertexSet k = konig_cover(g, m).vertices;
      const bool truth = is_minimum_cover(g, k, nu);
      const auto paths = enumerate_augmenting_paths(g, m);
      const ClassificationVerdict verdict = classify_matching(g, m, paths);
      part[0].check(verdict.is_minimum == truth, [&] {
        std::string s = describe(g) + ", matching " + describe_matching(g, m) + ": cover " + describe(g, k) +
                        (truth ? " is minimum but classified non-minimum" : " is not minimum but classified minimum");
        if (verdict.witness) {
          s += " (path " + describe_path(g, verdict.witness->path) + ", free right " +
               describe(g, verdict.witness->unsaturated_right) + ")";
        }
        return s;
      });
      const bool shrinks = std::any_of(paths.begin(), paths.end(), [&](const AlternatingPath& p) {
        return cover_delta_under_augment(g, m, p) > 0;
      });
      part[1].check(shrinks == !truth, [&] { return describe(g) + ", matching " + describe_matching(g, m); });
    }
  });
}

std::vector<SuiteResult> suite_cycle_fibers(const Corpus& corpus, Execution exec) {
  static const std::array<SubCheck, 1> specs{{{"cycle_fiber_invariance", true}}};
  return sweep(specs, corpus, exec, [](const BipartiteGraph& g, std::size_t, auto& part) {
    const auto matchings = all_matchings(g);
    std::vector<VertexSet> covers;
    for (const Matching& m : matchings) covers.push_back(konig_cover(g, m).vertices);
    for (std::size_t i = 0; i < matchings.size(); ++i) {
      for (std::size_t j = i + 1; j < matchings.size(); ++j) {
        const auto diff = symmetric_difference(matchings[i], matchings[j]);
        if (!is_disjoint_cycle_union(g, diff)) continue;
        part[0].check(covers[i] == covers[j], [&] {
          return describe(g) + ": " + describe_matching(g, matchings[i]) + " and " +
                 describe_matching(g, matchings[j]) + " give " + describe(g, covers[i]) + " and " +
                 describe(g, covers[j]);
        });
      }
    }
  });
}

std::vector<SuiteResult> suite_maximal_matching_covers(const Corpus& corpus, Execution exec) {
  static const std::array<SubCheck, 3> specs{{{"matched_edge_one_endpoint", true},
                                               {"maximal_gives_minimal_cover", true},
                                               {"non_maximal_gives_cover", false}}};
  return sweep(specs, corpus, exec, [](const BipartiteGraph& g, std::size_t, auto& part) {
    for (const Matching& m : all_matchings(g)) {
      const VertexCover k = konig_cover(g, m);
      if (!is_maximal(g, m)) {
        part[2].check(k.is_cover, [&] { return describe(g) + ", matching " + describe_matching(g, m); });
        continue;
      }
      for (const Edge& e : m.edges()) {
        part[0].check(contains(k.vertices, e.left) != contains(k.vertices, e.right), [&] {
          return describe(g) + ", matching " + describe_matching(g, m) + ": edge " + g.label(e.left) + "-" +
                 g.label(e.right) + " vs cover " + describe(g, k.vertices);
        });
      }
      part[1].check(k.is_cover && is_minimal_cover(g, k.vertices), [&] {
        return describe(g) + ", matching " + describe_matching(g, m) + ": cover " + describe(g, k.vertices);
      });
    }
  });
}

std::vector<SuiteResult> suite_path_structure(const Corpus& corpus, Execution exec) {
  static const std::array<SubCheck, 12> specs{{{"localization", true},
                                                {"unique_root_equality", true},
                                                {"strict_decrease", true},
                                                {"hat_equivalence", true},
                                                {"endpoint_intersection", true},
                                                {"meet_join_symmetry", true},
                                                {"cut_vertex_sides", true},
                                                {"localization_free_vertices", false},
                                                {"localization_free_vertices_root_family", false},
                                                {"unique_root_cardinality", false},
                                                {"unique_root_and_endpoint_cardinality", false},
                                                {"unique_root_and_endpoint_cardinality_root_family", false}}};
  return sweep(specs, corpus, exec, [](const BipartiteGraph& g, std::size_t, auto& part) {
    for (const Matching& m : all_maximal_matchings(g)) {
      const auto paths = enumerate_augmenting_paths(g, m);
      if (paths.empty()) continue;
      const VertexSet k1 = konig_cover(g, m).vertices;
      for (const AlternatingPath& p : paths) {
        const Matching flipped = augment(g, m, p);
        const VertexSet k2 = konig_cover(g, flipped).vertices;
        const std::string where =
            describe(g) + ", matching " + describe_matching(g, m) + ", path " + describe_path(g, p);
        const PathStructure ps = path_structure(g, m, p, paths);
        const PathStructure rooted = path_structure(g, m, p, paths, FamilyMode::kEdgeOrRoot);

        for (VertexId r = 0; r < g.vertex_count(); ++r) {
          if (contains(ps.vertices, r)) continue;
          const bool in1 = contains(k1, r);
          const bool in2 = contains(k2, r) || (m.saturated(r) && contains(k2, m.mate(r)));
          part[0].check(in1 == in2, [&] {
            return where + ": vertex " + g.label(r) + " before " + describe(g, k1) + " after " + describe(g, k2);
          });
          if (!m.saturated(r)) {
            part[7].check(in1 == contains(k2, r), [&] { return where + ": vertex " + g.label(r); });
          }
        }
        for (VertexId r = 0; r < g.vertex_count(); ++r) {
          if (contains(rooted.vertices, r) || m.saturated(r)) continue;
          part[8].check(contains(k1, r) == contains(k2, r), [&] { return where + ": vertex " + g.label(r); });
        }

        if (ps.root_count == 1) {
          part[1].check(k1 == k2, [&] { return where + ": " + describe(g, k1) + " vs " + describe(g, k2); });
          part[9].check(k1.size() == k2.size(), [&] { return where; });
          if (ps.endpoint_count == 1) part[10].check(k1.size() == k2.size(), [&] { return where; });
        }
        if (rooted.root_count == 1 && rooted.endpoint_count == 1) {
          part[11].check(k1.size() == k2.size(), [&] { return where; });
        }

        const VertexSet kept = check_vertices(ps);
        std::size_t free_right = 0;
        for (VertexId v : ps.vertices) {
          if (!contains(kept, v) && g.component_side(v) == Side::kRight && !m.saturated(v)) ++free_right;
        }
        if (free_right >= 2) {
          part[2].check(k1.size() > k2.size(), [&] {
            return where + ": cover size " + std::to_string(k1.size()) + " -> " + std::to_string(k2.size());
          });
        }

        const VertexSet hat = hat_vertices(ps);
        const bool whole = count_in(k1, ps.vertices) == count_in(k2, ps.vertices);
        const bool truncated = count_in(k1, hat) == count_in(k2, hat);
        part[3].check(whole == truncated, [&] { return where + ": hat part " + describe(g, hat); });

        if (ps.hat_cut_vertex) {
          part[6].check(g.component_side(*ps.hat_cut_vertex) == Side::kRight,
                        [&] { return where + ": hat cut " + g.label(*ps.hat_cut_vertex); });
        }
        if (ps.check_cut_vertex) {
          const VertexId u = *ps.check_cut_vertex;
          part[6].check(g.component_side(u) == Side::kLeft && m.saturated(u),
                        [&] { return where + ": check cut " + g.label(u); });
        }

        for (const AlternatingPath& q : ps.family) {
          const auto q_edges = q.edges(g);
          const auto p_edges = p.edges(g);
          std::vector<VertexId> shared;
          for (VertexId v : q.vertices) {
            if (std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end()) shared.push_back(v);
          }
          const bool edge_shared = std::any_of(q_edges.begin(), q_edges.end(), [&](const Edge& e) {
            return std::find(p_edges.begin(), p_edges.end(), e) != p_edges.end();
          });
          const bool endpoints_only = std::all_of(shared.begin(), shared.end(), [&](VertexId v) {
            return (v == p.front() || v == p.back()) && (v == q.front() || v == q.back());
          });
          part[4].check(shared.empty() || edge_shared || endpoints_only,
                        [&] { return where + ": family path " + describe_path(g, q); });

          const MeetJoin pq = meet_join(p, q);
          const MeetJoin qp = meet_join(q, p);
          part[5].check(pq.join == qp.join && pq.meet == qp.meet,
                        [&] { return where + ": family path " + describe_path(g, q); });
        }
      }
    }
  });
}

std::vector<SuiteResult> suite_star_studded(const Corpus& corpus, Execution exec) {
  static const std::array<SubCheck, 3> specs{{{"star_studded_enumerative", true},
                                               {"star_studded_restriction_reaches_base_covers", true},
                                               {"star_studded_lift_restrict_bijection", true}}};
  return sweep(specs, corpus, exec, [](const BipartiteGraph& h, std::size_t, auto& part) {
    const StarStuddedGraph ssg = star_stud(h);
    const auto base_covers = all_minimum_covers(h);
    const auto full_covers = enumerate_minimum_covers(ssg.full);
    std::set<VertexSet> reached;
    for (const Matching& m : all_maximal_matchings(ssg.full)) reached.insert(konig_cover(ssg.full, m).vertices);

    const bool eke = std::all_of(full_covers.begin(), full_covers.end(),
                                 [&](const VertexSet& c) { return reached.count(c) > 0; });
    part[0].check(eke, [&] { return "St of " + describe(h) + " misses a minimum cover"; });

    std::set<VertexSet> restricted;
    for (const VertexSet& k : reached) {
      if (std::binary_search(full_covers.begin(), full_covers.end(), k)) restricted.insert(restrict_cover(ssg, k));
    }
    for (const VertexSet& c : base_covers) {
      part[1].check(restricted.count(c) > 0, [&] { return describe(h) + ": cover " + describe(h, c); });
    }

    std::set<VertexSet> lifted;
    bool inverse = true;
    for (const VertexSet& c : base_covers) {
      VertexSet up = lift_cover(ssg, c);
      inverse = inverse && restrict_cover(ssg, up) == c;
      lifted.insert(std::move(up));
    }
    part[2].check(inverse && lifted == std::set<VertexSet>(full_covers.begin(), full_covers.end()), [&] {
      return describe(h) + ": " + std::to_string(base_covers.size()) + " base covers, " +
             std::to_string(full_covers.size()) + " star-studded covers";
    });
  });
}

std::vector<SuiteResult> suite_oracle_consistency(const Corpus& corpus, Execution exec) {
  static const std::array<SubCheck, 3> specs{{{"maximal_matchings_filter", true},
                                               {"cover_search_agreement", true},
                                               {"hall_saturation", true}}};
  return sweep(specs, corpus, exec, [](const BipartiteGraph& g, std::size_t, auto& part) {
    std::set<std::vector<Edge>> filtered;
    for (const Matching& m : all_matchings(g)) {
      if (is_maximal(g, m)) filtered.insert(m.edges());
    }
    std::set<std::vector<Edge>> direct;
    for (const Matching& m : all_maximal_matchings(g)) direct.insert(m.edges());
    part[0].check(filtered == direct, [&] { return describe(g); });

    part[1].check(all_minimum_covers(g) == minimum_covers_by_branching(g), [&] { return describe(g); });

    const Matching mm = maximum_matching(g);
    for (Side s : {Side::kLeft, Side::kRight}) {
      const VertexSet side = g.vertices_on(s);
      const bool saturated = std::all_of(side.begin(), side.end(), [&](VertexId v) { return mm.saturated(v); });
      part[2].check(hall_condition(g, s) == saturated, [&] { return describe(g); });
    }
  });
}

SuiteResult experiment_oracle_agreement(const TrialConfig& cfg) {
  cfg.validate();
  if (cfg.n_left + cfg.n_right > 12) throw Error(ErrorKind::kBudgetExceeded, "oracle agreement needs at most 12 vertices");
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  r.name = "experiment_oracle_agreement";
  Partial part;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    auto rng = trial_engine(cfg.rng_seed, i);
    const BipartiteGraph g = random_bipartite(cfg, rng);
    const Matching m = random_maximal_matching(g, rng);
    const TrialRecord rec = run_trial(cfg, i);
    const auto covers = all_minimum_covers(g);
    const VertexSet k = konig_cover(g, m).vertices;
    part.check(rec.is_minimum == is_oracle_cover(covers, k) && rec.min_cover_size == covers.front().size(), [&] {
      return "trial " + std::to_string(i) + ": " + describe(g) + ", matching " + describe_matching(g, m);
    });
  }
  r.graphs = cfg.trials;
  r.cases = part.cases;
  r.violations = part.violations;
  r.first_counterexample = part.first;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool VerifyReport::ok() const {
  return std::none_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.gating && !s.passed(); });
}

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> groups{"oracle",         "konig",        "reverse",
                                               "surjectivity",   "classification", "cycle-fibers",
                                               "maximal-covers", "path-structure", "star-studded"};
  return groups;
}

VerifyReport corpus_verify(std::size_t max_vertices, Execution exec, const std::vector<std::string>& groups,
                           const OracleBudget& budget) {
  for (const std::string& name : groups) {
    if (std::find(suite_groups().begin(), suite_groups().end(), name) == suite_groups().end()) {
      throw Error(ErrorKind::kInvalidArgument, "unknown suite group '" + name + "'");
    }
  }
  auto wanted = [&](const std::string& name) {
    return groups.empty() || std::find(groups.begin(), groups.end(), name) != groups.end();
  };

  VerifyReport report;
  report.max_vertices = max_vertices;
  const Corpus corpus = connected_bipartite_corpus(max_vertices, budget);
  report.graphs = corpus.size();

  const std::vector<std::pair<std::string, std::function<std::vector<SuiteResult>()>>> runs{
      {"oracle", [&] { return suite_oracle_consistency(corpus, exec); }},
      {"konig", [&] { return suite_konig_equality(corpus, exec); }},
      {"reverse", [&] { return suite_reverse(corpus, exec); }},
      {"surjectivity", [&] { return suite_cover_surjectivity(corpus, exec); }},
      {"classification", [&] { return suite_classification(corpus, exec); }},
      {"cycle-fibers", [&] { return suite_cycle_fibers(corpus, exec); }},
      {"maximal-covers", [&] { return suite_maximal_matching_covers(corpus, exec); }},
      {"path-structure", [&] { return suite_path_structure(corpus, exec); }},
      {"star-studded",
       [&] { return suite_star_studded(connected_bipartite_corpus(std::min<std::size_t>(max_vertices, 6), budget), exec); }},
  };
  for (const auto& [name, run] : runs) {
    if (!wanted(name)) continue;
    for (SuiteResult& r : run()) report.suites.push_back(std::move(r));
  }
  return report;
}

}  // namespace konig
