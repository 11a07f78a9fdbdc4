#include "helpers.hpp"
#include "konig/konig.hpp"
#include "konig/path_structure.hpp"

using namespace testing;

namespace {

// Graph on default labels L0.. / R<nl>.. from (left index, right id) pairs.
BipartiteGraph labelled(std::size_t nl, std::size_t nr, std::initializer_list<std::pair<std::size_t, std::size_t>> es) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [l, r] : es) edges.emplace_back(l, r - nl);
  return build_graph(nl, nr, edges);
}

std::vector<std::vector<std::string>> labels_of(const BipartiteGraph& g, const std::vector<AlternatingPath>& ps) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : ps) {
    std::vector<std::string> row;
    for (VertexId v : p.vertices) row.push_back(g.label(v));
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST_CASE("augmenting paths of P4") {
  const auto g = p4();
  const auto paths = enumerate_augmenting_paths(g, matching(g, {{"2", "3"}}));
  CHECK(labels_of(g, paths) == std::vector<std::vector<std::string>>{{"1", "2", "3", "4"}});
  CHECK(enumerate_augmenting_paths(g, matching(g, {{"1", "2"}, {"3", "4"}})).empty());
}

TEST_CASE("augmenting paths of the fork") {
  const auto g = fork_graph();
  const auto m = matching(g, {{"b1", "c1"}});
  const auto paths = enumerate_augmenting_paths(g, m);
  CHECK(labels_of(g, paths) == std::vector<std::vector<std::string>>{{"a1", "b1", "c1", "d1"},
                                                                      {"a1", "b1", "c1", "d2"},
                                                                      {"a1", "b1", "c1", "d3"},
                                                                      {"a2", "b1", "c1", "d1"},
                                                                      {"a2", "b1", "c1", "d2"},
                                                                      {"a2", "b1", "c1", "d3"}});
  for (const auto& p : paths) CHECK(make_alternating_path(g, m, p.vertices).augmenting);
  CHECK(kind_of([&] { enumerate_augmenting_paths(g, m, 5); }) == ErrorKind::kPathExplosion);
}

TEST_CASE("structure of the single P4 path") {
  const auto g = p4();
  const auto m = matching(g, {{"2", "3"}});
  const auto ps = path_structure(g, m, path(g, m, {"1", "2", "3", "4"}));
  CHECK(ps.family.size() == 1);
  CHECK(ps.subgraph.graph.vertex_count() == 4);
  CHECK(ps.subgraph.graph.edge_count() == 3);
  CHECK(ps.root_count == 1);
  CHECK_FALSE(ps.hat_cut_vertex.has_value());
  CHECK_FALSE(ps.check_cut_vertex.has_value());
  CHECK(hat_vertices(ps) == ps.vertices);
  CHECK(check_vertices(ps) == ps.vertices);
  CHECK(hat_subgraph(g, ps).graph.edge_count() == 3);
}

TEST_CASE("paths given end first are read from the left root") {
  const auto g = p4();
  const auto m = matching(g, {{"2", "3"}});
  const auto ps = path_structure(g, m, path(g, m, {"4", "3", "2", "1"}));
  CHECK(ps.base_path.front() == id(g, "1"));
}

TEST_CASE("structure of a fork path spans the whole fork") {
  const auto g = fork_graph();
  const auto m = matching(g, {{"b1", "c1"}});
  const auto p = path(g, m, {"a1", "b1", "c1", "d1"});
  const auto ps = path_structure(g, m, p);
  CHECK(ps.family.size() == 6);
  CHECK(ps.vertices.size() == 7);
  CHECK(ps.subgraph.graph.edge_count() == 6);
  CHECK(ps.root_count == 2);
  CHECK(ps.endpoint_count == 3);

  REQUIRE(ps.hat_cut_vertex.has_value());
  CHECK(*ps.hat_cut_vertex == id(g, "b1"));
  CHECK(hat_vertices(ps) == ids(g, {"c1", "d1", "d2", "d3"}));
  const auto hat = hat_subgraph(g, ps);
  CHECK(hat.graph.vertex_count() == 4);
  CHECK(hat.graph.edge_count() == 3);

  REQUIRE(ps.check_cut_vertex.has_value());
  CHECK(*ps.check_cut_vertex == id(g, "c1"));
  CHECK(check_vertices(ps) == ids(g, {"a1", "a2", "b1"}));
  CHECK(check_subgraph(g, ps).graph.edge_count() == 2);
}

TEST_CASE("non-augmenting base paths are refused") {
  const auto g = p4();
  const auto m = matching(g, {{"1", "2"}, {"3", "4"}});
  CHECK(kind_of([&] { path_structure(g, m, path(g, m, {"1", "2", "3", "4"})); }) == ErrorKind::kNotAugmenting);
  CHECK(kind_of([&] { cover_delta_under_augment(g, m, path(g, m, {"1", "2"})); }) == ErrorKind::kNotAugmenting);
}

TEST_CASE("meet and join") {
  const auto g = fork_graph();
  const auto m = matching(g, {{"b1", "c1"}});
  const auto p = path(g, m, {"a1", "b1", "c1", "d1"});
  const auto q = path(g, m, {"a2", "b1", "c1", "d1"});
  const auto same = meet_join(p, p);
  CHECK(same.join == id(g, "a1"));
  CHECK(same.meet == id(g, "d1"));
  const auto pq = meet_join(p, q);
  CHECK(pq.join == id(g, "b1"));
  CHECK(pq.meet == id(g, "d1"));

  const auto two = build_graph_from_pairs({{"x", "y"}, {"z", "w"}});
  const Matching none(two);
  const auto a = make_alternating_path(two, none, {id(two, "x"), id(two, "y")});
  const auto b = make_alternating_path(two, none, {id(two, "z"), id(two, "w")});
  const auto disjoint = meet_join(a, b);
  CHECK_FALSE(disjoint.join.has_value());
  CHECK_FALSE(disjoint.meet.has_value());
}

TEST_CASE("meet is not symmetric when shared matched edges are crossed in another order") {
  const auto g = labelled(3, 4, {{0, 3}, {0, 4}, {0, 6}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
  const auto m = matching(g, {{"L0", "R3"}, {"L1", "R4"}});
  const auto p = path(g, m, {"L2", "R3", "L0", "R4", "L1", "R5"});
  const auto q = path(g, m, {"L2", "R4", "L1", "R3", "L0", "R6"});
  CHECK(meet_join(p, q).join == meet_join(q, p).join);
  CHECK(meet_join(p, q).meet == id(g, "L1"));
  CHECK(meet_join(q, p).meet == id(g, "L0"));
}

TEST_CASE("classification on the small examples") {
  const auto g = p4();
  CHECK(classify_matching(g, matching(g, {{"2", "3"}})).is_minimum);
  CHECK(classify_matching(g, matching(g, {{"1", "2"}, {"3", "4"}})).is_minimum);
  CHECK(kind_of([&] { classify_matching(g, matching(g, {{"3", "4"}})); }) == ErrorKind::kNotMaximal);

  const auto f = fork_graph();
  const auto verdict = classify_matching(f, matching(f, {{"b1", "c1"}}));
  CHECK_FALSE(verdict.is_minimum);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->unsaturated_right == ids(f, {"d1", "d2", "d3"}));
}

TEST_CASE("cover change under augmentation") {
  const auto g = p4();
  const auto m = matching(g, {{"2", "3"}});
  CHECK(cover_delta_under_augment(g, m, path(g, m, {"1", "2", "3", "4"})) == 0);

  const auto f = fork_graph();
  const auto mf = matching(f, {{"b1", "c1"}});
  for (const auto& p : enumerate_augmenting_paths(f, mf)) CHECK(cover_delta_under_augment(f, mf, p) == 2);
}

TEST_CASE("a single root does not fix the cover set") {
  // P4 with the middle edge: one root, one path, yet the covers differ.
  const auto g = p4();
  const auto m = matching(g, {{"2", "3"}});
  const auto p = path(g, m, {"1", "2", "3", "4"});
  CHECK(path_structure(g, m, p).root_count == 1);
  CHECK(konig_cover(g, m).vertices == ids(g, {"2", "4"}));
  CHECK(konig_cover(g, augment(g, m, p)).vertices == ids(g, {"1", "3"}));
}

TEST_CASE("classification flags a matching whose cover is already minimum") {
  const auto g = labelled(4, 4, {{0, 4}, {0, 5}, {0, 7}, {1, 4}, {1, 6}, {2, 5}, {3, 4}});
  const auto m = matching(g, {{"L0", "R5"}, {"L1", "R4"}});
  REQUIRE(is_maximal(g, m));
  const auto k = konig_cover(g, m).vertices;
  CHECK(k.size() == brute_maximum_matching_size(g));
  CHECK(brute_minimum_covers(g).count(k) == 1);
  CHECK_FALSE(classify_matching(g, m).is_minimum);
}

TEST_CASE("flagged augmenting path without a strict cover decrease") {
  const auto g = labelled(4, 4, {{0, 4}, {0, 5}, {0, 7}, {1, 4}, {1, 6}, {2, 5}, {3, 4}});
  const auto m = matching(g, {{"L0", "R5"}, {"L1", "R4"}});
  const auto p = path(g, m, {"L2", "R5", "L0", "R4", "L1", "R6"});
  const auto ps = path_structure(g, m, p);
  const auto kept = check_vertices(ps);
  std::size_t free_right = 0;
  for (VertexId v : ps.vertices) {
    if (!contains(kept, v) && g.side(v) == Side::kRight && !m.saturated(v)) ++free_right;
  }
  CHECK(free_right >= 2);
  CHECK(cover_delta_under_augment(g, m, p) == 0);
}

TEST_CASE("classification misses a non-minimum cover") {
  const auto g = labelled(3, 4, {{0, 4}, {0, 6}, {1, 3}, {1, 5}, {2, 3}, {2, 4}});
  const auto m = matching(g, {{"L0", "R4"}, {"L1", "R3"}});
  REQUIRE(is_maximal(g, m));
  CHECK(konig_cover(g, m).vertices == ids(g, {"R3", "R4", "R5", "R6"}));
  CHECK(brute_maximum_matching_size(g) == 3);
  CHECK(classify_matching(g, m).is_minimum);
}
