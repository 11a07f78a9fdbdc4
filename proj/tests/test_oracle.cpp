#include <set>

#include "helpers.hpp"
#include "konig/oracle.hpp"

using namespace testing;

namespace {

std::set<std::vector<Edge>> edge_sets(const std::vector<Matching>& ms) {
  std::set<std::vector<Edge>> out;
  for (const auto& m : ms) out.insert(m.edges());
  return out;
}

}  // namespace

TEST_CASE("minimum covers of the examples") {
  const auto g = p4();
  CHECK(all_minimum_covers(g) == std::vector<VertexSet>{ids(g, {"1", "3"}), ids(g, {"2", "3"}), ids(g, {"2", "4"})});

  const auto f = fork_graph();
  const auto covers = all_minimum_covers(f);
  for (const auto& c : covers) CHECK(c.size() == 2);
  CHECK(std::find(covers.begin(), covers.end(), ids(f, {"b1", "c1"})) != covers.end());

  const auto k = k2();
  CHECK(all_minimum_covers(k) == std::vector<VertexSet>{{0}, {1}});
}

TEST_CASE("subset scan and branching agree with brute force") {
  for (const auto& g : connected_bipartite_corpus(6)) {
    const auto brute = brute_minimum_covers(g);
    const std::vector<VertexSet> expected(brute.begin(), brute.end());
    CHECK(all_minimum_covers(g) == expected);
    CHECK(minimum_covers_by_branching(g) == expected);
    CHECK(enumerate_minimum_covers(g) == expected);
  }
}

TEST_CASE("matching counts") {
  CHECK(all_matchings(k2()).size() == 2);
  CHECK(all_matchings(p4()).size() == 5);
  const auto f = fork_graph();
  CHECK(all_matchings(f).size() == brute_matching_count(f));
  for (const auto& g : connected_bipartite_corpus(6)) CHECK(all_matchings(g).size() == brute_matching_count(g));
}

TEST_CASE("maximal matchings") {
  const auto g = p4();
  CHECK(edge_sets(all_maximal_matchings(g)) ==
        edge_sets({matching(g, {{"1", "2"}, {"3", "4"}}), matching(g, {{"2", "3"}})}));
  CHECK(all_maximal_matchings(k2()).size() == 1);

  const auto f = fork_graph();
  std::vector<Matching> expected{matching(f, {{"b1", "c1"}})};
  for (const char* a : {"a1", "a2"}) {
    for (const char* d : {"d1", "d2", "d3"}) expected.push_back(matching(f, {{a, "b1"}, {"c1", d}}));
  }
  CHECK(edge_sets(all_maximal_matchings(f)) == edge_sets(expected));
}

TEST_CASE("Hall's condition") {
  CHECK(hall_condition(k2(), Side::kLeft));
  CHECK(hall_condition(k2(), Side::kRight));
  const auto f = fork_graph();
  CHECK_FALSE(hall_condition(f, Side::kLeft));
  CHECK_FALSE(hall_condition(f, ids(f, {"a1", "a2"})));
  const auto g = p4();
  CHECK(hall_condition(g, ids(g, {"1", "3"})));
}

TEST_CASE("corpus sizes and shape") {
  CHECK(connected_bipartite_corpus(2).size() == 1);
  CHECK(connected_bipartite_corpus(4).size() == 5);
  CHECK(connected_bipartite_corpus(6).size() == 30);
  CHECK(connected_bipartite_corpus(7).size() == 74);
  for (const auto& g : connected_bipartite_corpus(6)) {
    CHECK(is_connected(g));
    CHECK(g.count_on(Side::kLeft) <= g.count_on(Side::kRight));
  }
}

TEST_CASE("budgets") {
  CHECK(kind_of([] { connected_bipartite_corpus(40); }) == ErrorKind::kBudgetExceeded);
  CHECK(kind_of([] { connected_bipartite_corpus(10); }) == ErrorKind::kBudgetExceeded);
  CHECK(kind_of([] { all_minimum_covers(complete(9, 9)); }) == ErrorKind::kBudgetExceeded);
  CHECK(kind_of([] { all_matchings(complete(4, 4), OracleBudget{16, 100}); }) == ErrorKind::kBudgetExceeded);
  CHECK(kind_of([] { all_minimum_covers(complete(4, 4), OracleBudget{16, 10}); }) == ErrorKind::kBudgetExceeded);
  CHECK(kind_of([] { hall_condition(complete(9, 9), Side::kLeft, OracleBudget{16, 100}); }) ==
        ErrorKind::kBudgetExceeded);
}
