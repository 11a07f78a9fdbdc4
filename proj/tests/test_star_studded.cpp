#include <set>

#include "helpers.hpp"
#include "konig/konig.hpp"
#include "konig/oracle.hpp"
#include "konig/star_studded.hpp"

using namespace testing;

namespace {

// Minimum covers reached as the Kőnig cover of a maximal matching, by direct
// enumeration of all matchings.
std::set<VertexSet> reached(const BipartiteGraph& g) {
  std::set<VertexSet> out;
  for (const auto& m : all_matchings(g)) {
    if (!is_maximal(g, m)) continue;
    out.insert(konig_cover(g, m).vertices);
  }
  return out;
}

bool eke_by_hand(const BipartiteGraph& g) {
  const auto covers = brute_minimum_covers(g);
  const auto hit = reached(g);
  for (const auto& c : covers) {
    if (!hit.count(c)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sizes of the star-studded graph") {
  const auto k = star_stud(k2());
  CHECK(k.full.vertex_count() == 10);
  CHECK(k.full.edge_count() == 9);
  const auto s = star_stud(p4());
  CHECK(s.full.vertex_count() == 20);
  CHECK(s.full.edge_count() == 19);
}

TEST_CASE("stars hang off the right sides") {
  const auto h = p4();
  const auto s = star_stud(h);
  for (VertexId x = 0; x < h.vertex_count(); ++x) {
    CHECK(s.is_base_vertex(x));
    CHECK(s.full.label(x) == h.label(x));
    const auto& [center, a, b, c] = s.attachment[x];
    CHECK_FALSE(s.is_base_vertex(center));
    CHECK(s.full.has_edge(x, center));
    CHECK(s.full.side(center) != s.full.side(x));
    for (VertexId leaf : {a, b, c}) {
      CHECK(s.full.has_edge(center, leaf));
      CHECK(s.full.side(leaf) == s.full.side(x));
      CHECK(s.full.degree(leaf) == 1);
    }
    CHECK(s.full.degree(center) == 4);
  }
  CHECK(s.full.label(s.attachment[0][0]) == h.label(0) + "*");
}

TEST_CASE("empty sides are refused") {
  const auto lonely = build_graph(1, 0, {});
  CHECK(kind_of([&] { star_stud(lonely); }) == ErrorKind::kEmptyGraph);
}

TEST_CASE("lift and restrict") {
  const auto h = p4();
  const auto s = star_stud(h);
  const auto c = ids(h, {"2", "3"});
  const auto lifted = lift_cover(s, c);
  CHECK(lifted.size() == 6);
  CHECK(is_minimum_cover(s.full, lifted));
  CHECK(restrict_cover(s, lifted) == c);
  CHECK(lift_cover(star_stud(k2()), VertexSet{0}).size() == 3);
  CHECK(kind_of([&] { lift_cover(s, ids(h, {"1", "2", "3"})); }) == ErrorKind::kNotMinimumCover);
  CHECK(kind_of([&] { restrict_cover(s, c); }) == ErrorKind::kNotMinimumCover);
}

TEST_CASE("enumerative Konig-Egervary property") {
  const auto h = p4();
  CHECK_FALSE(is_enumeratively_konig_egervary(h));
  CHECK_FALSE(eke_by_hand(h));
  CHECK(is_enumeratively_konig_egervary(k2()) == eke_by_hand(k2()));
  CHECK(is_enumeratively_konig_egervary(star_stud(h).full));
  CHECK(is_enumeratively_konig_egervary(star_stud(k2()).full));
  CHECK(eke_by_hand(star_stud(k2()).full));
}

TEST_CASE("star studding on the small corpus") {
  for (const auto& h : connected_bipartite_corpus(4)) {
    const auto s = star_stud(h);
    CHECK(is_enumeratively_konig_egervary(s.full));
    std::set<VertexSet> restricted;
    for (const auto& c : reached(s.full)) {
      if (is_minimum_cover(s.full, c)) restricted.insert(restrict_cover(s, c));
    }
    CHECK(restricted == brute_minimum_covers(h));
  }
}
