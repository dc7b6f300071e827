#include "icb/ramsey.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "doctest.h"
#include "graphs.hpp"

using namespace icb;

namespace {

RamseyValue rv(GraphClass cls, int i, int j) { return class_ramsey({cls, i, j}); }

bool is_clique_of(const UndirectedGraph& g, const VertexSet& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!g.adjacent(s[a], s[b])) return false;
  return true;
}

bool is_independent_in(const UndirectedGraph& g, const VertexSet& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.adjacent(s[a], s[b])) return false;
  return true;
}

UndirectedGraph from_mask(int order, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b, ++bit)
      if (mask >> bit & 1) edges.emplace_back(a + 1, b + 1);
  return UndirectedGraph(order, std::move(edges));
}

}  // namespace

TEST_CASE("class token parsing") {
  CHECK(parse_graph_class("planar") == GraphClass::Planar);
  CHECK(parse_graph_class("line") == GraphClass::Line);
  CHECK(parse_graph_class("fuzzy") == GraphClass::Fuzzy);
  CHECK(parse_graph_class("general-upper") == GraphClass::GeneralUpper);
  CHECK(parse_graph_class("general_upper") == GraphClass::GeneralUpper);
  CHECK_THROWS_AS(parse_graph_class("chordal"), Error);
  CHECK(graph_class_name(GraphClass::Planar) == "planar");
}

TEST_CASE("base cases hold for every class") {
  for (auto cls : {GraphClass::Planar, GraphClass::Line, GraphClass::Fuzzy,
                   GraphClass::GeneralUpper}) {
    CHECK(rv(cls, 1, 7).value == 1);
    CHECK(rv(cls, 5, 1).value == 1);
    CHECK(rv(cls, 2, 9).value == 9);   // edgeless members force R(2,j) = j
    CHECK(rv(cls, 1, 7).is_upper_bound == false);
  }
  // Classes containing the complete graphs pin R(i,2) = i.
  for (auto cls : {GraphClass::Line, GraphClass::Fuzzy, GraphClass::GeneralUpper})
    CHECK(rv(cls, 7, 2).value == 7);
}

TEST_CASE("planar Ramsey formula") {
  CHECK(rv(GraphClass::Planar, 3, 4).value == 9);   // 3j - 3
  CHECK(rv(GraphClass::Planar, 3, 3).value == 6);
  CHECK(rv(GraphClass::Planar, 3, 10).value == 27);
  CHECK(rv(GraphClass::Planar, 4, 3).value == 9);   // 4j - 3
  CHECK(rv(GraphClass::Planar, 4, 4).value == 13);
  CHECK(rv(GraphClass::Planar, 7, 5).value == 17);
  // i <= 4 keeps R(i,2) = i; beyond that no planar K5 exists, so 5 suffices.
  CHECK(rv(GraphClass::Planar, 2, 2).value == 2);
  CHECK(rv(GraphClass::Planar, 3, 2).value == 3);
  CHECK(rv(GraphClass::Planar, 4, 2).value == 4);
  CHECK(rv(GraphClass::Planar, 5, 2).value == 5);
  CHECK(rv(GraphClass::Planar, 9, 2).value == 5);
  CHECK_FALSE(rv(GraphClass::Planar, 4, 4).is_upper_bound);
}

TEST_CASE("line graph Ramsey formula") {
  CHECK(rv(GraphClass::Line, 3, 3).value == 6);     // floor((5j-3)/2)
  CHECK(rv(GraphClass::Line, 3, 4).value == 8);
  CHECK(rv(GraphClass::Line, 3, 7).value == 16);
  // i >= 4 splits j = t*floor(i/2) + r with 1 <= r <= floor(i/2).
  CHECK(rv(GraphClass::Line, 4, 3).value == 8);     // even i
  CHECK(rv(GraphClass::Line, 4, 4).value == 11);
  CHECK(rv(GraphClass::Line, 6, 5).value == 23);
  CHECK(rv(GraphClass::Line, 5, 4).value == 15);    // odd i
  CHECK(rv(GraphClass::Line, 5, 3).value == 11);
  CHECK(rv(GraphClass::Line, 7, 6).value == 34);
  // The split formula degenerates to the base cases at j <= 2.
  CHECK(rv(GraphClass::Line, 12, 2).value == 12);
  CHECK(rv(GraphClass::Line, 4, 1).value == 1);
}

TEST_CASE("fuzzy circular interval Ramsey formula") {
  CHECK(rv(GraphClass::Fuzzy, 3, 3).value == 6);    // (i-1) * j
  CHECK(rv(GraphClass::Fuzzy, 4, 4).value == 12);
  CHECK(rv(GraphClass::Fuzzy, 5, 3).value == 12);
  CHECK(rv(GraphClass::Fuzzy, 3, 7).value == 14);
  CHECK(rv(GraphClass::Fuzzy, 2, 7).value == 7);    // base case wins
  CHECK(rv(GraphClass::Fuzzy, 7, 2).value == 7);
}

TEST_CASE("general upper bound is the binomial and is flagged") {
  auto r33 = rv(GraphClass::GeneralUpper, 3, 3);
  CHECK(r33.value == 6);
  CHECK(r33.is_upper_bound);
  CHECK(rv(GraphClass::GeneralUpper, 4, 4).value == 20);
  CHECK(rv(GraphClass::GeneralUpper, 3, 5).value == 15);
  CHECK_FALSE(rv(GraphClass::GeneralUpper, 2, 2).is_upper_bound);
}

TEST_CASE("value sources name the producing statement") {
  CHECK(rv(GraphClass::Planar, 3, 4).source == "Lemma 5");
  CHECK(rv(GraphClass::Line, 3, 4).source == "Lemma 6");
  CHECK(rv(GraphClass::Line, 5, 4).source == "Lemma 7");
  CHECK(rv(GraphClass::Fuzzy, 4, 4).source == "Lemma 8");
  CHECK(rv(GraphClass::Fuzzy, 2, 7).source == "Remark 1");
  CHECK(rv(GraphClass::GeneralUpper, 3, 3).source == "Lemma 3 (Erdos-Szekeres)");
}

TEST_CASE("inputs below 1 are rejected") {
  CHECK_THROWS_AS(rv(GraphClass::Planar, 0, 3), Error);
  CHECK_THROWS_AS(rv(GraphClass::Fuzzy, 3, -1), Error);
  CHECK_THROWS_AS(erdos_szekeres_bound(0, 1), Error);
}

TEST_CASE("erdos_szekeres_bound values and overflow") {
  CHECK(erdos_szekeres_bound(1, 1) == 1);
  CHECK(erdos_szekeres_bound(2, 2) == 2);
  CHECK(erdos_szekeres_bound(3, 3) == 6);
  CHECK(erdos_szekeres_bound(3, 4) == 10);
  CHECK(erdos_szekeres_bound(4, 4) == 20);
  CHECK(erdos_szekeres_bound(13, 13) == 2704156);
  CHECK(erdos_szekeres_bound(2, 40) == 40);
  CHECK_THROWS_AS(erdos_szekeres_bound(35, 35), Error);  // C(68,34) > 2^63
}

TEST_CASE("t_k_of_m inverts the bound") {
  auto es = [](int k, int j) { return erdos_szekeres_bound(k, j); };
  CHECK(t_k_of_m(3, 10, es) == 4);   // C(5,2) = 10 <= 10 < C(6,2)
  CHECK(t_k_of_m(3, 9, es) == 3);
  CHECK(t_k_of_m(2, 7, es) == 7);    // R(2,j) = j
  CHECK(t_k_of_m(4, 3, es) == 1);    // only j = 1 fits
  auto planar = [](int k, int j) {
    return class_ramsey({GraphClass::Planar, k, j}).value;
  };
  CHECK(t_k_of_m(3, 10, planar) == 4);   // 3j-3: 9 <= 10 < 12
  CHECK(t_k_of_m(4, 100, planar) == 25); // 4j-3: 97 <= 100 < 101
  CHECK(t_k_of_m(4, 0, es) == 0);        // nothing fits
  // R(1, j) = 1 never exceeds any m, so the max is unbounded.
  CHECK_THROWS_AS(t_k_of_m(1, 5, es), Error);
}

TEST_CASE("pivot extraction returns pinned certificates") {
  auto k6 = ramsey_extract(fixtures::complete(6), 3, 3);
  CHECK(k6.kind == CertificateKind::Clique);
  CHECK(k6.vertices == VertexSet{1, 2, 3});

  UndirectedGraph c5_iso(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  auto deg = ramsey_extract(c5_iso, 3, 3);
  CHECK(deg.kind == CertificateKind::IndependentSet);
  CHECK(deg.vertices == VertexSet{1, 3, 6});

  auto pet = ramsey_extract(fixtures::petersen(), 3, 4);
  CHECK(pet.kind == CertificateKind::IndependentSet);
  CHECK(pet.vertices == VertexSet{1, 3, 9, 10});
}

TEST_CASE("pivot extraction requires enough vertices") {
  CHECK_THROWS_AS(ramsey_extract(fixtures::complete(5), 3, 3), Error);  // needs 6
  CHECK_THROWS_AS(ramsey_extract(fixtures::complete(3), 0, 2), Error);
  // Exactly at the bound is fine.
  auto res = ramsey_extract(fixtures::complete(6), 3, 3);
  CHECK(res.vertices.size() == 3);
}

TEST_CASE("pivot extraction is structurally sound on every 5-vertex graph") {
  for (std::uint32_t mask = 0; mask < 1024; ++mask) {
    UndirectedGraph g = from_mask(5, mask);
    auto res = ramsey_extract(g, 2, 4);  // needs C(4,1) = 4 <= 5
    if (res.kind == CertificateKind::Clique) {
      CHECK(res.vertices.size() == 2);
      CHECK(is_clique_of(g, res.vertices));
    } else {
      CHECK(res.vertices.size() == 4);
      CHECK(is_independent_in(g, res.vertices));
    }
    auto res2 = ramsey_extract(g, 3, 2);  // needs C(3,2) = 3
    if (res2.kind == CertificateKind::Clique) {
      CHECK(res2.vertices.size() == 3);
      CHECK(is_clique_of(g, res2.vertices));
    } else {
      CHECK(res2.vertices.size() == 2);
      CHECK(is_independent_in(g, res2.vertices));
    }
  }
}

TEST_CASE("exhaustive verification confirms the planar value 6 at order 6") {
  auto res = verify_class_ramsey(GraphClass::Planar, 3, 3, 6);
  CHECK(res.holds);
  CHECK(res.graphs_checked == 32768);
  CHECK(res.class_members == 32071);  // frozen from an independent oracle
  CHECK_FALSE(res.counterexample.has_value());
}

TEST_CASE("order 5 fails with a pentagon counterexample") {
  auto res = verify_class_ramsey(GraphClass::Planar, 3, 3, 5);
  CHECK_FALSE(res.holds);
  CHECK(res.graphs_checked == 1024);
  CHECK(res.class_members == 1023);  // everything but K5
  REQUIRE(res.counterexample.has_value());
  // First violating mask in enumeration order is 220, a labeled C5.
  const UndirectedGraph& bad = *res.counterexample;
  CHECK(bad.edges() == std::vector<std::pair<int, int>>{
                           {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}});
}

TEST_CASE("line-graph filter confirms 6 and rejects 5") {
  auto at6 = verify_class_ramsey(GraphClass::Line, 3, 3, 6);
  CHECK(at6.holds);
  CHECK(at6.graphs_checked == 32768);
  CHECK(at6.class_members == 11600);

  auto at5 = verify_class_ramsey(GraphClass::Line, 3, 3, 5);
  CHECK_FALSE(at5.holds);
  CHECK(at5.class_members == 729);
  REQUIRE(at5.counterexample.has_value());
  CHECK(at5.counterexample->edges() == std::vector<std::pair<int, int>>{
                                           {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}});
}

TEST_CASE("R(2,4) holds at 4 and the edgeless graph defeats order 3") {
  auto at4 = verify_class_ramsey(GraphClass::Planar, 2, 4, 4);
  CHECK(at4.holds);
  CHECK(at4.class_members == 64);

  auto at3 = verify_class_ramsey(GraphClass::Planar, 2, 4, 3);
  CHECK_FALSE(at3.holds);
  REQUIRE(at3.counterexample.has_value());
  CHECK(at3.counterexample->edges().empty());
}

TEST_CASE("verification guards its inputs") {
  CHECK_THROWS_AS(verify_class_ramsey(GraphClass::Planar, 3, 3, 8), Error);
  CHECK_THROWS_AS(verify_class_ramsey(GraphClass::Planar, 3, 3, 0), Error);
  CHECK_THROWS_AS(verify_class_ramsey(GraphClass::Fuzzy, 3, 3, 5), Error);
}

TEST_CASE("bilinear and binomial bounds dominate the formulas") {
  for (auto cls : {GraphClass::Planar, GraphClass::Line, GraphClass::Fuzzy}) {
    auto check = bilinear_bound_check(cls, 12, 12);
    CHECK(check.holds);
    CHECK_FALSE(check.first_violation.has_value());
  }
  CHECK_THROWS_AS(bilinear_bound_check(GraphClass::GeneralUpper, 5, 5), Error);
}

TEST_CASE("formula values never drop when i or j grows") {
  for (auto cls : {GraphClass::Planar, GraphClass::Line, GraphClass::Fuzzy}) {
    for (int i = 1; i <= 12; ++i)
      for (int j = 1; j <= 12; ++j) {
        auto here = rv(cls, i, j).value;
        if (i > 1) CHECK(rv(cls, i - 1, j).value <= here);
        if (j > 1) CHECK(rv(cls, i, j - 1).value <= here);
      }
  }
}
