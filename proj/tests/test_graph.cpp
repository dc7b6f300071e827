#include <doctest.h>

#include "icb/graph.hpp"

#include <algorithm>

using namespace icb;

namespace {

// Running example: 3 receivers, A_1 = {2,3}, A_2 = {1}, A_3 = {1,2}.
const char* kFig1 =
    "# three receivers\n"
    "n 3\n"
    "mode directed\n"
    "e 2 1\n"
    "e 3 1\n"
    "e 1 2\n"
    "e 1 3\n"
    "e 2 3\n";

SideInfoGraph fig1() { return parse_graph(kFig1); }

SideInfoGraph cycle3() {
  return SideInfoGraph(3, Mode::Directed, {{1, 2}, {2, 3}, {3, 1}});
}

UndirectedGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i, i % n + 1);
  return UndirectedGraph(n, std::move(e));
}

}  // namespace

TEST_CASE("parse: running example") {
  SideInfoGraph g = fig1();
  CHECK(g.n() == 3);
  CHECK(g.mode() == Mode::Directed);
  CHECK(g.arc_count() == 5);
  CHECK(g.side_info(1) == VertexSet{2, 3});
  CHECK(g.side_info(2) == VertexSet{1});
  CHECK(g.side_info(3) == VertexSet{1, 2});
  CHECK(g.has_arc(2, 3));
  CHECK_FALSE(g.has_arc(3, 2));
}

TEST_CASE("parse: edgeless and undirected mode") {
  SideInfoGraph e = parse_graph("n 3\nmode directed\n");
  CHECK(e.n() == 3);
  CHECK(e.arc_count() == 0);

  SideInfoGraph u = parse_graph("n 4\nmode undirected\ne 1 2\ne 3 4\n");
  CHECK(u.arc_count() == 4);  // each edge line symmetrized
  CHECK(u.has_arc(2, 1));
  CHECK(u.has_arc(4, 3));
}

TEST_CASE("parse: duplicate arcs collapse") {
  SideInfoGraph g = parse_graph("n 2\nmode directed\ne 1 2\ne 1 2\n");
  CHECK(g.arc_count() == 1);
}

TEST_CASE("parse: malformed inputs") {
  auto kind = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;  // "did not throw" marker
  };
  CHECK(kind("n 3\nmode directed\ne 1 1\n") == ErrorKind::Parse);   // self-loop
  CHECK(kind("n 3\nmode directed\ne 1 4\n") == ErrorKind::Parse);   // range
  CHECK(kind("mode directed\n") == ErrorKind::Parse);               // n missing
  CHECK(kind("n 3\n") == ErrorKind::Parse);                         // mode missing
  CHECK(kind("n 3\nn 3\nmode directed\n") == ErrorKind::Parse);     // duplicate n
  CHECK(kind("n 3\nmode directed\nmode directed\n") == ErrorKind::Parse);
  CHECK(kind("n 3\nmode sideways\n") == ErrorKind::Parse);
  CHECK(kind("n 3\nmode directed\nedge 1 2\n") == ErrorKind::Parse);
  CHECK(kind("n 3\nmode directed\ne 1 2 3\n") == ErrorKind::Parse);  // trailing
  CHECK(kind("e 1 2\nn 3\nmode directed\n") == ErrorKind::Parse);    // order
  CHECK(kind("n 0\nmode directed\n") == ErrorKind::Parse);
}

TEST_CASE("constructors validate") {
  CHECK_THROWS_AS(SideInfoGraph(0, Mode::Directed, {}), Error);
  CHECK_THROWS_AS(SideInfoGraph(3, Mode::Directed, {{1, 1}}), Error);
  CHECK_THROWS_AS(SideInfoGraph(3, Mode::Directed, {{1, 4}}), Error);
  CHECK_THROWS_AS(SideInfoGraph(3, Mode::Undirected, {{1, 2}}), Error);  // asymmetric
  CHECK_THROWS_AS(UndirectedGraph(2, {{1, 1}}), Error);
  CHECK_THROWS_AS(UndirectedGraph(2, {{0, 1}}), Error);
  CHECK(UndirectedGraph(3, {{2, 1}, {1, 2}}).edge_count() == 1);
}

TEST_CASE("serialize: canonical and round-trips") {
  SideInfoGraph g = fig1();
  std::string s = serialize_graph(g);
  CHECK(s == "n 3\nmode directed\ne 1 2\ne 1 3\ne 2 1\ne 2 3\ne 3 1\n");
  CHECK(parse_graph(s) == g);

  SideInfoGraph c5 = cycle_graph(5).as_side_info();
  std::string su = serialize_graph(c5);
  CHECK(su == "n 5\nmode undirected\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");
  CHECK(parse_graph(su) == c5);
}

TEST_CASE("complement") {
  // All six ordered pairs minus the five arcs leaves one arc.
  SideInfoGraph comp = complement(fig1());
  CHECK(comp.arcs() == std::vector<Arc>{{3, 2}});
  CHECK(complement(comp) == fig1());

  SideInfoGraph k3 = UndirectedGraph(3, {{1, 2}, {1, 3}, {2, 3}}).as_side_info();
  CHECK(complement(k3).arc_count() == 0);

  UndirectedGraph c6c = cycle_graph(6).complement();
  CHECK(c6c.edges() == std::vector<std::pair<int, int>>{
                           {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {2, 6},
                           {3, 5}, {3, 6}, {4, 6}});
  CHECK(c6c.complement() == cycle_graph(6));
}

TEST_CASE("underlying undirected and bidirectional core") {
  SideInfoGraph g = fig1();
  CHECK(underlying_undirected(g).edges() ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(bidirectional_core(g).edges() ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});

  SideInfoGraph t = cycle3();  // a tournament-like orientation: no 2-cycles
  CHECK(bidirectional_core(t).edge_count() == 0);
  CHECK(underlying_undirected(t).edge_count() == 3);

  SideInfoGraph u = cycle_graph(5).as_side_info();
  CHECK(underlying_undirected(u) == bidirectional_core(u));
}

TEST_CASE("induced subgraph") {
  SideInfoGraph g = fig1();
  SideInfoGraph sub = induced_subgraph(g, {2, 3});
  CHECK(sub.n() == 2);
  CHECK(sub.arcs() == std::vector<Arc>{{1, 2}});  // old 2->3

  VertexSet all{1, 2, 3};
  CHECK(induced_subgraph(g, all) == g);
  CHECK(induced_subgraph(g, {2}).arc_count() == 0);

  CHECK_THROWS_AS(induced_subgraph(g, {}), Error);
  CHECK_THROWS_AS(induced_subgraph(g, {1, 1}), Error);
  CHECK_THROWS_AS(induced_subgraph(g, {4}), Error);
}

TEST_CASE("induced subgraph composes") {
  SideInfoGraph d8(8, Mode::Directed,
                   {{1, 2}, {1, 5}, {1, 6}, {2, 8}, {3, 8}, {4, 2}, {4, 3},
                    {4, 5}, {4, 6}, {4, 7}, {4, 8}, {5, 1}, {5, 2}, {5, 3},
                    {5, 6}, {6, 1}, {6, 2}, {6, 3}, {6, 5}, {7, 3}, {7, 4},
                    {7, 5}, {7, 6}, {8, 1}, {8, 2}, {8, 5}, {8, 7}});
  // Inducing on {2,3,4,5} then on (new) {2,3} equals inducing on (old) {3,4}.
  SideInfoGraph two_step = induced_subgraph(induced_subgraph(d8, {2, 3, 4, 5}), {2, 3});
  CHECK(two_step == induced_subgraph(d8, {3, 4}));
}

TEST_CASE("undirected graph accessors") {
  UndirectedGraph c5 = cycle_graph(5);
  CHECK(c5.degree(1) == 2);
  CHECK(c5.neighbors(1) == VertexSet{2, 5});
  CHECK(c5.adjacent(1, 5));
  CHECK_FALSE(c5.adjacent(1, 3));
  CHECK(c5.adj_mask64(1) == ((1u << 1) | (1u << 4)));
  UndirectedGraph p = c5.induced({2, 3, 4});  // path on 3 vertices
  CHECK(p.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
}
