#include <doctest.h>

#include "icb/simplex.hpp"

using namespace icb;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("lp: two covering constraints") {
  // min x+y  s.t.  x+2y >= 3,  2x+y >= 3  ->  2 at (1,1)
  LpResult r = solve_lp({{q(1), q(2)}, {q(2), q(1)}}, {q(3), q(3)},
                        {Relation::GreaterEq, Relation::GreaterEq}, {q(1), q(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == q(2));
  CHECK(r.x[0] == q(1));
  CHECK(r.x[1] == q(1));
}

TEST_CASE("lp: exact rational optimum") {
  LpResult r = solve_lp({{q(3)}}, {q(1)}, {Relation::GreaterEq}, {q(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == q(1, 3));
}

TEST_CASE("lp: equality plus inequality") {
  // min 2x+3y  s.t.  x+y = 4,  x-y <= 2  ->  9 at (3,1)
  LpResult r = solve_lp({{q(1), q(1)}, {q(1), q(-1)}}, {q(4), q(2)},
                        {Relation::Equal, Relation::LessEq}, {q(2), q(3)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == q(9));
  CHECK(r.x[0] == q(3));
  CHECK(r.x[1] == q(1));
}

TEST_CASE("lp: infeasible") {
  LpResult r = solve_lp({{q(1)}, {q(1)}}, {q(2), q(1)},
                        {Relation::GreaterEq, Relation::LessEq}, {q(1)});
  CHECK(r.status == LpStatus::Infeasible);
}

TEST_CASE("lp: unbounded") {
  LpResult r = solve_lp({{q(1)}}, {q(1)}, {Relation::GreaterEq}, {q(-1)});
  CHECK(r.status == LpStatus::Unbounded);
}

TEST_CASE("lp: Beale's cycling example terminates under Bland's rule") {
  // min -3/4 x1 + 150 x2 - 1/50 x3 + 6 x4, the classic degenerate instance
  // that cycles under the most-negative rule; optimum -1/20 at (1/25, 0, 1, 0).
  std::vector<std::vector<Rational>> a = {
      {q(1, 4), q(-60), q(-1, 25), q(9)},
      {q(1, 2), q(-90), q(-1, 50), q(3)},
      {q(0), q(0), q(1), q(0)},
  };
  LpResult r = solve_lp(a, {q(0), q(0), q(1)},
                        {Relation::LessEq, Relation::LessEq, Relation::LessEq},
                        {q(-3, 4), q(150), q(-1, 50), q(6)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == q(-1, 20));
}

TEST_CASE("lp: C5 fractional cover") {
  // Rows = vertices of the 5-cycle, columns = its five maximal independent
  // sets {1,3},{1,4},{2,4},{2,5},{3,5}; the covering optimum is 5/2.
  std::vector<std::vector<Rational>> a(5, std::vector<Rational>(5, q(0)));
  int sets[5][2] = {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}};
  for (int s = 0; s < 5; ++s)
    for (int v : sets[s]) a[v - 1][s] = q(1);
  LpResult r = solve_lp(a, std::vector<Rational>(5, q(1)),
                        std::vector<Relation>(5, Relation::GreaterEq),
                        std::vector<Rational>(5, q(1)));
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == q(5, 2));
  Rational total = 0;
  for (int v = 0; v < 5; ++v) {
    Rational row = 0;
    for (int s = 0; s < 5; ++s) row += a[v][s] * r.x[s];
    CHECK(row >= q(1));
  }
  for (int s = 0; s < 5; ++s) total += r.x[s];
  CHECK(total == q(5, 2));
}

TEST_CASE("lp: redundant equality rows") {
  // x = 1 stated twice; phase 1 must drop or drive out the duplicate.
  LpResult r = solve_lp({{q(1)}, {q(1)}}, {q(1), q(1)},
                        {Relation::Equal, Relation::Equal}, {q(5)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == q(5));
  CHECK(r.x[0] == q(1));
}

TEST_CASE("lp: negative right-hand side is normalized") {
  // -x <= -2  (i.e. x >= 2), min x -> 2
  LpResult r = solve_lp({{q(-1)}}, {q(-2)}, {Relation::LessEq}, {q(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == q(2));
}
