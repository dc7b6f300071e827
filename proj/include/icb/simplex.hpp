// Exact rational linear programming: dense two-phase simplex with Bland's rule.
// Small and exact rather than fast; every answer is certifiable by substitution.
#pragma once

#include "icb/rational.hpp"

#include <vector>

namespace icb {

enum class Relation { LessEq, Equal, GreaterEq };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> x;
};

// minimize c.x subject to (A x) rel b, x >= 0
LpResult solve_lp(const std::vector<std::vector<Rational>>& a,
                  const std::vector<Rational>& b,
                  const std::vector<Relation>& rel,
                  const std::vector<Rational>& c);

}  // namespace icb
