#include "icb/simplex.hpp"

#include "icb/graph.hpp"

#include <cstddef>

namespace icb {

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
          std::vector<int> basis, std::size_t cols)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)), cols_(cols) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }
  const std::vector<int>& basis() const { return basis_; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }

  void pivot(std::size_t pr, std::size_t pc) {
    Rational inv = 1 / rows_[pr][pc];
    for (auto& v : rows_[pr]) v *= inv;
    rhs_[pr] *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == pr || rows_[r][pc] == 0) continue;
      Rational f = rows_[r][pc];
      for (std::size_t c = 0; c < cols_; ++c) rows_[r][c] -= f * rows_[pr][c];
      rhs_[r] -= f * rhs_[pr];
    }
    basis_[pr] = static_cast<int>(pc);
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Reduced costs and objective value for cost vector `cost`.
  std::pair<std::vector<Rational>, Rational> price(const std::vector<Rational>& cost) const {
    std::vector<Rational> z(cost);
    Rational obj = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = cost[static_cast<std::size_t>(basis_[r])];
      if (cb == 0) continue;
      obj += cb * rhs_[r];
      for (std::size_t c = 0; c < cols_; ++c) z[c] -= cb * rows_[r][c];
    }
    return {std::move(z), std::move(obj)};
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::size_t cols_;
};

// Runs simplex iterations with Bland's rule (lowest eligible column enters;
// ratio ties resolved toward the lowest basic variable). Returns false on an
// unbounded direction.
bool iterate(Tableau& t, const std::vector<Rational>& cost,
             const std::vector<char>& blocked) {
  for (;;) {
    auto [z, obj] = t.price(cost);
    (void)obj;
    std::size_t enter = t.col_count();
    for (std::size_t c = 0; c < t.col_count(); ++c) {
      if (!blocked[c] && z[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == t.col_count()) return true;
    std::size_t leave = t.row_count();
    Rational best_ratio;
    for (std::size_t r = 0; r < t.row_count(); ++r) {
      if (t.at(r, enter) <= 0) continue;
      Rational ratio = t.rhs(r) / t.at(r, enter);
      if (leave == t.row_count() || ratio < best_ratio ||
          (ratio == best_ratio && t.basis()[r] < t.basis()[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == t.row_count()) return false;
    t.pivot(leave, enter);
  }
}

}  // namespace

LpResult solve_lp(const std::vector<std::vector<Rational>>& a,
                  const std::vector<Rational>& b,
                  const std::vector<Relation>& rel,
                  const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m || rel.size() != m)
    throw Error(ErrorKind::Invalid, "inconsistent LP dimensions");
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorKind::Invalid, "inconsistent LP row width");

  // Normalize to b >= 0, then append one slack/surplus column per inequality
  // and one artificial column per row without a natural basic variable.
  std::vector<std::vector<Rational>> rows(m);
  std::vector<Rational> rhs(b);
  std::vector<Relation> rl(rel);
  for (std::size_t r = 0; r < m; ++r) {
    rows[r] = a[r];
    if (rhs[r] < 0) {
      for (auto& v : rows[r]) v = -v;
      rhs[r] = -rhs[r];
      if (rl[r] == Relation::LessEq)
        rl[r] = Relation::GreaterEq;
      else if (rl[r] == Relation::GreaterEq)
        rl[r] = Relation::LessEq;
    }
  }

  std::size_t slack_count = 0;
  for (auto r : rl)
    if (r != Relation::Equal) ++slack_count;
  std::vector<int> basis(m, -1);
  std::vector<std::size_t> artificial_rows;
  for (std::size_t r = 0; r < m; ++r)
    if (rl[r] == Relation::Equal || rl[r] == Relation::GreaterEq) artificial_rows.push_back(r);
  const std::size_t total = n + slack_count + artificial_rows.size();

  for (auto& row : rows) row.resize(total, Rational(0));
  std::size_t next_slack = n;
  for (std::size_t r = 0; r < m; ++r) {
    if (rl[r] == Relation::LessEq) {
      rows[r][next_slack] = 1;
      basis[r] = static_cast<int>(next_slack++);
    } else if (rl[r] == Relation::GreaterEq) {
      rows[r][next_slack++] = -1;
    }
  }
  std::size_t next_art = n + slack_count;
  for (std::size_t r : artificial_rows) {
    rows[r][next_art] = 1;
    basis[r] = static_cast<int>(next_art++);
  }

  Tableau t(std::move(rows), std::move(rhs), std::move(basis), total);
  std::vector<char> blocked(total, 0);

  if (!artificial_rows.empty()) {
    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t cidx = n + slack_count; cidx < total; ++cidx) phase1[cidx] = 1;
    iterate(t, phase1, blocked);  // bounded below by zero, always terminates optimal
    auto [z1, obj1] = t.price(phase1);
    (void)z1;
    if (obj1 != 0) return {LpStatus::Infeasible, Rational(0), {}};
    // Remove artificials from the basis; a row that cannot pivot is redundant.
    for (std::size_t r = t.row_count(); r-- > 0;) {
      if (static_cast<std::size_t>(t.basis()[r]) < n + slack_count) continue;
      std::size_t pc = total;
      for (std::size_t cidx = 0; cidx < n + slack_count; ++cidx) {
        if (t.at(r, cidx) != 0) {
          pc = cidx;
          break;
        }
      }
      if (pc == total)
        t.drop_row(r);
      else
        t.pivot(r, pc);
    }
    for (std::size_t cidx = n + slack_count; cidx < total; ++cidx) blocked[cidx] = 1;
  }

  std::vector<Rational> cost(total, Rational(0));
  for (std::size_t cidx = 0; cidx < n; ++cidx) cost[cidx] = c[cidx];
  if (!iterate(t, cost, blocked)) return {LpStatus::Unbounded, Rational(0), {}};

  LpResult res;
  res.status = LpStatus::Optimal;
  res.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.row_count(); ++r)
    if (static_cast<std::size_t>(t.basis()[r]) < n)
      res.x[static_cast<std::size_t>(t.basis()[r])] = t.rhs(r);
  res.objective = 0;
  for (std::size_t cidx = 0; cidx < n; ++cidx) res.objective += c[cidx] * res.x[cidx];
  return res;
}

}  // namespace icb
