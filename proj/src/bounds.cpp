#include "icb/bounds.hpp"

#include "icb/simplex.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace icb {

namespace {

constexpr int kScanCap = 30;  // hard cap for 2^n subset scans

void check_exact(int n, const Limits& limits, const char* what) {
  if (n > limits.exact_limit)
    throw Error(ErrorKind::Limit, std::string(what) + ": n=" + std::to_string(n) +
                                      " exceeds exact-limit " +
                                      std::to_string(limits.exact_limit));
  if (n > kScanCap)
    throw Error(ErrorKind::Limit, std::string(what) + ": exact solvers cap at n=" +
                                      std::to_string(kScanCap));
}

std::vector<std::uint64_t> adjacency_masks(const UndirectedGraph& g) {
  std::vector<std::uint64_t> adj(g.n());
  for (int v = 1; v <= g.n(); ++v) adj[v - 1] = g.adj_mask64(v);
  return adj;
}

VertexSet mask_to_set(std::uint64_t m) {
  VertexSet s;
  while (m) {
    int v = std::countr_zero(m);
    s.push_back(v + 1);
    m &= m - 1;
  }
  return s;
}

// Larger set wins; equal sizes resolve to the lexicographically smaller
// sorted vertex list, i.e. the mask owning the lowest differing bit.
struct BestMask {
  int size = 0;
  std::uint64_t mask = 0;

  bool improves(int size_, std::uint64_t mask_) const {
    if (size_ != size) return size_ > size;
    std::uint64_t diff = mask_ ^ mask;
    if (diff == 0) return false;
    return mask_ >> std::countr_zero(diff) & 1;
  }
  void take(int size_, std::uint64_t mask_) {
    if (improves(size_, mask_)) {
      size = size_;
      mask = mask_;
    }
  }
};

bool independent_mask(const std::vector<std::uint64_t>& adj, std::uint64_t m) {
  std::uint64_t rest = m;
  while (rest) {
    int v = std::countr_zero(rest);
    if (adj[v] & m) return false;
    rest &= rest - 1;
  }
  return true;
}

bool acyclic_mask(const std::vector<std::uint64_t>& in, std::uint64_t m) {
  std::uint64_t rem = m;
  while (rem) {
    std::uint64_t sources = 0;
    std::uint64_t scan = rem;
    while (scan) {
      int v = std::countr_zero(scan);
      if ((in[v] & rem) == 0) sources |= std::uint64_t{1} << v;
      scan &= scan - 1;
    }
    if (sources == 0) return false;
    rem &= ~sources;
  }
  return true;
}

// Visits all k-subsets of [1, n] in lexicographic order until f returns true.
template <typename F>
bool for_each_combination(int n, int k, F&& f) {
  VertexSet c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  for (;;) {
    if (f(c)) return true;
    int i = k - 1;
    while (i >= 0 && c[i] == n - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::uint64_t set_to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= std::uint64_t{1} << (v - 1);
  return m;
}

}  // namespace

AlphaResult independence_number(const UndirectedGraph& g, const Limits& limits) {
  check_exact(g.n(), limits, "independence_number");
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  const std::int64_t count = std::int64_t{1} << n;
  BestMask best;
#ifdef _OPENMP
#pragma omp parallel
  {
    BestMask local;
#pragma omp for schedule(static)
    for (std::int64_t m = 1; m < count; ++m) {
      auto mask = static_cast<std::uint64_t>(m);
      int pc = std::popcount(mask);
      if (pc < local.size) continue;
      if (independent_mask(adj, mask)) local.take(pc, mask);
    }
#pragma omp critical(icb_alpha_merge)
    best.take(local.size, local.mask);
  }
#else
  for (std::int64_t m = 1; m < count; ++m) {
    auto mask = static_cast<std::uint64_t>(m);
    int pc = std::popcount(mask);
    if (pc < best.size) continue;
    if (independent_mask(adj, mask)) best.take(pc, mask);
  }
#endif
  return {best.size, mask_to_set(best.mask)};
}

MaisResult mais(const SideInfoGraph& g, const Limits& limits) {
  check_exact(g.n(), limits, "mais");
  const int n = g.n();
  std::vector<std::uint64_t> in(n);
  for (int v = 1; v <= n; ++v) in[v - 1] = g.in_mask64(v);
  const std::int64_t count = std::int64_t{1} << n;
  BestMask best;
#ifdef _OPENMP
#pragma omp parallel
  {
    BestMask local;
#pragma omp for schedule(static)
    for (std::int64_t m = 1; m < count; ++m) {
      auto mask = static_cast<std::uint64_t>(m);
      int pc = std::popcount(mask);
      if (pc < local.size) continue;
      if (acyclic_mask(in, mask)) local.take(pc, mask);
    }
#pragma omp critical(icb_mais_merge)
    best.take(local.size, local.mask);
  }
#else
  for (std::int64_t m = 1; m < count; ++m) {
    auto mask = static_cast<std::uint64_t>(m);
    int pc = std::popcount(mask);
    if (pc < best.size) continue;
    if (acyclic_mask(in, mask)) best.take(pc, mask);
  }
#endif
  return {best.size, mask_to_set(best.mask)};
}

bool is_acyclic_induced(const SideInfoGraph& g, const VertexSet& s) {
  check_vertex_set(s, g.n());
  std::vector<int> rem(s);
  while (!rem.empty()) {
    bool removed = false;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      bool source = true;
      for (int u : rem) {
        if (u != rem[i] && g.has_arc(u, rem[i])) {
          source = false;
          break;
        }
      }
      if (source) {
        rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

namespace serial {

AlphaResult independence_number(const UndirectedGraph& g, const Limits& limits) {
  check_exact(g.n(), limits, "independence_number");
  const auto adj = adjacency_masks(g);
  for (int k = g.n(); k >= 1; --k) {
    AlphaResult found;
    bool hit = for_each_combination(g.n(), k, [&](const VertexSet& c) {
      if (!independent_mask(adj, set_to_mask(c))) return false;
      found = {k, c};
      return true;
    });
    if (hit) return found;
  }
  return {0, {}};
}

MaisResult mais(const SideInfoGraph& g, const Limits& limits) {
  check_exact(g.n(), limits, "mais");
  std::vector<std::uint64_t> in(g.n());
  for (int v = 1; v <= g.n(); ++v) in[v - 1] = g.in_mask64(v);
  for (int k = g.n(); k >= 1; --k) {
    MaisResult found;
    bool hit = for_each_combination(g.n(), k, [&](const VertexSet& c) {
      if (!acyclic_mask(in, set_to_mask(c))) return false;
      found = {k, c};
      return true;
    });
    if (hit) return found;
  }
  return {0, {}};
}

}  // namespace serial

namespace {

struct ColoringSearch {
  const std::vector<std::uint64_t>& adj;
  const std::vector<int>& ord;  // 0-based vertex ids, fixed branching order
  int n;
  int lower;
  int best;
  std::vector<int> best_colors;        // per 0-based vertex
  std::vector<std::uint64_t> classes;  // occupancy mask per color
  std::vector<int> colors;

  void run(int pos, int used) {
    if (best <= lower) return;
    if (used >= best) return;
    if (pos == n) {
      best = used;
      best_colors = colors;
      return;
    }
    int v = ord[pos];
    int cap = std::min(used + 1, best - 1);
    for (int c = 1; c <= cap; ++c) {
      if (classes[c - 1] & adj[v]) continue;
      classes[c - 1] |= std::uint64_t{1} << v;
      colors[v] = c;
      run(pos + 1, std::max(used, c));
      classes[c - 1] &= ~(std::uint64_t{1} << v);
      colors[v] = 0;
    }
  }
};

int clique_lower_bound(const UndirectedGraph& g, const Limits& limits) {
  // Exact max clique = alpha of the complement; fits the same scan budget.
  return independence_number(g.complement(), limits).value;
}

}  // namespace

ColoringResult chromatic_number(const UndirectedGraph& g, const Limits& limits) {
  check_exact(g.n(), limits, "chromatic_number");
  const int n = g.n();
  const auto adj = adjacency_masks(g);
  std::vector<int> ord(n);
  for (int i = 0; i < n; ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(), [&](int a, int b) {
    int da = std::popcount(adj[a]), db = std::popcount(adj[b]);
    if (da != db) return da > db;
    return a < b;
  });

  // Greedy along the branching order seeds the upper bound.
  std::vector<int> greedy(n, 0);
  std::vector<std::uint64_t> classes;
  for (int v : ord) {
    int c = 1;
    for (;; ++c) {
      if (c > static_cast<int>(classes.size())) classes.push_back(0);
      if ((classes[c - 1] & adj[v]) == 0) break;
    }
    classes[c - 1] |= std::uint64_t{1} << v;
    greedy[v] = c;
  }
  int ub = static_cast<int>(classes.size());
  int lb = clique_lower_bound(g, limits);
  if (lb == ub) {
    std::vector<int> out(greedy);
    return {ub, std::move(out)};
  }

  ColoringSearch search{adj, ord, n, lb, ub, greedy,
                        std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0),
                        std::vector<int>(static_cast<std::size_t>(n), 0)};
  search.run(0, 0);
  return {search.best, std::move(search.best_colors)};
}

int b_fold_chromatic(const UndirectedGraph& g, int b, const Limits& limits) {
  if (b < 1) throw Error(ErrorKind::Invalid, "fold count must be positive");
  if (b > limits.b_limit)
    throw Error(ErrorKind::Limit,
                "fold count " + std::to_string(b) + " exceeds b-limit " +
                    std::to_string(limits.b_limit));
  if (g.n() * b > limits.exact_limit)
    throw Error(ErrorKind::Limit, "b-fold blowup size " + std::to_string(g.n() * b) +
                                      " exceeds exact-limit " +
                                      std::to_string(limits.exact_limit));
  // chi^(b)(G) equals chi of the blowup replacing each vertex by a b-clique
  // and each edge by complete bipartite adjacency between the copies.
  const int n = g.n();
  std::vector<std::pair<int, int>> edges;
  auto id = [&](int v, int p) { return (v - 1) * b + p; };  // p in [1, b]
  for (int v = 1; v <= n; ++v)
    for (int p = 1; p <= b; ++p)
      for (int q = p + 1; q <= b; ++q) edges.emplace_back(id(v, p), id(v, q));
  for (auto [u, v] : g.edges())
    for (int p = 1; p <= b; ++p)
      for (int q = 1; q <= b; ++q) edges.emplace_back(id(u, p), id(v, q));
  UndirectedGraph blowup(n * b, std::move(edges));
  return chromatic_number(blowup, limits).value;
}

std::vector<VertexSet> maximal_independent_sets(const UndirectedGraph& g,
                                                const Limits& limits) {
  check_exact(g.n(), limits, "maximal_independent_sets");
  const int n = g.n();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // Maximal independent sets of g are maximal cliques of the complement;
  // run Bron-Kerbosch with pivoting over complement adjacency.
  std::vector<std::uint64_t> nbr(n);
  for (int v = 1; v <= n; ++v)
    nbr[v - 1] = ~g.adj_mask64(v) & full & ~(std::uint64_t{1} << (v - 1));

  std::vector<std::uint64_t> found;
  auto rec = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
    if (p == 0 && x == 0) {
      found.push_back(r);
      return;
    }
    std::uint64_t px = p | x;
    int pivot = -1, pivot_gain = -1;
    std::uint64_t scan = px;
    while (scan) {
      int u = std::countr_zero(scan);
      int gain = std::popcount(p & nbr[u]);
      if (gain > pivot_gain) {
        pivot_gain = gain;
        pivot = u;
      }
      scan &= scan - 1;
    }
    std::uint64_t cand = p & ~nbr[pivot];
    while (cand) {
      int v = std::countr_zero(cand);
      std::uint64_t bit = std::uint64_t{1} << v;
      self(self, r | bit, p & nbr[v], x & nbr[v]);
      p &= ~bit;
      x |= bit;
      cand &= cand - 1;
    }
  };
  rec(rec, 0, full, 0);

  std::vector<VertexSet> sets;
  sets.reserve(found.size());
  for (auto m : found) sets.push_back(mask_to_set(m));
  std::sort(sets.begin(), sets.end());
  return sets;
}

FractionalResult fractional_chromatic_number(const UndirectedGraph& g,
                                             const Limits& limits) {
  auto sets = maximal_independent_sets(g, limits);
  const int n = g.n();
  const auto k = sets.size();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(k, Rational(0)));
  for (std::size_t s = 0; s < k; ++s)
    for (int v : sets[s]) a[static_cast<std::size_t>(v - 1)][s] = 1;
  std::vector<Rational> b(static_cast<std::size_t>(n), Rational(1));
  std::vector<Relation> rel(static_cast<std::size_t>(n), Relation::GreaterEq);
  std::vector<Rational> c(k, Rational(1));
  LpResult lp = solve_lp(a, b, rel, c);
  if (lp.status != LpStatus::Optimal)
    throw Error(ErrorKind::Internal, "covering LP must be feasible and bounded");
  for (int v = 1; v <= n; ++v) {
    Rational total = 0;
    for (std::size_t s = 0; s < k; ++s)
      if (a[static_cast<std::size_t>(v - 1)][s] == 1) total += lp.x[s];
    if (total < 1)
      throw Error(ErrorKind::Internal, "LP weights violate a covering constraint");
  }
  FractionalResult res;
  res.value = lp.objective;
  for (std::size_t s = 0; s < k; ++s)
    if (lp.x[s] != 0) res.cover.push_back({sets[s], lp.x[s]});
  return res;
}

CliqueCoverResult clique_cover_number(const SideInfoGraph& g, const Limits& limits) {
  UndirectedGraph core = bidirectional_core(g);
  ColoringResult col = chromatic_number(core.complement(), limits);
  std::vector<VertexSet> classes(static_cast<std::size_t>(col.value));
  for (int v = 1; v <= g.n(); ++v)
    classes[static_cast<std::size_t>(col.colors[v - 1] - 1)].push_back(v);
  std::sort(classes.begin(), classes.end());
  for (const auto& clique : classes)
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        if (!(g.has_arc(clique[i], clique[j]) && g.has_arc(clique[j], clique[i])))
          throw Error(ErrorKind::Internal, "clique cover class is not a clique");
  return {col.value, std::move(classes)};
}

BoundsReport bounds_report(const SideInfoGraph& g, const Limits& limits) {
  BoundsReport rep;
  rep.n = g.n();
  UndirectedGraph core = bidirectional_core(g);
  UndirectedGraph core_comp = core.complement();

  rep.mais = mais(g, limits);
  rep.alpha_core = independence_number(core, limits);
  rep.clique_cover = clique_cover_number(g, limits);
  FractionalResult frac = fractional_chromatic_number(core_comp, limits);
  rep.fractional = frac.value;
  rep.fractional_cover = std::move(frac.cover);

  rep.undirected = true;
  for (auto [u, v] : g.arcs())
    if (!g.has_arc(v, u)) {
      rep.undirected = false;
      break;
    }
  if (rep.undirected) {
    rep.mais_equals_alpha = rep.mais.value == rep.alpha_core.value;
    if (!rep.mais_equals_alpha)
      throw Error(ErrorKind::Internal, "undirected instance must satisfy mais == alpha");
  }

  rep.gap_ratio = Rational(rep.clique_cover.value, rep.mais.value);
  rep.beta_lower = rep.mais.value;
  rep.beta_upper = rep.fractional;
  rep.beta_tight = rep.beta_lower == rep.beta_upper;

  if (rep.beta_lower > rep.fractional || rep.fractional > rep.clique_cover.value)
    throw Error(ErrorKind::Internal, "bound sandwich violated");

  if (rep.n >= 2) {
    double n = rep.n;
    rep.ref_n_over_log = n / std::log2(n);
    rep.ref_n_loglog_over_log = n * std::log2(std::log2(n)) / std::log2(n);
  }
  return rep;
}

}  // namespace icb
