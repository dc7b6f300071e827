#include "icb/approx.hpp"

#include "icb/bounds.hpp"
#include "icb/classify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace icb {

ClassConstants theorem1_parameters(int n, const Rational& a, const Rational& b,
                                   const Rational& c) {
  if (n < 1) throw Error(ErrorKind::Invalid, "n must be at least 1");
  if (a < 0 || b < 0) throw Error(ErrorKind::Invalid, "exponents must be nonnegative");
  if (c <= 0) throw Error(ErrorKind::Invalid, "constant factor must be positive");

  ClassConstants cc;
  cc.a = a;
  cc.b = b;
  cc.c = c;
  cc.n = n;
  const double s = to_double(a) + to_double(b) + 1.0;
  cc.k = std::pow(static_cast<double>(n) / to_double(c), 1.0 / s);
  cc.gap = std::pow(to_double(c), 1.0 / s) *
           std::pow(static_cast<double>(n), (s - 1.0) / s);
  // gap and n/k are the same quantity on paper; guard the arithmetic.
  const double alt = static_cast<double>(n) / cc.k;
  if (std::abs(cc.gap - alt) > 1e-9 * std::max(1.0, std::abs(cc.gap)))
    throw Error(ErrorKind::Internal, "gap/k scaling mismatch");
  return cc;
}

GapCertificate theorem1_certificate(const SideInfoGraph& g, const ClassConstants& cc,
                                    const Limits& limits) {
  if (!is_undirected(g))
    throw Error(ErrorKind::Invalid, "gap certificate requires an undirected instance");
  if (cc.n != g.n())
    throw Error(ErrorKind::Invalid, "class constants were computed for a different n");

  const int n = g.n();
  GapCertificate cert;

  auto cover = clique_cover_number(g, limits);
  const double case1_threshold = 2.0 * static_cast<double>(n) / cc.k;
  if (static_cast<double>(cover.value) < case1_threshold) {
    cert.kind = GapCase::CliqueCoverSmall;
    cert.partition = std::move(cover.partition);
    cert.claimed_bound = Rational(cover.value);
    cert.threshold = case1_threshold;
    return cert;
  }

  if (cc.b == 0)
    throw Error(ErrorKind::Invalid, "case-2 size bound needs a positive exponent b");
  cert.kind = GapCase::IndependentSetLarge;
  auto alpha = independence_number(bidirectional_core(g), limits);
  cert.independent_set = alpha.witness;
  cert.claimed_bound = Rational(alpha.value);
  const double k_ceil = std::ceil(cc.k);
  cert.threshold =
      std::pow(static_cast<double>(n) /
                   (to_double(cc.c) * std::pow(k_ceil, to_double(cc.a) + 1.0)),
               1.0 / to_double(cc.b));
  cert.class_assertion_ok =
      static_cast<double>(alpha.value) + 1e-9 >= cert.threshold;
  cert.note = "case-2 threshold uses ceil(k) = " +
              std::to_string(static_cast<long long>(k_ceil));
  if (!cert.class_assertion_ok)
    cert.note += "; independent set falls short of the class bound, so the "
                 "class assertion does not hold for this instance";
  return cert;
}

namespace {

// The n/4 route needs chi(G) <= 4, the complement route chi(complement) <= 4;
// both follow from planarity, so a larger value means the coloring or the
// planarity test is wrong.
int four_colorable_chi(const UndirectedGraph& g, const Limits& limits) {
  int chi = chromatic_number(g, limits).value;
  if (chi > 4)
    throw Error(ErrorKind::Internal, "planar graph needed more than four colors");
  return chi;
}

}  // namespace

BoundPair planar_bounds(const SideInfoGraph& g, const Limits& limits) {
  if (!is_undirected(g))
    throw Error(ErrorKind::Invalid, "planar bounds require an undirected instance");
  const int n = g.n();
  UndirectedGraph un = bidirectional_core(g);
  UndirectedGraph comp = un.complement();

  const bool g_planar = is_planar(un, limits).planar;
  const bool comp_planar = is_planar(comp, limits).planar;
  if (!g_planar && !comp_planar)
    throw Error(ErrorKind::Invalid, "neither the graph nor its complement is planar");

  BoundPair graph_route;
  if (g_planar) {
    four_colorable_chi(un, limits);
    graph_route = {Rational(n, 4), Rational(n), "graph planar"};
  }
  BoundPair comp_route;
  if (comp_planar) {
    int chi = four_colorable_chi(comp, limits);
    comp_route = {Rational(1), Rational(chi), "complement planar"};
  }
  if (!comp_planar) return graph_route;
  if (!g_planar) return comp_route;
  // Both apply; keep the pair with the smaller upper/lower ratio (the graph
  // route's ratio is always exactly 4).
  Rational comp_ratio = comp_route.upper / comp_route.lower;
  return comp_ratio < 4 ? comp_route : graph_route;
}

BoundPair directed_planar_bounds(const SideInfoGraph& g, const Limits& limits) {
  const int n = g.n();
  UndirectedGraph un = underlying_undirected(g);
  if (is_planar(un, limits).planar) {
    return {Rational(n, 4), Rational(n), "underlying graph planar"};
  }
  UndirectedGraph un_comp = underlying_undirected(complement(g));
  if (is_planar(un_comp, limits).planar) {
    int chi = four_colorable_chi(un_comp, limits);
    return {Rational(1), Rational(chi), "underlying complement planar"};
  }
  throw Error(ErrorKind::Invalid,
              "neither the underlying graph nor that of the complement is planar");
}

namespace {

// Orients every missing pair low -> high, turning the graph into a
// tournament; any set acyclic in the completion is acyclic in g because
// completion only adds arcs.
struct Completion {
  int n;
  std::vector<std::uint64_t> out;

  explicit Completion(const SideInfoGraph& g) : n(g.n()), out(n, 0) {
    for (int v = 1; v <= n; ++v) {
      for (int u = 1; u <= n; ++u) {
        if (u == v) continue;
        if (g.has_arc(v, u) || (!g.has_arc(u, v) && v < u))
          out[v - 1] |= std::uint64_t(1) << (u - 1);
      }
    }
  }

  // Emits a topological order of an acyclic subset of `mask` of size at
  // least floor(log2 |mask|) + 1, by pivoting into the larger side.
  void extract(std::uint64_t mask, std::vector<int>& order) const {
    if (mask == 0) return;
    const int v = std::countr_zero(mask);
    const std::uint64_t outs = out[v] & mask;
    const std::uint64_t ins = mask & ~outs & ~(std::uint64_t(1) << v);
    if (std::popcount(outs) >= std::popcount(ins)) {
      order.push_back(v + 1);
      extract(outs, order);
    } else {
      extract(ins, order);
      order.push_back(v + 1);
    }
  }
};

}  // namespace

VertexSet extract_acyclic(const SideInfoGraph& g) {
  if (!is_unidirected(g))
    throw Error(ErrorKind::Invalid,
                "acyclic extraction requires a unidirected instance");
  const int n = g.n();
  if (n > 64)
    throw Error(ErrorKind::Limit, "acyclic extraction supports at most 64 vertices");

  Completion comp(g);
  VertexSet order;
  std::uint64_t all = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  comp.extract(all, order);

  if (!is_acyclic_induced(g, order))
    throw Error(ErrorKind::Internal, "extracted set is not acyclic");
  const int guarantee = std::bit_width(static_cast<unsigned>(n));  // floor(log2 n)+1
  if (static_cast<int>(order.size()) < guarantee)
    throw Error(ErrorKind::Internal, "extracted set smaller than guaranteed");
  return order;
}

int unidirected_lower_bound(const SideInfoGraph& g) {
  VertexSet s = extract_acyclic(g);
  const int log_floor = std::bit_width(static_cast<unsigned>(g.n())) - 1;
  return std::max(log_floor, static_cast<int>(s.size()));
}

}  // namespace icb
