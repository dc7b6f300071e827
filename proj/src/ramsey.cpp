#include "icb/ramsey.hpp"

#include "icb/classify.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace icb {

GraphClass parse_graph_class(const std::string& token) {
  if (token == "planar") return GraphClass::Planar;
  if (token == "line") return GraphClass::Line;
  if (token == "fuzzy") return GraphClass::Fuzzy;
  if (token == "general-upper" || token == "general_upper")
    return GraphClass::GeneralUpper;
  throw Error(ErrorKind::Invalid, "unknown graph class '" + token + "'");
}

std::string graph_class_name(GraphClass c) {
  switch (c) {
    case GraphClass::Planar: return "planar";
    case GraphClass::Line: return "line";
    case GraphClass::Fuzzy: return "fuzzy";
    case GraphClass::GeneralUpper: return "general-upper";
  }
  return "?";
}

std::int64_t erdos_szekeres_bound(int i, int j) {
  if (i < 1 || j < 1) throw Error(ErrorKind::Invalid, "i and j must be positive");
  const int n = i + j - 2;
  const int k = std::min(i - 1, j - 1);
  unsigned __int128 res = 1;
  for (int t = 1; t <= k; ++t) {
    res = res * static_cast<unsigned>(n - k + t) / static_cast<unsigned>(t);
    if (res > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
      throw Error(ErrorKind::Limit, "binomial exceeds the 64-bit range");
  }
  return static_cast<std::int64_t>(res);
}

RamseyValue class_ramsey(const RamseyQuery& q) {
  if (q.i < 1 || q.j < 1) throw Error(ErrorKind::Invalid, "i and j must be positive");
  const std::int64_t i = q.i, j = q.j;
  RamseyValue out;

  if (q.cls == GraphClass::GeneralUpper) {
    out.value = erdos_szekeres_bound(q.i, q.j);
    if (i <= 2 || j <= 2) {
      out.source = "Remark 1";  // the binomial is exact in the base cases
    } else {
      out.source = "Lemma 3 (Erdos-Szekeres)";
      out.is_upper_bound = true;
      out.notes.push_back("upper bound only; the exact value is unknown in general");
    }
    return out;
  }

  // Base cases hold for all three classes (each contains all edgeless and,
  // for line/fuzzy, all complete graphs) and take precedence.
  if (i == 1 || j == 1) {
    out.value = 1;
    out.source = "Remark 1";
    if (q.cls == GraphClass::Planar && i == 3 && j == 1)
      out.notes.push_back(
          "Lemma 5 would give 3j-3 = 0 here; the base case takes precedence");
    return out;
  }
  if (i == 2) {
    out.value = j;
    out.source = "Remark 1";
    return out;
  }

  switch (q.cls) {
    case GraphClass::Planar:
      if (j == 2) {
        // K_i is planar only up to i = 4; beyond that the 4j-3 row applies.
        out.value = i <= 4 ? i : 5;
        out.source = "Lemma 5";
      } else if (i == 3) {
        out.value = 3 * j - 3;
        out.source = "Lemma 5";
      } else {
        out.value = 4 * j - 3;
        out.source = "Lemma 5";
      }
      return out;
    case GraphClass::Line: {
      if (j == 2) {
        out.value = i;
        out.source = "Remark 1";
        return out;
      }
      if (i == 3) {
        out.value = (5 * j - 3) / 2;
        out.source = "Lemma 6";
        return out;
      }
      // j = t*k + r with 1 <= r <= k, where k = floor(i/2); the lemma leaves
      // k implicit in "i = 2k" / "i = 2k+1".
      const std::int64_t k = i / 2;
      std::int64_t r = j % k, t = j / k;
      if (r == 0) {
        r = k;
        t -= 1;
      }
      out.value = i % 2 == 0 ? i * (j - 1) - (t + r) + 2 : i * (j - 1) - r + 2;
      out.source = "Lemma 7";
      out.notes.push_back("reads k = floor(i/2) in the Lemma 7 case split");
      return out;
    }
    case GraphClass::Fuzzy:
      if (j == 2) {
        out.value = i;
        out.source = "Remark 1";
        return out;
      }
      out.value = (i - 1) * j;
      out.source = "Lemma 8";
      return out;
    case GraphClass::GeneralUpper:
      break;  // handled above
  }
  throw Error(ErrorKind::Internal, "unreachable class dispatch");
}

int t_k_of_m(int k, std::int64_t m,
             const std::function<std::int64_t(int, int)>& bound) {
  int best = 0;
  for (std::int64_t j = 1; j <= m + 1; ++j) {
    if (bound(k, static_cast<int>(j)) > m) return best;
    best = static_cast<int>(j);
  }
  // Any genuine Ramsey bound reaches j once the order can hold an independent
  // set that large, so exceeding m+1 means the bound is degenerate in j.
  throw Error(ErrorKind::Invalid, "bound never exceeds m; t_k(m) is unbounded");
}

namespace {

RamseyCertificate extract_rec(const UndirectedGraph& g, const VertexSet& pool,
                              int i, int j) {
  if (i == 1) return {CertificateKind::Clique, {pool.front()}};
  if (j == 1) return {CertificateKind::IndependentSet, {pool.front()}};
  const int v = pool.front();
  VertexSet nb, non;
  for (int u : pool) {
    if (u == v) continue;
    (g.adjacent(u, v) ? nb : non).push_back(u);
  }
  if (static_cast<std::int64_t>(nb.size()) >= erdos_szekeres_bound(i - 1, j)) {
    RamseyCertificate sub = extract_rec(g, nb, i - 1, j);
    if (sub.kind == CertificateKind::Clique) sub.vertices.push_back(v);
    return sub;
  }
  RamseyCertificate sub = extract_rec(g, non, i, j - 1);
  if (sub.kind == CertificateKind::IndependentSet) sub.vertices.push_back(v);
  return sub;
}

}  // namespace

RamseyCertificate ramsey_extract(const UndirectedGraph& g, int i, int j) {
  if (i < 1 || j < 1) throw Error(ErrorKind::Invalid, "i and j must be positive");
  if (g.n() < erdos_szekeres_bound(i, j))
    throw Error(ErrorKind::Invalid,
                "graph order is below the Erdos-Szekeres bound for (i, j)");
  VertexSet pool(static_cast<std::size_t>(g.n()));
  for (int v = 1; v <= g.n(); ++v) pool[static_cast<std::size_t>(v - 1)] = v;
  RamseyCertificate cert = extract_rec(g, pool, i, j);
  std::sort(cert.vertices.begin(), cert.vertices.end());

  const int want = cert.kind == CertificateKind::Clique ? i : j;
  if (static_cast<int>(cert.vertices.size()) != want)
    throw Error(ErrorKind::Internal, "certificate has the wrong size");
  for (std::size_t a = 0; a < cert.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < cert.vertices.size(); ++b) {
      bool adj = g.adjacent(cert.vertices[a], cert.vertices[b]);
      if (adj != (cert.kind == CertificateKind::Clique))
        throw Error(ErrorKind::Internal, "certificate fails its structural check");
    }
  return cert;
}

namespace {

struct MaskGraph {
  int n;
  std::uint32_t adj[8];  // adjacency rows over <= 8 vertices
};

MaskGraph mask_graph(int order, std::uint32_t mask) {
  MaskGraph g{order, {}};
  int bit = 0;
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b, ++bit)
      if (mask >> bit & 1) {
        g.adj[a] |= std::uint32_t{1} << b;
        g.adj[b] |= std::uint32_t{1} << a;
      }
  return g;
}

UndirectedGraph to_graph(const MaskGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (g.adj[a] >> b & 1) edges.emplace_back(a + 1, b + 1);
  return UndirectedGraph(g.n, std::move(edges));
}

bool has_clique_or_is(const MaskGraph& g, int i, int j) {
  const std::uint32_t total = std::uint32_t{1} << g.n;
  for (std::uint32_t sub = 0; sub < total; ++sub) {
    const int pc = std::popcount(sub);
    if (pc != i && pc != j) continue;
    bool clique = pc == i, indep = pc == j;
    for (int v = 0; v < g.n && (clique || indep); ++v) {
      if (!(sub >> v & 1)) continue;
      const std::uint32_t rest = sub & ~(std::uint32_t{1} << v);
      if ((g.adj[v] & rest) != rest) clique = false;
      if ((g.adj[v] & rest) != 0) indep = false;
    }
    if (clique || indep) return true;
  }
  return false;
}

bool class_member(GraphClass cls, const MaskGraph& g, int edge_count,
                  const Limits& limits) {
  switch (cls) {
    case GraphClass::GeneralUpper:
      return true;
    case GraphClass::Planar:
      // A K5 subdivision needs 10 edges and a K3,3 subdivision 9, so up to 8
      // edges the graph is planar outright; past 3n-6 it cannot be.
      if (edge_count <= 8) return true;
      if (g.n >= 3 && edge_count > 3 * g.n - 6) return false;
      return is_planar(to_graph(g), limits).planar;
    case GraphClass::Line:
      return is_line_graph(to_graph(g), limits);
    case GraphClass::Fuzzy:
      break;
  }
  throw Error(ErrorKind::Invalid,
              "fuzzy membership is user-asserted; it cannot be enumerated");
}

}  // namespace

VerifyResult verify_class_ramsey(GraphClass cls, int i, int j, int order,
                                 const Limits& limits) {
  if (i < 1 || j < 1 || order < 1)
    throw Error(ErrorKind::Invalid, "i, j, and order must be positive");
  if (order > limits.enum_order)
    throw Error(ErrorKind::Limit, "order " + std::to_string(order) +
                                      " exceeds enum-order " +
                                      std::to_string(limits.enum_order));
  if (cls == GraphClass::Fuzzy)
    throw Error(ErrorKind::Invalid,
                "fuzzy membership is user-asserted; it cannot be enumerated");

  const int pairs = order * (order - 1) / 2;
  const std::int64_t total = std::int64_t{1} << pairs;
  std::uint64_t members = 0;
  std::int64_t first_bad = -1;

#ifdef _OPENMP
  // exceptions must not unwind out of the parallel region, so remember the
  // first one (by mask, for determinism) and rethrow it afterwards
  std::int64_t err_mask = -1;
  ErrorKind err_kind = ErrorKind::Internal;
  std::string err_what;
#pragma omp parallel
  {
    std::int64_t local_bad = -1;
    std::uint64_t local_members = 0;
    std::int64_t local_err = -1;
    ErrorKind local_err_kind = ErrorKind::Internal;
    std::string local_err_what;
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      try {
        MaskGraph g = mask_graph(order, static_cast<std::uint32_t>(mask));
        int ec = std::popcount(static_cast<std::uint32_t>(mask));
        if (!class_member(cls, g, ec, limits)) continue;
        ++local_members;
        if (!has_clique_or_is(g, i, j))
          if (local_bad < 0 || mask < local_bad) local_bad = mask;
      } catch (const Error& e) {
        if (local_err < 0 || mask < local_err) {
          local_err = mask;
          local_err_kind = e.kind();
          local_err_what = e.what();
        }
      }
    }
#pragma omp critical(icb_verify_merge)
    {
      members += local_members;
      if (local_bad >= 0 && (first_bad < 0 || local_bad < first_bad))
        first_bad = local_bad;
      if (local_err >= 0 && (err_mask < 0 || local_err < err_mask)) {
        err_mask = local_err;
        err_kind = local_err_kind;
        err_what = std::move(local_err_what);
      }
    }
  }
  if (err_mask >= 0) throw Error(err_kind, err_what);
#else
  for (std::int64_t mask = 0; mask < total; ++mask) {
    MaskGraph g = mask_graph(order, static_cast<std::uint32_t>(mask));
    int ec = std::popcount(static_cast<std::uint32_t>(mask));
    if (!class_member(cls, g, ec, limits)) continue;
    ++members;
    if (first_bad < 0 && !has_clique_or_is(g, i, j)) first_bad = mask;
  }
#endif

  VerifyResult res;
  res.graphs_checked = static_cast<std::uint64_t>(total);
  res.class_members = members;
  res.holds = first_bad < 0;
  if (first_bad >= 0)
    res.counterexample =
        to_graph(mask_graph(order, static_cast<std::uint32_t>(first_bad)));
  return res;
}

BilinearCheck bilinear_bound_check(GraphClass cls, int i_max, int j_max) {
  if (cls == GraphClass::GeneralUpper)
    throw Error(ErrorKind::Invalid, "the bilinear bound covers planar/line/fuzzy");
  BilinearCheck res;
  res.holds = true;
  for (int i = 1; i <= i_max; ++i)
    for (int j = 1; j <= j_max; ++j) {
      std::int64_t v = class_ramsey({cls, i, j}).value;
      if (v > static_cast<std::int64_t>(i) * j || v > erdos_szekeres_bound(i, j)) {
        res.holds = false;
        if (!res.first_violation) res.first_violation = {i, j};
        return res;
      }
    }
  return res;
}

}  // namespace icb
