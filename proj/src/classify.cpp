#include "icb/classify.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

namespace icb {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

// --- embedding verification ---------------------------------------------

// A rotation system is a plane embedding iff its face count satisfies Euler's
// formula on every component: orbits of the half-edge successor map must equal
// sum over components with at least one edge of (E_i - V_i + 2).
void verify_embedding(const UndirectedGraph& g, const std::vector<VertexSet>& emb) {
  const int n = g.n();
  if (static_cast<int>(emb.size()) != n)
    throw Error(ErrorKind::Internal, "embedding has wrong vertex count");
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    VertexSet sorted(emb[static_cast<std::size_t>(v - 1)]);
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw Error(ErrorKind::Internal, "embedding row is not a neighbor permutation");
    pos[static_cast<std::size_t>(v - 1)].assign(static_cast<std::size_t>(n) + 1, -1);
    const auto& row = emb[static_cast<std::size_t>(v - 1)];
    for (std::size_t i = 0; i < row.size(); ++i)
      pos[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(row[i])] =
          static_cast<int>(i);
  }

  // union-find for components
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [u, v] : g.edges()) parent[static_cast<std::size_t>(find(u - 1))] = find(v - 1);

  std::vector<int> comp_edges(static_cast<std::size_t>(n), 0);
  std::vector<int> comp_verts(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) ++comp_verts[static_cast<std::size_t>(find(v - 1))];
  for (auto [u, v] : g.edges()) ++comp_edges[static_cast<std::size_t>(find(u - 1))];
  long expected = 0;
  for (int r = 0; r < n; ++r)
    if (find(r) == r && comp_edges[static_cast<std::size_t>(r)] > 0)
      expected += comp_edges[static_cast<std::size_t>(r)] -
                  comp_verts[static_cast<std::size_t>(r)] + 2;

  // trace face orbits: successor of half-edge (u,v) is (v,w) where w follows
  // u in the rotation at v
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v)
    seen[static_cast<std::size_t>(v - 1)].assign(
        emb[static_cast<std::size_t>(v - 1)].size(), 0);
  long orbits = 0;
  for (int u = 1; u <= n; ++u) {
    const auto& row = emb[static_cast<std::size_t>(u - 1)];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (seen[static_cast<std::size_t>(u - 1)][i]) continue;
      ++orbits;
      int cu = u;
      int ci = static_cast<int>(i);
      do {
        seen[static_cast<std::size_t>(cu - 1)][static_cast<std::size_t>(ci)] = 1;
        int cv = emb[static_cast<std::size_t>(cu - 1)][static_cast<std::size_t>(ci)];
        int back = pos[static_cast<std::size_t>(cv - 1)][static_cast<std::size_t>(cu)];
        int deg = static_cast<int>(emb[static_cast<std::size_t>(cv - 1)].size());
        cu = cv;
        ci = (back + 1) % deg;
      } while (!(cu == u && ci == static_cast<int>(i)));
    }
  }
  if (orbits != expected)
    throw Error(ErrorKind::Internal, "embedding fails the Euler face count");
}

// --- Kuratowski verification ---------------------------------------------

// Suppress degree-2 vertices and decide whether the remaining graph is K5 or
// K3,3. Returns the name, or throws if the edge set is not such a subdivision.
std::string kuratowski_kind(const UndirectedGraph& g,
                            std::vector<std::pair<int, int>> edges) {
  for (auto [u, v] : edges)
    if (!g.adjacent(u, v))
      throw Error(ErrorKind::Internal, "obstruction edge not present in graph");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(ErrorKind::Internal, "obstruction repeats an edge");

  std::unordered_set<long long> eset;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()) + 1);
  auto key = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<long long>(a) * 1000 + b;
  };
  auto add_edge = [&](int a, int b) {
    if (!eset.insert(key(a, b)).second)
      throw Error(ErrorKind::Internal, "suppression produced a parallel edge");
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  auto remove_edge = [&](int a, int b) {
    eset.erase(key(a, b));
    auto& ra = adj[static_cast<std::size_t>(a)];
    ra.erase(std::find(ra.begin(), ra.end(), b));
    auto& rb = adj[static_cast<std::size_t>(b)];
    rb.erase(std::find(rb.begin(), rb.end(), a));
  };
  for (auto [u, v] : edges) add_edge(u, v);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 1; x <= g.n(); ++x) {
      if (adj[static_cast<std::size_t>(x)].size() != 2) continue;
      int u = adj[static_cast<std::size_t>(x)][0];
      int w = adj[static_cast<std::size_t>(x)][1];
      if (u == w) throw Error(ErrorKind::Internal, "suppression produced a loop");
      remove_edge(x, u);
      remove_edge(x, w);
      add_edge(u, w);
      changed = true;
    }
  }

  VertexSet branch;
  for (int v = 1; v <= g.n(); ++v)
    if (!adj[static_cast<std::size_t>(v)].empty()) branch.push_back(v);
  auto degree_is = [&](int d) {
    return std::all_of(branch.begin(), branch.end(), [&](int v) {
      return static_cast<int>(adj[static_cast<std::size_t>(v)].size()) == d;
    });
  };
  if (branch.size() == 5 && eset.size() == 10 && degree_is(4)) return "K5";
  if (branch.size() == 6 && eset.size() == 9 && degree_is(3)) {
    // 3-regular on six vertices with 9 edges and a proper 2-side split is K3,3
    VertexSet side{branch[0]};
    for (int v : branch) {
      const auto& nb = adj[static_cast<std::size_t>(branch[0])];
      if (v != branch[0] && std::find(nb.begin(), nb.end(), v) == nb.end())
        side.push_back(v);
    }
    if (side.size() == 3) {
      bool complete = true;
      for (int u : side)
        for (int v : branch)
          if (std::find(side.begin(), side.end(), v) == side.end() &&
              !eset.count(key(u, v)))
            complete = false;
      if (complete) return "K3,3";
    }
  }
  throw Error(ErrorKind::Internal, "obstruction does not reduce to K5 or K3,3");
}

bool edges_planar(int n, const std::vector<std::pair<int, int>>& edges) {
  BoostGraph bg(static_cast<std::size_t>(n));
  int idx = 0;
  for (auto [u, v] : edges)
    boost::add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1),
                    idx++, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

PlanarityResult is_planar(const UndirectedGraph& g, const Limits& limits) {
  if (g.n() > limits.planar_limit)
    throw Error(ErrorKind::Limit, "planarity test: n=" + std::to_string(g.n()) +
                                      " exceeds planar-limit " +
                                      std::to_string(limits.planar_limit));
  const int n = g.n();
  BoostGraph bg(static_cast<std::size_t>(n));
  {
    int idx = 0;
    for (auto [u, v] : g.edges())
      boost::add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1),
                      idx++, bg);
  }
  using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<Edge>> emb(static_cast<std::size_t>(n));
  std::vector<Edge> kuratowski;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(),
                                            boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kuratowski));

  PlanarityResult res;
  res.planar = planar;
  if (planar) {
    res.embedding.resize(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
      for (const Edge& e : emb[static_cast<std::size_t>(v - 1)]) {
        int a = static_cast<int>(boost::source(e, bg)) + 1;
        int b = static_cast<int>(boost::target(e, bg)) + 1;
        res.embedding[static_cast<std::size_t>(v - 1)].push_back(a == v ? b : a);
      }
    verify_embedding(g, res.embedding);
  } else {
    for (const Edge& e : kuratowski) {
      int a = static_cast<int>(boost::source(e, bg)) + 1;
      int b = static_cast<int>(boost::target(e, bg)) + 1;
      res.obstruction.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(res.obstruction.begin(), res.obstruction.end());
    res.obstruction.erase(
        std::unique(res.obstruction.begin(), res.obstruction.end()),
        res.obstruction.end());
    // Boyer-Myrvold only promises a nonplanar subgraph *containing* a
    // Kuratowski subdivision. An edge-minimal nonplanar subgraph is exactly
    // such a subdivision, so drop every edge whose removal stays nonplanar.
    // A single pass suffices: once removing an edge would make the set
    // planar, that stays true as the set shrinks further.
    for (std::size_t i = 0; i < res.obstruction.size();) {
      auto trial = res.obstruction;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (!edges_planar(n, trial))
        res.obstruction = std::move(trial);
      else
        ++i;
    }
    res.obstruction_kind = kuratowski_kind(g, res.obstruction);
  }
  return res;
}

namespace {

// The nine minimal graphs no line graph contains as an induced subgraph,
// starting with the claw. Orders 4, 5, 5, then six graphs of order 6.
struct Forbidden {
  int n;
  std::vector<std::pair<int, int>> edges;  // 0-based
};

const std::vector<Forbidden>& forbidden_graphs() {
  static const std::vector<Forbidden> list = {
      {4, {{0, 1}, {0, 2}, {0, 3}}},
      {5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}},
      {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}},
      {6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}},
      {6, {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
      {6, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}}},
      {6, {{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}}},
      {6,
       {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
        {2, 5}, {3, 4}}},
      {6,
       {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 5},
        {3, 4}}},
  };
  return list;
}

// All labeled adjacency masks of the forbidden graphs, per order 4/5/6. A mask
// packs the upper triangle of the induced adjacency matrix in row-major pair
// order, so an induced-subgraph test is a single hash lookup.
const std::array<std::unordered_set<std::uint32_t>, 3>& forbidden_masks() {
  static const auto sets = [] {
    std::array<std::unordered_set<std::uint32_t>, 3> out;
    for (const Forbidden& f : forbidden_graphs()) {
      std::vector<std::vector<char>> adj(
          static_cast<std::size_t>(f.n),
          std::vector<char>(static_cast<std::size_t>(f.n), 0));
      for (auto [u, v] : f.edges)
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
      std::vector<int> perm(static_cast<std::size_t>(f.n));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::uint32_t mask = 0;
        int bit = 0;
        for (int a = 0; a < f.n; ++a)
          for (int b = a + 1; b < f.n; ++b, ++bit)
            if (adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]
                   [static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])])
              mask |= std::uint32_t{1} << bit;
        out[static_cast<std::size_t>(f.n - 4)].insert(mask);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
  }();
  return sets;
}

}  // namespace

bool is_line_graph(const UndirectedGraph& g, const Limits& limits) {
  if (g.n() > limits.exact_limit)
    throw Error(ErrorKind::Limit, "line-graph test: n=" + std::to_string(g.n()) +
                                      " exceeds exact-limit " +
                                      std::to_string(limits.exact_limit));
  const auto& masks = forbidden_masks();
  const int n = g.n();
  int sub[6];
  for (int k = 4; k <= 6 && k <= n; ++k) {
    const auto& bad = masks[static_cast<std::size_t>(k - 4)];
    for (int i = 0; i < k; ++i) sub[i] = i + 1;
    for (;;) {
      std::uint32_t mask = 0;
      int bit = 0;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b, ++bit)
          if (g.adjacent(sub[a], sub[b])) mask |= std::uint32_t{1} << bit;
      if (bad.count(mask)) return false;
      int i = k - 1;
      while (i >= 0 && sub[i] == n - (k - 1 - i)) --i;
      if (i < 0) break;
      ++sub[i];
      for (int j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
    }
  }
  return true;
}

bool is_unidirected(const SideInfoGraph& g) {
  for (auto [u, v] : g.arcs())
    if (g.has_arc(v, u)) return false;
  return true;
}

bool is_undirected(const SideInfoGraph& g) {
  for (auto [u, v] : g.arcs())
    if (!g.has_arc(v, u)) return false;
  return true;
}

ClassLabel classify(const SideInfoGraph& g, bool fuzzy_asserted, const Limits& limits) {
  ClassLabel label;
  label.undirected = is_undirected(g);
  label.unidirected = is_unidirected(g);
  label.fuzzy_asserted = fuzzy_asserted;

  UndirectedGraph un = underlying_undirected(g);
  UndirectedGraph un_comp = underlying_undirected(complement(g));
  if (g.n() <= limits.planar_limit) {
    label.planar = is_planar(un, limits).planar;
    label.complement_planar = is_planar(un_comp, limits).planar;
  } else {
    label.notes.push_back("planarity skipped: n exceeds planar-limit");
  }
  if (g.n() <= limits.exact_limit) {
    label.line_graph = is_line_graph(un, limits);
  } else {
    label.notes.push_back("line-graph recognition skipped: n exceeds exact-limit");
  }
  if (fuzzy_asserted)
    label.notes.push_back("fuzzy circular interval membership asserted by caller");

  label.bilinear_ramsey = label.planar || label.line_graph || fuzzy_asserted;
  label.factor4_directed = label.planar || label.complement_planar;
  label.factor4_undirected = label.undirected && label.factor4_directed;
  label.log_lower_bound = label.unidirected;
  return label;
}

}  // namespace icb
