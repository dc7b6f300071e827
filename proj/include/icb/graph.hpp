// Side-information graphs for index coding: directed/undirected representations,
// the instance file format, and the structural transforms the bounds are built on.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icb {

enum class ErrorKind {
  Parse,     // malformed input (file, arguments)
  Limit,     // instance exceeds a configured resource limit
  Invalid,   // precondition violated by the caller
  Internal,  // a computed witness failed its own validation
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Resource limits for the exact (exponential-time) solvers. Parsing accepts
// any n; solvers check against these and throw ErrorKind::Limit.
struct Limits {
  int exact_limit = 20;   // max n for subset enumeration, coloring, LP
  int b_limit = 4;        // max fold count for b-fold coloring
  int enum_order = 7;     // max order for exhaustive graph enumeration
  int planar_limit = 64;  // max n for planarity testing
};

// 1-based vertex indices, distinct, each in [1, n] of the graph it refers to.
using VertexSet = std::vector<int>;

using Arc = std::pair<int, int>;  // (i, j): receiver j knows message i

enum class Mode { Directed, Undirected };

class UndirectedGraph;

// Directed side-information graph on vertices 1..n. Arc (i, j) means message i
// is side information at receiver j. Undirected mode keeps the arc set
// symmetric (an undirected edge is the bidirectional pair).
class SideInfoGraph {
 public:
  SideInfoGraph(int n, Mode mode, std::vector<Arc> arcs);

  int n() const { return n_; }
  Mode mode() const { return mode_; }
  const std::vector<Arc>& arcs() const { return arcs_; }  // sorted, deduplicated
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  bool has_arc(int u, int v) const;
  VertexSet side_info(int j) const;  // A_j, sorted

  // Out-neighbor bits of u packed into one word; requires n <= 64.
  std::uint64_t out_mask64(int u) const;
  std::uint64_t in_mask64(int u) const;

  bool operator==(const SideInfoGraph& other) const = default;

 private:
  int n_ = 0;
  Mode mode_ = Mode::Directed;
  std::vector<Arc> arcs_;
  std::vector<std::uint64_t> out_;  // n_ rows of words_ words each
  std::vector<std::uint64_t> in_;
  int words_ = 0;
};

// Simple undirected graph on vertices 1..n.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // u < v, sorted
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool adjacent(int u, int v) const;
  int degree(int u) const;
  VertexSet neighbors(int u) const;
  std::uint64_t adj_mask64(int u) const;  // requires n <= 64

  UndirectedGraph complement() const;
  UndirectedGraph induced(const VertexSet& s) const;

  // View as a side-information graph (every edge becomes a bidirectional pair).
  SideInfoGraph as_side_info() const;

  bool operator==(const UndirectedGraph& other) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;
  int words_ = 0;
};

// Instance file format (line oriented, '#' starts a comment):
//   n <count>
//   mode directed|undirected
//   e <u> <v>          (directed: arc u->v; undirected: both arcs)
SideInfoGraph parse_graph(const std::string& text);
SideInfoGraph load_graph(const std::string& path);

// Canonical form: header lines, then edge lines sorted by (u, v); undirected
// graphs emit each edge once with u < v. parse(serialize(g)) == g.
std::string serialize_graph(const SideInfoGraph& g);

SideInfoGraph complement(const SideInfoGraph& g);
UndirectedGraph underlying_undirected(const SideInfoGraph& g);  // Un(G)
UndirectedGraph bidirectional_core(const SideInfoGraph& g);
SideInfoGraph induced_subgraph(const SideInfoGraph& g, const VertexSet& s);

void check_vertex_set(const VertexSet& s, int n);

}  // namespace icb
