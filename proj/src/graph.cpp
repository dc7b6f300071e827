#include "icb/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace icb {

namespace {

void set_bit(std::vector<std::uint64_t>& rows, int words, int u, int v) {
  rows[static_cast<std::size_t>(u) * words + v / 64] |= std::uint64_t{1} << (v % 64);
}

bool get_bit(const std::vector<std::uint64_t>& rows, int words, int u, int v) {
  return rows[static_cast<std::size_t>(u) * words + v / 64] >> (v % 64) & 1;
}

}  // namespace

SideInfoGraph::SideInfoGraph(int n, Mode mode, std::vector<Arc> arcs)
    : n_(n), mode_(mode), arcs_(std::move(arcs)) {
  if (n_ <= 0) throw Error(ErrorKind::Invalid, "vertex count must be positive");
  for (auto [u, v] : arcs_) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw Error(ErrorKind::Invalid, "arc endpoint out of range");
    if (u == v) throw Error(ErrorKind::Invalid, "self-loop not allowed");
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  words_ = (n_ + 63) / 64;
  out_.assign(static_cast<std::size_t>(n_) * words_, 0);
  in_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (auto [u, v] : arcs_) {
    set_bit(out_, words_, u - 1, v - 1);
    set_bit(in_, words_, v - 1, u - 1);
  }
  if (mode_ == Mode::Undirected) {
    for (auto [u, v] : arcs_)
      if (!has_arc(v, u))
        throw Error(ErrorKind::Invalid, "undirected graph requires symmetric arcs");
  }
}

bool SideInfoGraph::has_arc(int u, int v) const {
  return get_bit(out_, words_, u - 1, v - 1);
}

VertexSet SideInfoGraph::side_info(int j) const {
  VertexSet a;
  for (int i = 1; i <= n_; ++i)
    if (i != j && has_arc(i, j)) a.push_back(i);
  return a;
}

std::uint64_t SideInfoGraph::out_mask64(int u) const {
  if (n_ > 64) throw Error(ErrorKind::Limit, "mask access requires n <= 64");
  return out_[static_cast<std::size_t>(u - 1)];
}

std::uint64_t SideInfoGraph::in_mask64(int u) const {
  if (n_ > 64) throw Error(ErrorKind::Limit, "mask access requires n <= 64");
  return in_[static_cast<std::size_t>(u - 1)];
}

UndirectedGraph::UndirectedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ <= 0) throw Error(ErrorKind::Invalid, "vertex count must be positive");
  for (auto& [u, v] : edges_) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw Error(ErrorKind::Invalid, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::Invalid, "self-loop not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  words_ = (n_ + 63) / 64;
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (auto [u, v] : edges_) {
    set_bit(adj_, words_, u - 1, v - 1);
    set_bit(adj_, words_, v - 1, u - 1);
  }
}

bool UndirectedGraph::adjacent(int u, int v) const {
  return get_bit(adj_, words_, u - 1, v - 1);
}

int UndirectedGraph::degree(int u) const {
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += __builtin_popcountll(adj_[static_cast<std::size_t>(u - 1) * words_ + w]);
  return d;
}

VertexSet UndirectedGraph::neighbors(int u) const {
  VertexSet a;
  for (int v = 1; v <= n_; ++v)
    if (v != u && adjacent(u, v)) a.push_back(v);
  return a;
}

std::uint64_t UndirectedGraph::adj_mask64(int u) const {
  if (n_ > 64) throw Error(ErrorKind::Limit, "mask access requires n <= 64");
  return adj_[static_cast<std::size_t>(u - 1)];
}

UndirectedGraph UndirectedGraph::complement() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v)
      if (!adjacent(u, v)) edges.emplace_back(u, v);
  return UndirectedGraph(n_, std::move(edges));
}

UndirectedGraph UndirectedGraph::induced(const VertexSet& s) const {
  check_vertex_set(s, n_);
  std::vector<int> rank(n_ + 1, 0);
  for (std::size_t k = 0; k < s.size(); ++k) rank[s[k]] = static_cast<int>(k) + 1;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (adjacent(s[a], s[b])) edges.emplace_back(rank[s[a]], rank[s[b]]);
  return UndirectedGraph(static_cast<int>(s.size()), std::move(edges));
}

SideInfoGraph UndirectedGraph::as_side_info() const {
  std::vector<Arc> arcs;
  arcs.reserve(edges_.size() * 2);
  for (auto [u, v] : edges_) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return SideInfoGraph(n_, Mode::Undirected, std::move(arcs));
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

SideInfoGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  bool have_mode = false;
  Mode mode = Mode::Directed;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "n") {
      if (n >= 0) parse_fail(line_no, "duplicate n declaration");
      if (!(ls >> n) || n <= 0) parse_fail(line_no, "n requires a positive integer");
    } else if (tag == "mode") {
      if (have_mode) parse_fail(line_no, "duplicate mode declaration");
      if (n < 0) parse_fail(line_no, "mode must follow the n line");
      std::string m;
      if (!(ls >> m)) parse_fail(line_no, "mode requires directed or undirected");
      if (m == "directed")
        mode = Mode::Directed;
      else if (m == "undirected")
        mode = Mode::Undirected;
      else
        parse_fail(line_no, "unknown mode '" + m + "'");
      have_mode = true;
    } else if (tag == "e") {
      if (!have_mode) parse_fail(line_no, "edge line before n/mode header");
      int u = 0, v = 0;
      if (!(ls >> u >> v)) parse_fail(line_no, "edge line requires two vertex indices");
      if (u < 1 || u > n || v < 1 || v > n) parse_fail(line_no, "vertex out of range");
      if (u == v) parse_fail(line_no, "self-loop not allowed");
      arcs.emplace_back(u, v);
      if (mode == Mode::Undirected) arcs.emplace_back(v, u);
    } else {
      parse_fail(line_no, "unknown directive '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest) parse_fail(line_no, "trailing tokens");
  }
  if (n < 0) throw Error(ErrorKind::Parse, "missing n line");
  if (!have_mode) throw Error(ErrorKind::Parse, "missing mode line");
  return SideInfoGraph(n, mode, std::move(arcs));
}

SideInfoGraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Parse, "cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const SideInfoGraph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  out << "mode " << (g.mode() == Mode::Undirected ? "undirected" : "directed") << "\n";
  for (auto [u, v] : g.arcs()) {
    if (g.mode() == Mode::Undirected && u > v) continue;
    out << "e " << u << " " << v << "\n";
  }
  return out.str();
}

SideInfoGraph complement(const SideInfoGraph& g) {
  std::vector<Arc> arcs;
  for (int u = 1; u <= g.n(); ++u)
    for (int v = 1; v <= g.n(); ++v)
      if (u != v && !g.has_arc(u, v)) arcs.emplace_back(u, v);
  return SideInfoGraph(g.n(), g.mode(), std::move(arcs));
}

UndirectedGraph underlying_undirected(const SideInfoGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= g.n(); ++u)
    for (int v = u + 1; v <= g.n(); ++v)
      if (g.has_arc(u, v) || g.has_arc(v, u)) edges.emplace_back(u, v);
  return UndirectedGraph(g.n(), std::move(edges));
}

UndirectedGraph bidirectional_core(const SideInfoGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= g.n(); ++u)
    for (int v = u + 1; v <= g.n(); ++v)
      if (g.has_arc(u, v) && g.has_arc(v, u)) edges.emplace_back(u, v);
  return UndirectedGraph(g.n(), std::move(edges));
}

SideInfoGraph induced_subgraph(const SideInfoGraph& g, const VertexSet& s) {
  check_vertex_set(s, g.n());
  if (s.empty()) throw Error(ErrorKind::Invalid, "induced subgraph needs a nonempty set");
  std::vector<int> rank(g.n() + 1, 0);
  for (std::size_t k = 0; k < s.size(); ++k) rank[s[k]] = static_cast<int>(k) + 1;
  std::vector<Arc> arcs;
  for (int u : s)
    for (int v : s)
      if (u != v && g.has_arc(u, v)) arcs.emplace_back(rank[u], rank[v]);
  return SideInfoGraph(static_cast<int>(s.size()), g.mode(), std::move(arcs));
}

void check_vertex_set(const VertexSet& s, int n) {
  std::vector<char> seen(n + 1, 0);
  for (int v : s) {
    if (v < 1 || v > n) throw Error(ErrorKind::Invalid, "vertex index out of range");
    if (seen[v]) throw Error(ErrorKind::Invalid, "vertex set has duplicates");
    seen[v] = 1;
  }
}

}  // namespace icb
