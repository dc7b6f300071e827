// Closed-form class Ramsey numbers, the Erdos-Szekeres bound with its
// constructive pivot extraction, and exhaustive small-order verification.
#pragma once

#include "icb/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace icb {

enum class GraphClass { Planar, Line, Fuzzy, GeneralUpper };

GraphClass parse_graph_class(const std::string& token);
std::string graph_class_name(GraphClass c);

struct RamseyQuery {
  GraphClass cls = GraphClass::GeneralUpper;
  int i = 1;
  int j = 1;
};

struct RamseyValue {
  std::int64_t value = 0;
  bool is_upper_bound = false;  // GeneralUpper outside the base cases
  std::string source;           // which remark/lemma produced the value
  std::vector<std::string> notes;
};

// Exact class Ramsey number (base cases take precedence over the class
// formulas), or the binomial upper bound for GeneralUpper.
RamseyValue class_ramsey(const RamseyQuery& q);

// C(i+j-2, i-1); throws ErrorKind::Limit if the value exceeds 64 bits.
std::int64_t erdos_szekeres_bound(int i, int j);

// max{j : bound(k, j) <= m}, or 0 if none. Scans j upward; a bound that never
// exceeds m (possible only for degenerate bounds) is rejected.
int t_k_of_m(int k, std::int64_t m,
             const std::function<std::int64_t(int, int)>& bound);

enum class CertificateKind { Clique, IndependentSet };

struct RamseyCertificate {
  CertificateKind kind = CertificateKind::Clique;
  VertexSet vertices;
};

// Finds a clique of size i or an independent set of size j in any graph with
// n >= erdos_szekeres_bound(i, j) via recursive neighborhood pivoting.
RamseyCertificate ramsey_extract(const UndirectedGraph& g, int i, int j);

struct VerifyResult {
  bool holds = false;
  std::uint64_t graphs_checked = 0;  // all labeled graphs at the order
  std::uint64_t class_members = 0;
  std::optional<UndirectedGraph> counterexample;  // first in enumeration order
};

// Checks "every class graph on `order` vertices has an i-clique or
// j-independent-set" by exhausting all labeled graphs at that order.
VerifyResult verify_class_ramsey(GraphClass cls, int i, int j, int order,
                                 const Limits& limits = {});

struct BilinearCheck {
  bool holds = false;
  std::optional<std::pair<int, int>> first_violation;
};

// class_ramsey(cls, i, j) <= i*j and <= erdos_szekeres_bound(i, j) over the
// whole grid [1,i_max] x [1,j_max].
BilinearCheck bilinear_bound_check(GraphClass cls, int i_max, int j_max);

}  // namespace icb
