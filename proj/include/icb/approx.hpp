// The approximation guarantees as executable logic: the Ramsey-based gap
// formula with its two-case certificate, the factor-4 planar bounds, and the
// pivot extraction behind the log-n lower bound for unidirected graphs.
#pragma once

#include "icb/graph.hpp"
#include "icb/rational.hpp"

#include <string>
#include <vector>

namespace icb {

// Constants of a class Ramsey bound R(i,j) <= c * i^a * j^b, plus the derived
// pivot k and the multiplicative gap of the clique covering scheme at size n.
struct ClassConstants {
  Rational a = 1;
  Rational b = 1;
  Rational c = 1;
  int n = 0;
  double k = 0;    // (n/c)^{1/(a+b+1)}
  double gap = 0;  // c^{1/(a+b+1)} * n^{(a+b)/(a+b+1)} = n/k
};

ClassConstants theorem1_parameters(int n, const Rational& a, const Rational& b,
                                   const Rational& c);

enum class GapCase { CliqueCoverSmall, IndependentSetLarge };

struct GapCertificate {
  GapCase kind = GapCase::CliqueCoverSmall;
  std::vector<VertexSet> partition;  // case 1: optimal clique partition
  VertexSet independent_set;         // case 2: maximum independent set
  Rational claimed_bound;            // case 1: chi(complement); case 2: |IS|
  double threshold = 0;              // case 1: 2n/k; case 2: required size
  bool class_assertion_ok = true;    // case 2 size bound met
  std::string note;
};

// Decides the two cases of the gap theorem on an undirected instance whose
// class satisfies the bound behind `cc` (caller-asserted).
GapCertificate theorem1_certificate(const SideInfoGraph& g, const ClassConstants& cc,
                                    const Limits& limits = {});

struct BoundPair {
  Rational lower;
  Rational upper;
  std::string route;
};

// Factor-4 sandwich for an undirected instance with G or its complement
// planar; when both routes apply the tighter pair is reported.
BoundPair planar_bounds(const SideInfoGraph& g, const Limits& limits = {});

// Directed version: the Un(G)-planar route takes precedence, otherwise the
// Un(complement)-planar route applies.
BoundPair directed_planar_bounds(const SideInfoGraph& g, const Limits& limits = {});

// For a unidirected graph, returns an acyclic induced vertex set of size at
// least floor(log2 n) + 1, listed in topological order.
VertexSet extract_acyclic(const SideInfoGraph& g);

// max(floor(log2 n), |extract_acyclic(g)|), a certified lower bound on beta.
int unidirected_lower_bound(const SideInfoGraph& g);

}  // namespace icb
