// Exact computation of the broadcast-rate sandwich
//   MAIS(G) <= beta <= chi_f(complement of core) <= clique cover number,
// by subset scans, branch-and-bound coloring, and exact rational LP.
#pragma once

#include "icb/graph.hpp"
#include "icb/rational.hpp"

#include <optional>
#include <vector>

namespace icb {

struct AlphaResult {
  int value = 0;
  VertexSet witness;  // a maximum independent set
};

struct ColoringResult {
  int value = 0;
  std::vector<int> colors;  // colors[v-1] in [1, value], proper
};

struct FractionalCoverEntry {
  VertexSet set;
  Rational weight;
};

struct FractionalResult {
  Rational value;
  std::vector<FractionalCoverEntry> cover;  // nonzero weights only
};

struct CliqueCoverResult {
  int value = 0;
  std::vector<VertexSet> partition;  // cliques of g covering [n] exactly once
};

struct MaisResult {
  int value = 0;
  VertexSet witness;  // acyclic induced set
};

AlphaResult independence_number(const UndirectedGraph& g, const Limits& limits = {});
ColoringResult chromatic_number(const UndirectedGraph& g, const Limits& limits = {});
int b_fold_chromatic(const UndirectedGraph& g, int b, const Limits& limits = {});
std::vector<VertexSet> maximal_independent_sets(const UndirectedGraph& g,
                                                const Limits& limits = {});
FractionalResult fractional_chromatic_number(const UndirectedGraph& g,
                                             const Limits& limits = {});
CliqueCoverResult clique_cover_number(const SideInfoGraph& g, const Limits& limits = {});
MaisResult mais(const SideInfoGraph& g, const Limits& limits = {});

struct BoundsReport {
  int n = 0;
  MaisResult mais;
  AlphaResult alpha_core;  // independence number of the bidirectional core
  CliqueCoverResult clique_cover;
  Rational fractional;                        // chi_f of the core complement
  std::vector<FractionalCoverEntry> fractional_cover;  // cliques of g with weights
  Rational gap_ratio;                         // clique_cover / mais
  bool undirected = false;
  bool mais_equals_alpha = false;             // recorded when undirected
  Rational beta_lower;                        // mais
  Rational beta_upper;                        // fractional clique cover
  bool beta_tight = false;
  // Asymptotic reference curves (not guarantees at this n); absent for n = 1.
  std::optional<double> ref_n_over_log;
  std::optional<double> ref_n_loglog_over_log;
};

BoundsReport bounds_report(const SideInfoGraph& g, const Limits& limits = {});

// True iff the induced sub-digraph on `s` has no directed cycle (a
// bidirectional pair counts as a 2-cycle).
bool is_acyclic_induced(const SideInfoGraph& g, const VertexSet& s);

namespace serial {

// Reference implementations on an independent search strategy (decreasing-size
// combination scans with early exit). Kept for tests and the benchmark; must
// agree with the parallel kernels bit for bit, including witnesses.
AlphaResult independence_number(const UndirectedGraph& g, const Limits& limits = {});
MaisResult mais(const SideInfoGraph& g, const Limits& limits = {});

}  // namespace serial

}  // namespace icb
