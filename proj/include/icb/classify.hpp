// Graph-class recognition: planarity (with verified embedding or Kuratowski
// obstruction), line graphs via the nine forbidden induced subgraphs, and the
// directed-graph orientation predicates.
#pragma once

#include "icb/graph.hpp"

#include <string>
#include <vector>

namespace icb {

struct PlanarityResult {
  bool planar = false;
  // When planar: embedding[v-1] lists v's neighbors in cyclic order; verified
  // by face counting against Euler's formula before being returned.
  std::vector<VertexSet> embedding;
  // When not planar: edges of a Kuratowski subgraph; verified to reduce to
  // K5 or K3,3 under suppression of degree-2 vertices.
  std::vector<std::pair<int, int>> obstruction;
  std::string obstruction_kind;  // "K5" or "K3,3"
};

PlanarityResult is_planar(const UndirectedGraph& g, const Limits& limits = {});

// True iff g is the line graph of some graph: no induced subgraph on at most
// six vertices is one of the nine forbidden graphs.
bool is_line_graph(const UndirectedGraph& g, const Limits& limits = {});

bool is_unidirected(const SideInfoGraph& g);  // no bidirectional pair
bool is_undirected(const SideInfoGraph& g);   // every arc's reverse present

struct ClassLabel {
  bool planar = false;             // Un(G) (the graph itself when undirected)
  bool line_graph = false;         // Un(G)
  bool undirected = false;
  bool unidirected = false;
  bool fuzzy_asserted = false;     // user flag, never computed
  bool complement_planar = false;  // Un(complement(G))
  // Which results apply to this instance:
  bool bilinear_ramsey = false;      // R <= i*j constants hold for a known class
  bool factor4_undirected = false;   // undirected, G or its complement planar
  bool factor4_directed = false;     // Un(G) or Un(complement) planar
  bool log_lower_bound = false;      // unidirected
  std::vector<std::string> notes;
};

// Aggregates the recognizers over g, Un(G), and Un(complement(G)). Checks
// that exceed a size limit are skipped with a note rather than failing.
ClassLabel classify(const SideInfoGraph& g, bool fuzzy_asserted = false,
                    const Limits& limits = {});

}  // namespace icb
