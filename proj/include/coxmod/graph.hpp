#pragma once

#include "coxmod/family.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace coxmod {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask bit(int i) { return Mask{1} << i; }

// Finite simple graph with ordered node ids 0..n-1 and optional integer
// order labels m_ij > 3 on edges. Labels are carried for documentation and
// serialization only; no polytope computation reads them.
struct Graph {
  int n = 0;
  std::vector<Mask> adj;                    // adjacency masks per node
  std::map<std::pair<int, int>, int> labels;

  Graph() = default;
  explicit Graph(int nodes);

  void add_edge(int a, int b, int label = 3);
  bool has_edge(int a, int b) const { return (adj[a] >> b) & 1; }
  Mask full_mask() const { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

  // Induced connectivity of a nonempty node subset.
  bool connected_subset(Mask s) const;
  bool is_connected() const { return n == 0 || connected_subset(full_mask()); }

  std::vector<std::pair<int, int>> edge_list() const;  // lexicographically sorted

  // Canonical JSON object {nodes, edges, labels}.
  std::string to_json() const;

  // Isomorphism-invariant key (min-lex adjacency over label-preserving
  // orderings, refined by degree). Intended for the small graphs that arise
  // as tiles and face factors.
  std::string canonical_key() const;

  bool operator==(const Graph& o) const;
};

// The seven graph families from the Coxeter diagrams.
//
// Node numbering is fixed so goldens stay stable:
//   A_n, B_n:  path 0-1-...-(n-1); B labels edge {0,1} with 4 (node 0 is the
//              x_1 = 0 wall).
//   D_n:       path 0..n-3 plus fork leaves n-2, n-1 on node n-3.
//   Atil_n:    cycle 0-1-...-n-0 (single edge when n = 1).
//   Btil_n:    path 0..n-2 with 4-label on {0,1}, fork leaves n-1, n on n-2.
//   Ctil_n:    path 0..n with 4-labels on both terminal edges.
//   Dtil_n:    central path 0..n-4, fork leaves n-3, n-2 on node 0 and
//              n-1, n on node n-4.
Graph build_coxeter_graph(Family f);

// Induced subgraph on a nonempty node set; nodes are relabeled 0..|t|-1 in
// increasing order of original id, labels inherited.
Graph induced_subgraph(const Graph& g, Mask t);

// Reconnected complement: nodes V - t (relabeled as above); edge {a,b}
// whenever {a,b} or {a,b} union t induces a connected subgraph of g.
// t must be a tube of g.
Graph reconnected_complement(const Graph& g, Mask t);

}  // namespace coxmod
