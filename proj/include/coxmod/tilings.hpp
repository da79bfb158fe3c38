#pragma once

#include "coxmod/diagram.hpp"
#include "coxmod/graph.hpp"
#include "coxmod/operad.hpp"
#include "coxmod/tubing.hpp"

#include <map>
#include <string>
#include <vector>

namespace coxmod {

struct TileAssignment {
  Family complex_family;
  Graph tile;
  int tile_dimension;  // rank-1 spherical, rank toroidal
};

// Which graph-associahedron tiles the blown-up complex.
TileAssignment tile_graph(Family f);

// Factor classes that appear when faces of the tiling polytopes decompose.
// The Xa/Xb/Xc/X4 shapes are pinned operationally: X4 is the complete graph
// on four nodes (its polytope is the 3-permutohedron) and Xa_3 is the
// triangle (the hexagon facet of the D_4 polytope); the rest of the catalog
// is discovered by scanning reconnected complements.
enum class FactorClass { Path, Cycle, DGraph, DtilGraph, X4, Xa, Xb, Xc, Other };

struct FactorLabel {
  FactorClass cls;
  int nodes;

  std::string str() const;
  bool operator<(const FactorLabel& o) const {
    return std::tie(cls, nodes) < std::tie(o.cls, o.nodes);
  }
  bool operator==(const FactorLabel& o) const {
    return cls == o.cls && nodes == o.nodes;
  }
};

FactorLabel classify_graph(const Graph& g);

// Product decomposition of the face of P(g) at a tubing, as terminal factor
// graphs found by recursive facet splitting.
std::vector<FactorLabel> classify_face_factors(const Graph& g, const Tubing& t);

// Catalog of every factor class arising from the D / Dtilde tiles up to the
// given rank, with one witness graph each.
struct AtlasEntry {
  FactorLabel label;
  Graph witness;
  std::string first_seen;  // "D5 facet", ...
};
std::vector<AtlasEntry> special_graph_atlas(int max_rank);

// Face poset of one chamber of an atypical complex: the interval above the
// thick base tubing inside the ambient tile poset, plus facet labels.
struct AtypicalChamber {
  Chamber chamber;
  Tubing base;                      // thick tubes in the ambient graph
  std::vector<Int> face_counts;     // graded from the chamber itself down
  FactorLabel type;                 // the chamber polytope's class
  std::vector<FactorLabel> facets;  // one entry per added facet tube
};

AtypicalChamber atypical_chamber_poset(const Chamber& c);

// Walk to adjacent chambers across the given facets, reporting the chamber
// type at every step (thick-aware flips change types along the way).
struct WalkStep {
  Chamber chamber;
  FactorLabel type;
};
std::vector<WalkStep> atypical_gluing_walk(const Chamber& start,
                                           const std::vector<Bracket>& facets);

}  // namespace coxmod
