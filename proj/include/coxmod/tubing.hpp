#pragma once

#include "coxmod/graph.hpp"
#include "coxmod/ints.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace coxmod {

// A tube is a nonempty proper node subset inducing a connected subgraph.
bool is_tube(const Graph& g, Mask s);

// Compatible = nested, or disjoint with a disconnected union. (Adjacency is
// decided by connectivity of the union; properness plays no role there,
// otherwise the pentagon would grow a sixth vertex.)
bool are_compatible(const Graph& g, Mask t1, Mask t2);

// All tubes, ascending by mask value. Deterministic.
std::vector<Mask> all_tubes(const Graph& g);

struct Tubing {
  std::vector<Mask> tubes;  // strictly ascending

  bool operator==(const Tubing& o) const { return tubes == o.tubes; }
  bool operator<(const Tubing& o) const { return tubes < o.tubes; }
  int size() const { return static_cast<int>(tubes.size()); }
  std::string to_json(const Graph& g) const;  // sorted list of sorted node lists
};

// Visit every tubing of a connected graph exactly once (the empty tubing
// included), in a fixed DFS order over ascending tubes. A size filter k
// restricts the visit to k-tubings.
void enumerate_tubings(const Graph& g, std::optional<int> k,
                       const std::function<void(const Tubing&)>& visit);

// Number of k-tubings for k = 0..n-1.
std::vector<Int> tubing_counts_by_size(const Graph& g);

// Facet factors of the 1-tubing {t}: (induced subgraph, reconnected
// complement).
std::pair<Graph, Graph> facet_decomposition(const Graph& g, Mask t);

// All tubings containing `base`, graded by tubing size (index 0 = |base|).
// The interval of the face poset below the face of `base`.
std::vector<std::vector<Tubing>> face_interval(const Graph& g, const Tubing& base);

// Grading only (sizes of the face_interval layers), cheaper than
// materializing.
std::vector<Int> face_interval_counts(const Graph& g, const Tubing& base);

}  // namespace coxmod
