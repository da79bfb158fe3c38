#include "coxmod/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxmod {

Graph::Graph(int nodes) : n(nodes), adj(nodes, 0) {
  if (nodes < 0 || nodes > 64) throw std::invalid_argument("graph size out of range");
}

void Graph::add_edge(int a, int b, int label) {
  if (a == b) throw std::invalid_argument("self-loop");
  adj[a] |= bit(b);
  adj[b] |= bit(a);
  if (label > 3) labels[{std::min(a, b), std::max(a, b)}] = label;
}

bool Graph::connected_subset(Mask s) const {
  if (s == 0) return false;
  Mask seen = s & (~s + 1);  // lowest bit
  for (;;) {
    Mask grow = seen;
    Mask rest = s & ~seen;
    if (!rest) return true;
    for (int v = 0; rest >> v; ++v)
      if ((rest >> v) & 1)
        if (adj[v] & seen) grow |= bit(v);
    if (grow == seen) return false;
    seen = grow;
  }
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (has_edge(a, b)) es.emplace_back(a, b);
  return es;
}

std::string Graph::to_json() const {
  std::ostringstream os;
  os << "{\"nodes\":" << n << ",\"edges\":[";
  bool first = true;
  for (auto [a, b] : edge_list()) {
    if (!first) os << ",";
    first = false;
    os << "[" << a << "," << b << "]";
  }
  os << "],\"labels\":{";
  first = true;
  for (auto& [e, m] : labels) {
    if (!first) os << ",";
    first = false;
    os << "\"" << e.first << "-" << e.second << "\":" << m;
  }
  os << "}}";
  return os.str();
}

bool Graph::operator==(const Graph& o) const {
  return n == o.n && adj == o.adj && labels == o.labels;
}

namespace {

// Min-lex search over node orderings, pruned by degree classes. Small graphs
// only (tiles and face factors), so the simple backtracking is plenty.
struct CanonSearch {
  const Graph& g;
  std::vector<int> degree;
  std::string best;
  std::vector<int> perm;      // perm[pos] = original node
  std::vector<bool> used;

  explicit CanonSearch(const Graph& gr) : g(gr), degree(gr.n), used(gr.n, false) {
    for (int v = 0; v < g.n; ++v) degree[v] = popcount(g.adj[v]);
  }

  std::string row(int pos) const {
    // adjacency of perm[pos] against already-placed nodes
    std::string r(pos, '0');
    for (int j = 0; j < pos; ++j)
      if (g.has_edge(perm[pos], perm[j])) r[j] = '1';
    return r;
  }

  void run(int pos, std::string prefix) {
    if (pos == g.n) {
      if (best.empty() || prefix < best) best = prefix;
      return;
    }
    if (!best.empty() && prefix > best.substr(0, prefix.size())) return;
    for (int v = 0; v < g.n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      perm.push_back(v);
      std::string next = prefix + std::to_string(degree[v]) + "|" + row(pos) + ";";
      run(pos + 1, next);
      perm.pop_back();
      used[v] = false;
    }
  }
};

}  // namespace

std::string Graph::canonical_key() const {
  if (n > 14) throw std::invalid_argument("canonical_key limited to small graphs");
  CanonSearch s(*this);
  s.run(0, "");
  return std::to_string(n) + ":" + s.best;
}

Graph build_coxeter_graph(Family f) {
  check_rank(f);
  int n = f.rank;
  switch (f.tag) {
    case FamilyTag::A: {
      Graph g(n);
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case FamilyTag::B: {
      Graph g(n);
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, i == 0 ? 4 : 3);
      return g;
    }
    case FamilyTag::D: {
      Graph g(n);
      for (int i = 0; i + 1 < n - 2; ++i) g.add_edge(i, i + 1);
      g.add_edge(n - 3, n - 2);
      g.add_edge(n - 3, n - 1);
      return g;
    }
    case FamilyTag::Atil: {
      Graph g(n + 1);
      for (int i = 0; i < n; ++i) g.add_edge(i, i + 1);
      if (n >= 2) g.add_edge(n, 0);
      return g;
    }
    case FamilyTag::Btil: {
      Graph g(n + 1);
      g.add_edge(0, 1, 4);
      for (int i = 1; i + 1 < n - 1; ++i) g.add_edge(i, i + 1);
      g.add_edge(n - 2, n - 1);
      g.add_edge(n - 2, n);
      return g;
    }
    case FamilyTag::Ctil: {
      Graph g(n + 1);
      for (int i = 0; i < n; ++i) g.add_edge(i, i + 1, (i == 0 || i == n - 1) ? 4 : 3);
      return g;
    }
    case FamilyTag::Dtil: {
      Graph g(n + 1);
      for (int i = 0; i + 1 <= n - 4; ++i) g.add_edge(i, i + 1);
      g.add_edge(0, n - 3);
      g.add_edge(0, n - 2);
      g.add_edge(n - 4, n - 1);
      g.add_edge(n - 4, n);
      return g;
    }
  }
  throw std::logic_error("unreachable");
}

Graph induced_subgraph(const Graph& g, Mask t) {
  if (t == 0) throw std::invalid_argument("induced_subgraph: empty node set");
  std::vector<int> nodes;
  for (int v = 0; v < g.n; ++v)
    if ((t >> v) & 1) nodes.push_back(v);
  Graph h(static_cast<int>(nodes.size()));
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (g.has_edge(nodes[i], nodes[j])) {
        auto it = g.labels.find({nodes[i], nodes[j]});
        h.add_edge(static_cast<int>(i), static_cast<int>(j),
                   it == g.labels.end() ? 3 : it->second);
      }
  return h;
}

Graph reconnected_complement(const Graph& g, Mask t) {
  Mask rest = g.full_mask() & ~t;
  if (t == 0 || rest == 0 || !g.connected_subset(t))
    throw std::invalid_argument("reconnected_complement: t is not a tube");
  std::vector<int> nodes;
  for (int v = 0; v < g.n; ++v)
    if ((rest >> v) & 1) nodes.push_back(v);
  Graph h(static_cast<int>(nodes.size()));
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      int a = nodes[i], b = nodes[j];
      bool edge = g.has_edge(a, b) || g.connected_subset(bit(a) | bit(b) | t);
      if (edge) {
        auto it = g.labels.find({std::min(a, b), std::max(a, b)});
        h.add_edge(static_cast<int>(i), static_cast<int>(j),
                   it == g.labels.end() || !g.has_edge(a, b) ? 3 : it->second);
      }
    }
  return h;
}

}  // namespace coxmod
