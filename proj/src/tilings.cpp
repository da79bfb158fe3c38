#include "coxmod/tilings.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxmod {

TileAssignment tile_graph(Family f) {
  check_rank(f);
  TileAssignment ta;
  ta.complex_family = f;
  switch (f.tag) {
    case FamilyTag::A:
    case FamilyTag::B: ta.tile = build_coxeter_graph({FamilyTag::A, f.rank}); break;
    case FamilyTag::D: ta.tile = build_coxeter_graph({FamilyTag::D, f.rank}); break;
    case FamilyTag::Atil: ta.tile = build_coxeter_graph({FamilyTag::Atil, f.rank}); break;
    case FamilyTag::Btil: ta.tile = build_coxeter_graph({FamilyTag::D, f.rank + 1}); break;
    case FamilyTag::Ctil: ta.tile = build_coxeter_graph({FamilyTag::A, f.rank + 1}); break;
    case FamilyTag::Dtil: ta.tile = build_coxeter_graph({FamilyTag::Dtil, f.rank}); break;
  }
  ta.tile.labels.clear();  // tiles only see adjacency
  ta.tile_dimension = is_spherical(f.tag) ? f.rank - 1 : f.rank;
  return ta;
}

std::string FactorLabel::str() const {
  switch (cls) {
    case FactorClass::Path: return "A" + std::to_string(nodes);
    case FactorClass::Cycle: return "C" + std::to_string(nodes);
    case FactorClass::DGraph: return "D" + std::to_string(nodes);
    case FactorClass::DtilGraph: return "Dt" + std::to_string(nodes);
    case FactorClass::X4: return "X4";
    case FactorClass::Xa: return "Xa" + std::to_string(nodes);
    case FactorClass::Xb: return "Xb" + std::to_string(nodes);
    case FactorClass::Xc: return "Xc" + std::to_string(nodes);
    case FactorClass::Other: return "other" + std::to_string(nodes);
  }
  return "?";
}

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = popcount(g.adj[v]);
  std::sort(deg.begin(), deg.end());
  return deg;
}

int triangle_count(const Graph& g) {
  int t = 0;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (g.has_edge(a, b))
        for (int c = b + 1; c < g.n; ++c)
          if (g.has_edge(a, c) && g.has_edge(b, c)) ++t;
  return t;
}

bool is_path_graph(const Graph& g) {
  if (g.n == 1) return true;
  auto deg = degree_sequence(g);
  int edges = static_cast<int>(g.edge_list().size());
  return edges == g.n - 1 && deg.front() == 1 && deg.back() == 2 && g.is_connected();
}

bool is_cycle_graph(const Graph& g) {
  if (g.n < 3) return false;
  for (int v = 0; v < g.n; ++v)
    if (popcount(g.adj[v]) != 2) return false;
  return g.is_connected();
}

// one fork: a tree shaped like the D family graph (two leaves sharing a
// degree-3 node at one end of a path)
bool is_d_graph(const Graph& g) {
  if (g.n < 3) return false;
  if (static_cast<int>(g.edge_list().size()) != g.n - 1 || !g.is_connected())
    return false;
  auto deg = degree_sequence(g);
  int threes = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
  int ones = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
  if (g.n == 3) return is_path_graph(g);  // D_3 and the path coincide
  return threes == 1 && ones == 3 && deg.back() <= 3 + (g.n == 4 ? 1 : 0) &&
         (g.n > 4 ? deg.back() == 3 : true);
}

bool is_dtil_graph(const Graph& g) {
  if (g.n < 5) return false;
  if (static_cast<int>(g.edge_list().size()) != g.n - 1 || !g.is_connected())
    return false;
  auto deg = degree_sequence(g);
  if (g.n == 5) {
    // the star K_{1,4}
    return deg == std::vector<int>{1, 1, 1, 1, 4};
  }
  int threes = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
  int ones = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
  return threes == 2 && ones == 4 && deg.back() == 3;
}

// triangle with a path tail: Xa_k, anchored by Xa_3 = the triangle
bool is_xa_graph(const Graph& g) {
  if (g.n < 3) return false;
  if (static_cast<int>(g.edge_list().size()) != g.n || triangle_count(g) != 1)
    return false;
  if (!g.is_connected()) return false;
  auto deg = degree_sequence(g);
  if (g.n == 3) return true;
  // two triangle nodes of degree 2, one junction of degree 3, a path tail
  return deg.front() == 1 && std::count(deg.begin(), deg.end(), 3) == 1 &&
         std::count(deg.begin(), deg.end(), 1) == 1;
}

// triangle, path, fork at the far end
bool is_xb_graph(const Graph& g) {
  if (g.n < 5) return false;
  if (static_cast<int>(g.edge_list().size()) != g.n || triangle_count(g) != 1)
    return false;
  if (!g.is_connected()) return false;
  auto deg = degree_sequence(g);
  return std::count(deg.begin(), deg.end(), 1) == 2 &&
         std::count(deg.begin(), deg.end(), 3) == 2;
}

// triangles at both ends of a path
bool is_xc_graph(const Graph& g) {
  if (g.n < 6) return false;
  if (static_cast<int>(g.edge_list().size()) != g.n + 1 || triangle_count(g) != 2)
    return false;
  if (!g.is_connected()) return false;
  auto deg = degree_sequence(g);
  return std::count(deg.begin(), deg.end(), 1) == 0 &&
         std::count(deg.begin(), deg.end(), 3) == 2;
}

bool is_complete4(const Graph& g) {
  return g.n == 4 && static_cast<int>(g.edge_list().size()) == 6;
}

}  // namespace

FactorLabel classify_graph(const Graph& g) {
  if (is_path_graph(g)) return {FactorClass::Path, g.n};
  if (is_complete4(g)) return {FactorClass::X4, 4};
  if (is_cycle_graph(g)) return {FactorClass::Cycle, g.n};
  if (is_d_graph(g)) return {FactorClass::DGraph, g.n};
  if (is_dtil_graph(g)) return {FactorClass::DtilGraph, g.n};
  if (is_xa_graph(g)) return {FactorClass::Xa, g.n};
  if (is_xb_graph(g)) return {FactorClass::Xb, g.n};
  if (is_xc_graph(g)) return {FactorClass::Xc, g.n};
  return {FactorClass::Other, g.n};
}

std::vector<FactorLabel> classify_face_factors(const Graph& g, const Tubing& t) {
  if (t.tubes.empty()) return {classify_graph(g)};
  // split at a minimal tube; the rest of the tubing maps into the factors
  Mask tmin = t.tubes.front();
  for (Mask m : t.tubes)
    if (popcount(m) < popcount(tmin)) tmin = m;
  auto [inner, outer] = facet_decomposition(g, tmin);

  // relabel maps
  std::vector<int> in_nodes, out_nodes;
  for (int v = 0; v < g.n; ++v)
    ((tmin >> v) & 1 ? in_nodes : out_nodes).push_back(v);
  auto compress = [](const std::vector<int>& nodes, Mask m) {
    Mask r = 0;
    for (size_t i = 0; i < nodes.size(); ++i)
      if ((m >> nodes[i]) & 1) r |= bit(static_cast<int>(i));
    return r;
  };
  Tubing t_in, t_out;
  for (Mask m : t.tubes) {
    if (m == tmin) continue;
    if ((m & tmin) == m)
      t_in.tubes.push_back(compress(in_nodes, m));
    else
      t_out.tubes.push_back(compress(out_nodes, m & ~tmin));
  }
  std::sort(t_in.tubes.begin(), t_in.tubes.end());
  std::sort(t_out.tubes.begin(), t_out.tubes.end());
  t_out.tubes.erase(std::unique(t_out.tubes.begin(), t_out.tubes.end()),
                    t_out.tubes.end());

  auto left = classify_face_factors(inner, t_in);
  auto right = classify_face_factors(outer, t_out);
  left.insert(left.end(), right.begin(), right.end());
  std::sort(left.begin(), left.end());
  return left;
}

std::vector<AtlasEntry> special_graph_atlas(int max_rank) {
  std::map<std::string, AtlasEntry> seen;
  std::function<void(const Graph&, const std::string&)> scan =
      [&](const Graph& g, const std::string& origin) {
        if (g.n < 1 || g.n > 9) return;
        std::string key = g.canonical_key();
        if (seen.count(key)) return;
        AtlasEntry e{classify_graph(g), g, origin};
        seen.emplace(key, e);
        for (Mask t : all_tubes(g)) {
          auto [in, out] = facet_decomposition(g, t);
          scan(in, origin + ">in");
          scan(out, origin + ">rc");
        }
      };
  for (int r = 3; r <= max_rank; ++r)
    scan(build_coxeter_graph({FamilyTag::D, r}), "D" + std::to_string(r));
  for (int r = 4; r <= max_rank; ++r)
    scan(build_coxeter_graph({FamilyTag::Dtil, r}), "Dt" + std::to_string(r));
  std::vector<AtlasEntry> out;
  for (auto& [k, e] : seen) out.push_back(e);
  std::sort(out.begin(), out.end(), [](const AtlasEntry& a, const AtlasEntry& b) {
    return std::tie(a.label, a.first_seen) < std::tie(b.label, b.first_seen);
  });
  return out;
}

AtypicalChamber atypical_chamber_poset(const Chamber& c) {
  AtypicalChamber out;
  out.chamber = c.canonical();
  const Diagram& d = c.shape;
  auto sm = out.chamber.slot_mult();
  Graph amb = bijection_graph(d);
  out.base = base_tubing(d, &sm);
  out.face_counts = face_interval_counts(amb, out.base);

  // the chamber polytope is the face of the ambient tile at the base tubing
  auto factors = classify_face_factors(amb, out.base);
  // drop point factors; a single nontrivial factor names the type
  std::vector<FactorLabel> nontrivial;
  for (auto& fl : factors)
    if (!(fl.cls == FactorClass::Path && fl.nodes <= 1)) nontrivial.push_back(fl);
  if (nontrivial.empty())
    out.type = {FactorClass::Path, 1};
  else if (nontrivial.size() == 1)
    out.type = nontrivial.front();
  else
    out.type = {FactorClass::Other, 0};

  for (const Bracket& b : enumerate_brackets(d, &sm)) {
    Tubing facet = out.base;
    facet.tubes.push_back(tube_of_bracket(d, b, &sm));
    std::sort(facet.tubes.begin(), facet.tubes.end());
    auto fl = classify_face_factors(amb, facet);
    std::vector<FactorLabel> keep;
    for (auto& x : fl)
      if (!(x.cls == FactorClass::Path && x.nodes <= 1)) keep.push_back(x);
    if (keep.size() == 1)
      out.facets.push_back(keep.front());
    else
      out.facets.push_back({FactorClass::Other, 0});
  }
  return out;
}

std::vector<WalkStep> atypical_gluing_walk(const Chamber& start,
                                           const std::vector<Bracket>& facets) {
  std::vector<WalkStep> walk;
  Chamber cur = start.canonical();
  walk.push_back({cur, atypical_chamber_poset(cur).type});
  for (const Bracket& b : facets) {
    cur = adjacent_chamber(cur, b);
    walk.push_back({cur, atypical_chamber_poset(cur).type});
  }
  return walk;
}

}  // namespace coxmod
