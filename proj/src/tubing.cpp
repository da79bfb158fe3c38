#include "coxmod/tubing.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coxmod {

bool is_tube(const Graph& g, Mask s) {
  if (s == 0 || (s & ~g.full_mask())) return false;
  if (s == g.full_mask()) return false;
  return g.connected_subset(s);
}

bool are_compatible(const Graph& g, Mask t1, Mask t2) {
  Mask inter = t1 & t2;
  if (inter) return (inter == t1) || (inter == t2);  // nested or crossing
  return !g.connected_subset(t1 | t2);               // adjacent iff union connected
}

std::vector<Mask> all_tubes(const Graph& g) {
  std::vector<Mask> tubes;
  Mask full = g.full_mask();
  for (Mask s = 1; s < full; ++s)
    if (g.connected_subset(s)) tubes.push_back(s);
  return tubes;
}

std::string Tubing::to_json(const Graph& g) const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < tubes.size(); ++i) {
    if (i) os << ",";
    os << "[";
    bool first = true;
    for (int v = 0; v < g.n; ++v)
      if ((tubes[i] >> v) & 1) {
        if (!first) os << ",";
        first = false;
        os << v;
      }
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// DFS over ascending candidate tubes; each tubing is reached once with its
// tube list in ascending order.
void extend(const Graph& g, const std::vector<Mask>& tubes,
            std::vector<char>& compat, size_t from, Tubing& cur,
            std::optional<int> k, const std::function<void(const Tubing&)>& visit) {
  if (!k || cur.size() == *k) {
    visit(cur);
    if (k) return;
  }
  for (size_t i = from; i < tubes.size(); ++i) {
    if (!compat[i]) continue;
    std::vector<char> saved(compat.begin() + i + 1, compat.end());
    for (size_t j = i + 1; j < tubes.size(); ++j)
      if (compat[j] && !are_compatible(g, tubes[i], tubes[j])) compat[j] = 0;
    cur.tubes.push_back(tubes[i]);
    extend(g, tubes, compat, i + 1, cur, k, visit);
    cur.tubes.pop_back();
    std::copy(saved.begin(), saved.end(), compat.begin() + i + 1);
  }
}

}  // namespace

void enumerate_tubings(const Graph& g, std::optional<int> k,
                       const std::function<void(const Tubing&)>& visit) {
  if (!g.is_connected())
    throw std::invalid_argument("enumerate_tubings: graph must be connected");
  auto tubes = all_tubes(g);
  std::vector<char> compat(tubes.size(), 1);
  Tubing cur;
  extend(g, tubes, compat, 0, cur, k, visit);
}

std::vector<Int> tubing_counts_by_size(const Graph& g) {
  std::vector<Int> counts(std::max(1, g.n), 0);
  enumerate_tubings(g, std::nullopt, [&](const Tubing& t) {
    if (t.size() >= static_cast<int>(counts.size())) counts.resize(t.size() + 1, 0);
    counts[t.size()] += 1;
  });
  counts.resize(g.n, 0);  // maximal tubings have n-1 tubes
  return counts;
}

std::pair<Graph, Graph> facet_decomposition(const Graph& g, Mask t) {
  if (!is_tube(g, t)) throw std::invalid_argument("facet_decomposition: not a tube");
  return {induced_subgraph(g, t), reconnected_complement(g, t)};
}

std::vector<std::vector<Tubing>> face_interval(const Graph& g, const Tubing& base) {
  for (size_t i = 0; i < base.tubes.size(); ++i) {
    if (!is_tube(g, base.tubes[i]))
      throw std::invalid_argument("face_interval: base contains a non-tube");
    for (size_t j = i + 1; j < base.tubes.size(); ++j)
      if (!are_compatible(g, base.tubes[i], base.tubes[j]))
        throw std::invalid_argument("face_interval: base is not a tubing");
  }
  // Candidates: tubes compatible with all of base and not in base.
  std::vector<Mask> cand;
  for (Mask s : all_tubes(g)) {
    if (std::find(base.tubes.begin(), base.tubes.end(), s) != base.tubes.end()) continue;
    bool ok = true;
    for (Mask b : base.tubes)
      if (!are_compatible(g, s, b)) { ok = false; break; }
    if (ok) cand.push_back(s);
  }
  std::vector<std::vector<Tubing>> graded;
  std::vector<Mask> chosen;
  std::function<void(size_t)> rec = [&](size_t from) {
    Tubing full;
    full.tubes = base.tubes;
    full.tubes.insert(full.tubes.end(), chosen.begin(), chosen.end());
    std::sort(full.tubes.begin(), full.tubes.end());
    if (graded.size() <= chosen.size()) graded.resize(chosen.size() + 1);
    graded[chosen.size()].push_back(std::move(full));
    for (size_t i = from; i < cand.size(); ++i) {
      bool ok = true;
      for (Mask c : chosen)
        if (!are_compatible(g, cand[i], c)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(cand[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return graded;
}

std::vector<Int> face_interval_counts(const Graph& g, const Tubing& base) {
  auto graded = face_interval(g, base);
  std::vector<Int> counts;
  for (auto& layer : graded) counts.push_back(static_cast<long>(layer.size()));
  return counts;
}

}  // namespace coxmod
