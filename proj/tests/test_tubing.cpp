#include "doctest.h"

#include "coxmod/fvector.hpp"
#include "coxmod/graph.hpp"
#include "coxmod/tubing.hpp"

#include <set>

using namespace coxmod;

namespace {

Graph family_graph(FamilyTag t, int r) { return build_coxeter_graph({t, r}); }

// Oracle: count k-tubings by scanning all subsets of the tube list and
// testing pairwise compatibility. Exponential, test-only.
Int count_tubings_bruteforce(const Graph& g, int k) {
  auto tubes = all_tubes(g);
  REQUIRE(tubes.size() <= 22);
  Int count = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << tubes.size()); ++sub) {
    if (popcount(sub) != k) continue;
    std::vector<Mask> chosen;
    for (size_t i = 0; i < tubes.size(); ++i)
      if ((sub >> i) & 1) chosen.push_back(tubes[i]);
    bool ok = true;
    for (size_t i = 0; ok && i < chosen.size(); ++i)
      for (size_t j = i + 1; ok && j < chosen.size(); ++j)
        ok = are_compatible(g, chosen[i], chosen[j]);
    if (ok) count += 1;
  }
  return count;
}

}  // namespace

TEST_CASE("tube membership") {
  Graph p3 = family_graph(FamilyTag::A, 3);
  CHECK_FALSE(is_tube(p3, bit(0) | bit(2)));      // disconnected
  CHECK(is_tube(p3, bit(0) | bit(1)));
  CHECK_FALSE(is_tube(p3, p3.full_mask()));       // proper required
  CHECK_FALSE(is_tube(p3, 0));
}

TEST_CASE("compatibility") {
  Graph p4 = family_graph(FamilyTag::A, 4);
  CHECK_FALSE(are_compatible(p4, bit(0), bit(1)));          // adjacent
  CHECK(are_compatible(p4, bit(1), bit(0) | bit(1) | bit(2)));  // nested
  CHECK(are_compatible(p4, bit(0), bit(2)));                // union disconnected
  // symmetric, and nested implies compatible
  for (Mask t1 : all_tubes(p4))
    for (Mask t2 : all_tubes(p4)) {
      CHECK(are_compatible(p4, t1, t2) == are_compatible(p4, t2, t1));
      if ((t1 & t2) == t1) CHECK(are_compatible(p4, t1, t2));
    }
}

TEST_CASE("pentagon and hexagon tubing counts") {
  Graph p3 = family_graph(FamilyTag::A, 3);
  auto counts = tubing_counts_by_size(p3);
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 5);
  CHECK(counts[2] == 5);
  CHECK(counts[1] == count_tubings_bruteforce(p3, 1));
  CHECK(counts[2] == count_tubings_bruteforce(p3, 2));

  Graph c3 = family_graph(FamilyTag::Atil, 2);
  auto hex = tubing_counts_by_size(c3);
  CHECK(hex[1] == 6);
  CHECK(hex[2] == 6);
  CHECK(hex[2] == count_tubings_bruteforce(c3, 2));
}

TEST_CASE("K_{1,4} one-tube count") {
  Graph k14 = family_graph(FamilyTag::Dtil, 4);
  auto counts = tubing_counts_by_size(k14);
  CHECK(counts[1] == 19);  // 4 leaf singletons + 15 proper center-containing subsets
  CHECK(counts[1] == count_tubings_bruteforce(k14, 1));
  CHECK(counts[2] == count_tubings_bruteforce(k14, 2));
}

TEST_CASE("k filter and determinism") {
  Graph p3 = family_graph(FamilyTag::A, 3);
  std::vector<Tubing> once, twice;
  enumerate_tubings(p3, 1, [&](const Tubing& t) { once.push_back(t); });
  enumerate_tubings(p3, 1, [&](const Tubing& t) { twice.push_back(t); });
  CHECK(once.size() == 5);
  CHECK(once == twice);
  std::set<Tubing> dedup(once.begin(), once.end());
  CHECK(dedup.size() == once.size());
  enumerate_tubings(p3, 0, [&](const Tubing& t) { CHECK(t.size() == 0); });
}

TEST_CASE("maximal tubings have n-1 tubes") {
  for (auto tag : {FamilyTag::A, FamilyTag::D, FamilyTag::Atil, FamilyTag::Btil})
    for (int r = min_rank(tag); r <= 5; ++r) {
      Graph g = family_graph(tag, r);
      auto counts = tubing_counts_by_size(g);
      CHECK(counts[g.n - 1] > 0);
      Int beyond = 0;
      enumerate_tubings(g, std::nullopt,
                        [&](const Tubing& t) { if (t.size() > g.n - 1) beyond += 1; });
      CHECK(beyond == 0);
    }
}

TEST_CASE("facet decomposition examples") {
  Graph k13 = family_graph(FamilyTag::D, 4);  // center node 1
  auto [in_c, rc_c] = facet_decomposition(k13, bit(1));
  CHECK(in_c.n == 1);
  CHECK(rc_c.canonical_key() == family_graph(FamilyTag::Atil, 2).canonical_key());

  auto [in_l, rc_l] = facet_decomposition(k13, bit(0));
  CHECK(in_l.n == 1);
  CHECK(rc_l.canonical_key() == family_graph(FamilyTag::A, 3).canonical_key());

  Graph p4 = family_graph(FamilyTag::A, 4);
  auto [in_m, rc_m] = facet_decomposition(p4, bit(1) | bit(2));
  CHECK(in_m.n == 2);
  CHECK(rc_m.has_edge(0, 1));  // {0,3} union {1,2} is connected: square facet

  CHECK_THROWS_AS(facet_decomposition(p4, bit(0) | bit(2)), std::invalid_argument);
}

TEST_CASE("face_interval gradings") {
  Graph p3 = family_graph(FamilyTag::A, 3);
  auto whole = face_interval_counts(p3, Tubing{});
  CHECK(whole == std::vector<Int>{1, 5, 5});  // 11 faces of the pentagon

  // interval above a maximal tubing is a single vertex
  Tubing max{{bit(0), Mask(bit(0) | bit(1))}};
  CHECK(face_interval_counts(p3, max) == std::vector<Int>{1});

  // interval above one leaf tube of K_{1,3} is a pentagon poset again
  Graph k13 = family_graph(FamilyTag::D, 4);
  auto penta = face_interval_counts(k13, Tubing{{bit(0)}});
  CHECK(penta == std::vector<Int>{1, 5, 5});
}

TEST_CASE("face interval of a facet matches the product of factor posets") {
  for (auto tag : {FamilyTag::A, FamilyTag::D, FamilyTag::Atil, FamilyTag::Ctil})
    for (int r = min_rank(tag); r <= 5; ++r) {
      Graph g = family_graph(tag, r);
      if (g.n > 8) continue;
      for (Mask t : all_tubes(g)) {
        auto [gt, grc] = facet_decomposition(g, t);
        Int prod_total = 1;
        auto total = [](const Graph& h) {
          Int s = 0;
          for (const Int& c : tubing_counts_by_size(h)) s += c;
          return s;
        };
        prod_total = total(gt) * total(grc);
        Int interval_total = 0;
        for (const Int& c : face_interval_counts(g, Tubing{{t}})) interval_total += c;
        CHECK(interval_total == prod_total);
      }
    }
}
