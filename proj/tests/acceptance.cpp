// Acceptance suite: one line per criterion, exact arithmetic throughout.

#include "coxmod/buildingset.hpp"
#include "coxmod/euler.hpp"
#include "coxmod/fvector.hpp"
#include "coxmod/graph.hpp"
#include "coxmod/operad.hpp"
#include "coxmod/tilings.hpp"
#include "coxmod/tubing.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>

using namespace coxmod;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string name;
  bool ok = true;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void expect(bool cond, const std::string& what = "") {
    if (!cond) {
      ok = false;
      std::cout << "    [" << id << "] check failed: " << what << "\n";
    }
  }
  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << name
              << "  (" << ms << " ms)\n";
    if (!ok) ++failures;
  }
};

FVector fv(std::initializer_list<long> xs) {
  FVector f;
  for (long x : xs) f.emplace_back(x);
  return f;
}

void criterion1() {
  Criterion c{1, "pentagon and hexagon tiles"};
  c.expect(fvector_exhaustive(build_coxeter_graph({FamilyTag::A, 3})) == fv({5, 5, 1}),
           "path(3) f-vector");
  c.expect(fvector_exhaustive(build_coxeter_graph({FamilyTag::Atil, 2})) ==
               fv({6, 6, 1}),
           "cycle(3) f-vector");
}

void criterion2() {
  Criterion c{2, "Cayley formula vs exhaustive, paths n=2..9"};
  for (int n = 2; n <= 9; ++n)
    c.expect(fvector_formula(PolytopeKind::Assoc, n) ==
                 fvector_exhaustive(build_coxeter_graph({FamilyTag::A, n})),
             "n=" + std::to_string(n));
  c.expect(assoc_face_count(9, 0) == 4862, "Catalan(9)");
}

void criterion3() {
  Criterion c{3, "Simion formula vs exhaustive, cycles of 3..9 nodes"};
  for (int n = 2; n <= 8; ++n)  // cycle on n+1 nodes
    c.expect(fvector_formula(PolytopeKind::Cyclo, n) ==
                 fvector_exhaustive(build_coxeter_graph({FamilyTag::Atil, n})),
             "n=" + std::to_string(n));
}

void criterion4() {
  Criterion c{4, "D recursion vs exhaustive, n=3..8; PD4 facet census"};
  for (int n = 3; n <= 8; ++n)
    c.expect(fvector_formula(PolytopeKind::DGraph, n) ==
                 fvector_exhaustive(build_coxeter_graph({FamilyTag::D, n})),
             "n=" + std::to_string(n));
  c.expect(fvector_formula(PolytopeKind::DGraph, 4) == fv({16, 24, 10, 1}),
           "PD4 f-vector");
  Graph k13 = build_coxeter_graph({FamilyTag::D, 4});
  std::map<Int, int> by_vertices;
  for (Mask t : all_tubes(k13)) {
    auto [gin, gout] = facet_decomposition(k13, t);
    by_vertices[fvector_exhaustive(gin).front() * fvector_exhaustive(gout).front()]++;
  }
  c.expect(by_vertices[5] == 6, "six pentagons");
  c.expect(by_vertices[4] == 3, "three squares");
  c.expect(by_vertices[6] == 1, "one hexagon");
}

void criterion5() {
  Criterion c{5, "Dtilde recursion vs exhaustive, n=4..7"};
  for (int n = 4; n <= 7; ++n)
    c.expect(fvector_formula(PolytopeKind::DtilGraph, n) ==
                 fvector_exhaustive(build_coxeter_graph({FamilyTag::Dtil, n})),
             "n=" + std::to_string(n));
  c.expect(dtilgraph_face_count(4, 0) == 65, "f0(PDtilde4) = 65");
}

void criterion6() {
  Criterion c{6, "Euler characteristics: sums, closed forms, parity"};
  c.expect(euler_sum({FamilyTag::A, 3}) == -6, "chi(A3) = -6");
  c.expect(euler_sum({FamilyTag::Atil, 3}) == 0, "chi(Atilde3) = 0");
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil})
    for (int r = min_rank(tag); r <= 8; ++r) {
      Int sum = euler_sum({tag, r});  // throws if non-integer
      c.expect(Rat(sum) == euler_closed({tag, r}),
               family_name(tag) + std::to_string(r));
      bool spherical = is_spherical(tag);
      if ((spherical && r % 2 == 0) || (!spherical && r % 2 == 1))
        c.expect(sum == 0, "parity zero " + family_name(tag) + std::to_string(r));
    }
}

void criterion7() {
  Criterion c{7, "known anomaly: the printed Dtilde closed form"};
  c.expect(euler_closed({FamilyTag::Dtil, 4}) == Rat(51, 2), "literal 51/2");
  c.expect(euler_sum({FamilyTag::Dtil, 4}) == 30, "tiling sum 30");
  c.expect(Rat(euler_sum({FamilyTag::Dtil, 4})) != euler_closed({FamilyTag::Dtil, 4}),
           "disagree at n=4");
  c.expect(Rat(euler_sum({FamilyTag::Dtil, 6})) != euler_closed({FamilyTag::Dtil, 6}),
           "disagree at n=6");
  bool anomaly_flagged = false;
  for (const auto& rep : verify_closed_forms(6))
    if (!rep.agree) {
      anomaly_flagged = true;
      c.expect(rep.family.tag == FamilyTag::Dtil, "anomaly only in Dtilde");
    }
  c.expect(anomaly_flagged, "verify reports the anomaly");
}

void criterion8() {
  Criterion c{8, "bracketings biject with tubings, all families"};
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 5; ++r) {
      Diagram d = make_diagram({tag, r});
      Graph g = bijection_graph(d);
      auto bc = bracketing_counts(d);
      auto tc = tubing_counts_by_size(g);
      bc.resize(std::max(bc.size(), tc.size()), 0);
      tc.resize(std::max(bc.size(), tc.size()), 0);
      c.expect(bc == tc, "counts " + family_name(tag) + std::to_string(r));
      auto brackets = enumerate_brackets(d);
      for (size_t i = 0; i < brackets.size(); ++i)
        for (size_t j = i + 1; j < brackets.size(); ++j)
          c.expect(brackets_compatible(d, brackets[i], brackets[j]) ==
                       are_compatible(g, tube_of_bracket(d, brackets[i]),
                                      tube_of_bracket(d, brackets[j])),
                   "compatibility transport " + family_name(tag));
    }
  for (auto tag : {FamilyTag::D, FamilyTag::Btil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 5; ++r)
      for (int m = 1; m <= 2; ++m) {
        Diagram d = make_diagram({tag, r}, std::vector<int>(m, 2));
        Graph g = bijection_graph(d);
        auto bc = bracketing_counts(d);
        auto ic = face_interval_counts(g, base_tubing(d));
        bc.resize(std::max(bc.size(), ic.size()), 0);
        ic.resize(std::max(bc.size(), ic.size()), 0);
        c.expect(bc == ic,
                 "thick counts " + family_name(tag) + std::to_string(r) + " m=" +
                     std::to_string(m));
      }
}

void criterion9() {
  Criterion c{9, "building-set census vs printed tables, n<=6, m<=2"};
  auto a3 = enumerate_building_set({FamilyTag::A, 3});
  Int pts = 0, lines = 0;
  for (const auto& row : a3) {
    if (row.dim == 0) pts += row.count;
    if (row.dim == 1) lines += row.count;
  }
  c.expect(pts == 4 && lines == 6, "A3: 4 points, 6 lines");

  struct Case { FamilyTag tag; };
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int n = min_rank(tag); n <= 6; ++n)
      for (int m = 0; m <= (is_atypical_host(tag) ? 2 : 0); ++m) {
        int d_threshold_flags = 0;
        for (const auto& cmp : building_check({tag, n}, m)) {
          if (cmp.match) continue;
          // residual mismatches must be structured records at the D-rank
          // thresholds, never silent
          c.expect(!cmp.note.empty(), "unexplained mismatch " + family_name(tag) +
                                          std::to_string(n) + " row " + cmp.row);
          c.expect(cmp.census == 0, "census nonzero mismatch");
          ++d_threshold_flags;
        }
        if (tag == FamilyTag::D && m == 0 && n >= 4)
          c.expect(d_threshold_flags > 0, "D thresholds are called out");
      }
}

void criterion10() {
  Criterion c{10, "group and chamber counts; simple transitivity"};
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 6; ++r) {
      Diagram d = make_diagram({tag, r});
      if (d.pairs > 7) continue;
      c.expect(Int(static_cast<long>(group_elements(d).size())) ==
                   chamber_count({tag, r}),
               "count " + family_name(tag) + std::to_string(r));
    }
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 4; ++r) {
      Diagram d = make_diagram({tag, r});
      auto elements = group_elements(d);
      Chamber fund = Chamber::fundamental(d);
      std::set<Chamber> orbit;
      bool free_action = true;
      for (const Chamber& e : elements) {
        orbit.insert(act(e, fund));
        if (!(e == fund))
          for (const Chamber& ch : elements)
            if (act(e, ch) == ch) free_action = false;
      }
      c.expect(orbit.size() == elements.size(),
               "transitive " + family_name(tag) + std::to_string(r));
      c.expect(free_action, "free " + family_name(tag) + std::to_string(r));
    }
}

void criterion11() {
  Criterion c{11, "gluing laws: involutions, orbit sizes, face counts, the walk"};
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 4; ++r) {
      Diagram d = make_diagram({tag, r});
      auto sm = fundamental_slot_mult(d);
      auto chambers = group_elements(d);
      auto brackets = enumerate_brackets(d, &sm);
      for (const Chamber& ch : chambers)
        for (const Bracket& b : brackets) {
          auto [other, back] = cross_facet(ch, b);
          c.expect(cross_facet(other, back).first == ch, "involution");
        }
      if (d.pairs > 4) continue;
      std::map<int, std::set<Cell>> cells;
      for (const Chamber& ch : chambers)
        enumerate_bracketings(d, [&](const std::vector<Bracket>& bs) {
          cells[static_cast<int>(bs.size())].insert(make_cell(ch, bs));
        });
      FVector f = fvector_exhaustive(bijection_graph(d));
      int dim = static_cast<int>(f.size()) - 1;
      Int g = chamber_count({tag, r});
      for (auto& [codim, set] : cells) {
        if (codim == 0) continue;
        Rat expected = Rat(g * f[dim - codim]) / Rat(pow2(codim));
        c.expect(is_integer(expected), "g f_k / 2^c integral");
        std::set<Cell> remaining = set;
        Int orbits = 0;
        while (!remaining.empty()) {
          auto [canon, orbit] = flip_canonicalize(*remaining.begin());
          c.expect(orbit.size() == (size_t{1} << codim), "orbit size 2^c");
          for (const Cell& cc : orbit) remaining.erase(cc);
          orbits += 1;
        }
        c.expect(Rat(orbits) == expected, "orbit count matches g f_k / 2^c");
      }
    }

  // the five-chamber walk of C(D_{4,1})
  Diagram d41 = make_diagram({FamilyTag::D, 4}, {2});
  Chamber start = Chamber::fundamental(d41);
  std::swap(start.label[1], start.label[3]);
  start = start.canonical();
  auto walk = atypical_gluing_walk(
      start, {Bracket::side(2, 3), Bracket::side(1, 2), Bracket::axis_low(1),
              Bracket::side(1, 4)});
  std::vector<FactorClass> types;
  for (auto& step : walk) types.push_back(step.type.cls);
  c.expect(types == std::vector<FactorClass>{FactorClass::DGraph, FactorClass::Xa,
                                             FactorClass::Path, FactorClass::Path,
                                             FactorClass::DGraph},
           "five-chamber type walk");
}

void criterion12() {
  Criterion c{12, "operad laws: round trips, arities, associativity"};
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 4; ++r) {
      Diagram d = make_diagram({tag, r});
      Chamber fund = Chamber::fundamental(d);
      enumerate_bracketings(d, [&](const std::vector<Bracket>& bs) {
        Cell cell = make_cell(fund, bs);
        c.expect(recompose(decompose(cell)) == cell, "round trip");
      });
    }

  // arity identities on randomized composition trees
  std::mt19937 rng(20240816);
  FamilyTag tags[] = {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                      FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil};
  int ok_runs = 0;
  for (int t = 0; t < 1000; ++t) {
    FamilyTag htag = tags[rng() % 7];
    int hr = std::max(min_rank(htag), static_cast<int>(rng() % 4) + 1);
    Diagram hd = make_diagram({htag, hr});
    Cell host = make_cell(Chamber::fundamental(hd), {});
    std::vector<std::pair<GraftSlot, Cell>> guests;
    std::set<int> used;
    int count = 1 + static_cast<int>(rng() % 2);
    for (int q = 0; q < count; ++q) {
      if (hd.symmetric && hd.low == EndKind::Fixed && rng() % 3 == 0 &&
          used.insert(-1).second) {
        FamilyTag gt = rng() % 2 ? FamilyTag::B : FamilyTag::D;
        Diagram gd = make_diagram({gt, std::max(min_rank(gt), 2 + (int)(rng() % 2))});
        guests.push_back({GraftSlot::fixed_low(),
                          make_cell(Chamber::fundamental(gd), {})});
        continue;
      }
      int label = 1 + static_cast<int>(rng() % hd.pairs);
      if (!used.insert(label).second) continue;
      Diagram gd = make_diagram({FamilyTag::A, 1 + static_cast<int>(rng() % 3)});
      guests.push_back({GraftSlot::particle(label),
                        make_cell(Chamber::fundamental(gd), {})});
    }
    auto rep = operad_arity_check(host, guests);
    c.expect(rep.ok, "random tree arity: " + rep.detail);
    ok_runs += rep.ok;
  }
  c.expect(ok_runs == 1000, "all 1000 instances");

  // associativity of the line grafts, exhaustively at small arities
  for (int nh = 2; nh <= 4; ++nh)
    for (int ng = 2; ng <= 3; ++ng)
      for (int nk = 2; nk <= 3; ++nk) {
        Cell H = make_cell(Chamber::fundamental(make_diagram({FamilyTag::A, nh - 1})), {});
        Cell G = make_cell(Chamber::fundamental(make_diagram({FamilyTag::A, ng - 1})), {});
        Cell K = make_cell(Chamber::fundamental(make_diagram({FamilyTag::A, nk - 1})), {});
        for (int i = 1; i <= nh; ++i) {
          for (int j = 1; j <= ng; ++j)
            c.expect(compose(compose(H, GraftSlot::particle(i), G),
                             GraftSlot::particle(i + j - 1), K) ==
                         compose(H, GraftSlot::particle(i),
                                 compose(G, GraftSlot::particle(j), K)),
                     "nested associativity");
          for (int j = 1; j <= nh; ++j) {
            if (j == i) continue;
            int i2 = i < j ? i : i + nk - 1;
            int j2 = j < i ? j : j + ng - 1;
            c.expect(compose(compose(H, GraftSlot::particle(i), G),
                             GraftSlot::particle(j2), K) ==
                         compose(compose(H, GraftSlot::particle(j), K),
                                 GraftSlot::particle(i2), G),
                     "parallel associativity");
          }
        }
      }
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  std::cout << (failures ? "ACCEPTANCE: FAILURES\n" : "ACCEPTANCE: all criteria pass\n");
  return failures ? 1 : 0;
}
