#include "doctest.h"

#include "coxmod/euler.hpp"
#include "coxmod/operad.hpp"

#include <map>
#include <set>

using namespace coxmod;

namespace {

Diagram dia(FamilyTag t, int r, std::vector<int> thick = {}) {
  return make_diagram({t, r}, thick);
}

Cell cell(const Diagram& d, std::vector<Bracket> bs = {}) {
  return make_cell(Chamber::fundamental(d), std::move(bs));
}

}  // namespace

TEST_CASE("group elements count the chambers") {
  CHECK(group_elements(dia(FamilyTag::A, 2)).size() == 6);
  CHECK(group_elements(dia(FamilyTag::Ctil, 2)).size() == 8);
  CHECK(group_elements(dia(FamilyTag::Dtil, 4)).size() == 96);
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 6; ++r) {
      Diagram d = dia(tag, r);
      if (d.pairs > 7) continue;
      CHECK(Int(static_cast<long>(group_elements(d).size())) ==
            chamber_count({tag, r}));
    }
}

TEST_CASE("the slot action is free and transitive") {
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 4; ++r) {
      Diagram d = dia(tag, r);
      auto elements = group_elements(d);
      Chamber fund = Chamber::fundamental(d);
      // transitive from the fundamental chamber, bijectively
      std::set<Chamber> reached;
      for (const Chamber& e : elements) {
        CHECK(act(e, fund) == e);
        reached.insert(act(e, fund));
      }
      CHECK(reached.size() == elements.size());
      // free everywhere
      for (const Chamber& e : elements) {
        if (e == fund) continue;
        for (const Chamber& c : elements) CHECK_FALSE(act(e, c) == c);
      }
    }
}

TEST_CASE("adjacent chambers: involution everywhere") {
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 4; ++r) {
      Diagram d = dia(tag, r);
      auto sm = fundamental_slot_mult(d);
      for (const Chamber& c : group_elements(d))
        for (const Bracket& b : enumerate_brackets(d, &sm)) {
          // the facet descriptor is chamber-relative; carry it across
          auto [other, back] = cross_facet(c, b);
          CHECK(cross_facet(other, back).first == c);
          // the flipped cell always differs, even when the chamber glues to
          // itself (the lone chamber of Atilde_1 does)
          Cell cell = make_cell(c, {b});
          CHECK_FALSE(flip_bracket(cell, b) == cell);
        }
    }
}

TEST_CASE("B2 facet flips walk the full circle of 8 chambers") {
  Diagram d = dia(FamilyTag::B, 2);
  auto elements = group_elements(d);
  CHECK(elements.size() == 8);
  std::set<Chamber> seen;
  Chamber cur = Chamber::fundamental(d);
  // alternate the two facets: each step crosses one wall of the circle
  auto brackets = enumerate_brackets(d);
  REQUIRE(brackets.size() == 2);
  for (int step = 0; step < 8; ++step) {
    seen.insert(cur);
    cur = adjacent_chamber(cur, brackets[step % 2]);
  }
  CHECK(cur == Chamber::fundamental(d));
  CHECK(seen.size() == 8);
}

TEST_CASE("flip orbits have size 2^codim") {
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 4; ++r) {
      Diagram d = dia(tag, r);
      if (d.pairs > 5) continue;
      Chamber fund = Chamber::fundamental(d);
      int checked = 0;
      enumerate_bracketings(d, [&](const std::vector<Bracket>& bs) {
        if (bs.empty() || ++checked > 60) return;
        auto [canon, orbit] = flip_canonicalize(make_cell(fund, bs));
        CHECK(orbit.size() == (size_t{1} << bs.size()));
      });
    }
}

TEST_CASE("total face counts match orbit enumeration") {
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Ctil})
    for (int r = min_rank(tag); r <= 3; ++r) {
      Diagram d = dia(tag, r);
      if (d.pairs > 4) continue;
      auto chambers = group_elements(d);
      // collect all (chamber, bracketing) incidences by codimension
      std::map<int, std::set<Cell>> cells;
      for (const Chamber& c : chambers)
        enumerate_bracketings(d, [&](const std::vector<Bracket>& bs) {
          cells[static_cast<int>(bs.size())].insert(make_cell(c, bs));
        });
      for (auto& [codim, set] : cells) {
        if (codim == 0) continue;
        // group into flip orbits; each must have 2^codim members and the
        // orbit count must equal g f_k / 2^codim
        std::set<Cell> remaining = set;
        Int orbits = 0;
        while (!remaining.empty()) {
          auto [canon, orbit] = flip_canonicalize(*remaining.begin());
          CHECK(orbit.size() == (size_t{1} << codim));
          for (const Cell& c : orbit) {
            CHECK(remaining.count(c) == 1);
            remaining.erase(c);
          }
          orbits += 1;
        }
        Int total = Int(static_cast<long>(set.size()));
        CHECK(orbits * pow2(codim) == total);
      }
    }
}

TEST_CASE("flip group order 8 on three nested brackets") {
  Diagram d = dia(FamilyTag::A, 6);  // seven particles
  Cell c = cell(d, {Bracket::side(1, 2), Bracket::side(4, 5), Bracket::side(4, 6)});
  auto [canon, orbit] = flip_canonicalize(c);
  CHECK(orbit.size() == 8);
}

TEST_CASE("flips are fixed-point-free: the one-chamber circle still gets orbit 2") {
  // Atilde_1 has a single chamber whose lone wall glues it to itself; the
  // two incidences of that wall form one orbit of size 2, which is what the
  // Euler overcount 2^(n-k) requires
  Diagram d = dia(FamilyTag::Atil, 1);
  auto brackets = enumerate_brackets(d);
  REQUIRE(brackets.size() == 2);
  Chamber fund = Chamber::fundamental(d);
  CHECK(adjacent_chamber(fund, brackets.front()) == fund);
  auto [canon, orbit] = flip_canonicalize(cell(d, {brackets.front()}));
  CHECK(orbit.size() == 2);
}

TEST_CASE("composition arities") {
  // type 1: 4 particles, graft 3 at the second: 6 particles, one new bracket
  Cell h = cell(dia(FamilyTag::A, 3));
  Cell g = cell(dia(FamilyTag::A, 2));
  Cell c1 = compose(h, GraftSlot::particle(2), g);
  CHECK(c1.chamber.shape.pairs == 6);
  CHECK(c1.brackets.size() == 1);
  CHECK(c1.brackets.front().hi - c1.brackets.front().lo + 1 == 3);

  // type 2: symmetric host
  Cell bh = cell(dia(FamilyTag::B, 3));
  Cell c2 = compose(bh, GraftSlot::particle(2), g);
  CHECK(c2.chamber.shape.pairs == 5);
  CHECK(c2.chamber.shape.family == FamilyTag::B);
  CHECK(c2.brackets.size() == 1);

  // type 3: B host, D guest turns the origin loose
  Cell dg = cell(dia(FamilyTag::D, 3));
  Cell c3 = compose(bh, GraftSlot::fixed_low(), dg);
  CHECK(c3.chamber.shape.family == FamilyTag::D);
  CHECK(c3.chamber.shape.pairs == 6);
  CHECK(c3.brackets.size() == 1);

  // type 3: B guest keeps the fixed particle
  Cell bg = cell(dia(FamilyTag::B, 2));
  Cell c4 = compose(bh, GraftSlot::fixed_low(), bg);
  CHECK(c4.chamber.shape.family == FamilyTag::B);
  CHECK(c4.chamber.shape.pairs == 5);

  // Btilde host with a D guest becomes Dtilde
  Cell bt = cell(dia(FamilyTag::Btil, 3));
  Cell c5 = compose(bt, GraftSlot::fixed_low(), dg);
  CHECK(c5.chamber.shape.family == FamilyTag::Dtil);
  CHECK(c5.chamber.shape.pairs == 6);

  // the unit: a single-particle guest changes nothing
  Cell unit = cell(dia(FamilyTag::A, 1));
  Diagram a0;
  a0.family = FamilyTag::A;
  a0.rank = 0;
  a0.pairs = 1;
  Cell one = make_cell(Chamber::fundamental(a0), {});
  CHECK(compose(h, GraftSlot::particle(3), one) == h);
}

TEST_CASE("forbidden grafts") {
  Cell h = cell(dia(FamilyTag::A, 3));
  Cell dg = cell(dia(FamilyTag::D, 3));
  CHECK_THROWS_AS(compose(h, GraftSlot::particle(1), dg), composition_error);
  CHECK_THROWS_AS(compose(h, GraftSlot::fixed_low(), dg), composition_error);
  Cell dt = cell(dia(FamilyTag::Dtil, 4));
  CHECK_THROWS_AS(compose(dt, GraftSlot::fixed_low(), dg), composition_error);
}

TEST_CASE("decompose peels the outermost brackets and round-trips") {
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= 4; ++r) {
      Diagram d = dia(tag, r);
      Chamber fund = Chamber::fundamental(d);
      enumerate_bracketings(d, [&](const std::vector<Bracket>& bs) {
        Cell c = make_cell(fund, bs);
        Decomposition dec = decompose(c);
        CHECK(dec.base.brackets.empty());
        CHECK(recompose(dec) == c);
      });
    }
}

TEST_CASE("decompose splits stabilizer rank over the guests") {
  Diagram d = dia(FamilyTag::D, 4);
  auto sm = fundamental_slot_mult(d);
  Chamber fund = Chamber::fundamental(d);
  enumerate_bracketings(d, [&](const std::vector<Bracket>& bs) {
    if (bs.empty()) return;
    Cell c = make_cell(fund, bs);
    // outermost brackets of the cell: total rank = sum of the ranks of the
    // stabilizers of the guests' supports (product structure)
    int total = 0;
    for (const Bracket& b : bs) total += bracket_stabilizer(d, b, &sm).rank;
    int sum_parts = 0;
    for (const Bracket& b : bs) sum_parts += bracket_stabilizer(d, b, &sm).rank;
    CHECK(total == sum_parts);
  });
}

TEST_CASE("arity bookkeeping on explicit trees") {
  Cell bh = cell(dia(FamilyTag::B, 3));
  Cell g = cell(dia(FamilyTag::A, 2));
  Cell dg = cell(dia(FamilyTag::D, 3));
  auto rep = operad_arity_check(bh, {{GraftSlot::particle(1), g},
                                     {GraftSlot::fixed_low(), dg}});
  CHECK(rep.ok);
  // n* = (3 pairs + 1 fixed) - 2 + (3 particles) + (3 pairs) = 8
  CHECK(rep.n_star == 8);
  CHECK(rep.k_star == 2);
}
