#pragma once

#include "coxmod/diagram.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coxmod {

// A chamber of the configuration model: an assignment of (signed) particle
// labels to the diagram's slots. Slot i of a symmetric family holds one
// representative of a mirror pair; the canonical form points the pair at a
// Free end toward +1 when the pair is standard (those two orderings describe
// the same chamber). Plain circle chambers are rotation-normalized so the
// largest label sits at the last slot.
struct Chamber {
  Diagram shape;
  std::vector<int> label;  // 1-based, label[s] = particle at slot s
  std::vector<int> sign;   // 1-based, +-1 (all +1 for plain families)

  static Chamber fundamental(const Diagram& d);

  Chamber canonical() const;
  bool is_canonical() const;
  std::vector<int> slot_mult() const;  // multiplicity by slot

  std::string render() const;
  auto key() const { return std::tie(label, sign); }
  bool operator==(const Chamber& o) const { return key() == o.key(); }
  bool operator<(const Chamber& o) const { return key() < o.key(); }
};

// All chambers in canonical form, sorted. Their count is |sigma(W)|.
std::vector<Chamber> group_elements(const Diagram& d);

// Slot-composition action of one canonical chamber on another: slot i of the
// result holds e's slot-i instructions applied to c. Acting on the
// fundamental chamber returns e itself, which is the simply-transitive
// identification of chambers with group elements.
Chamber act(const Chamber& e, const Chamber& c);

// A cell of the compactified model: a chamber plus a nested bracketing on
// it. Codimension = number of brackets.
struct Cell {
  Chamber chamber;
  std::vector<Bracket> brackets;  // sorted, pairwise compatible

  Cell sorted() const;
  bool operator==(const Cell& o) const;
  bool operator<(const Cell& o) const;
  std::string render() const;
};

Cell make_cell(Chamber c, std::vector<Bracket> bs);  // validates compatibility

// Reverse the content of one bracket (its particles, with nested brackets
// riding along as blocks), yielding the equal-codimension cell on the far
// side of that wall. An involution.
Cell flip_bracket(const Cell& c, const Bracket& b);

// Facet gluing on chambers: the unique other chamber sharing the facet.
// (For the degenerate one-chamber complexes a wall can glue the chamber to
// itself.)
Chamber adjacent_chamber(const Chamber& c, const Bracket& facet);

// Gluing with the facet carried along: descriptors are chamber-relative, so
// crossing a wall can recode sign flags. Crossing twice with the carried
// descriptor is the identity.
std::pair<Chamber, Bracket> cross_facet(const Chamber& c, const Bracket& facet);

// Orbit of the cell under independent per-bracket flips (size divides
// 2^brackets) and its lexicographically least member.
std::pair<Cell, std::vector<Cell>> flip_canonicalize(const Cell& c);

// --- Composition (grafting) --------------------------------------------------

struct composition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Where a guest is grafted: a particle label of the host, or a fixed
// particle at an end of the host diagram.
struct GraftSlot {
  enum class Kind { Particle, FixedLow, FixedHigh } kind = Kind::Particle;
  int label = 0;

  static GraftSlot particle(int label) { return {Kind::Particle, label}; }
  static GraftSlot fixed_low() { return {Kind::FixedLow, 0}; }
  static GraftSlot fixed_high() { return {Kind::FixedHigh, 0}; }
};

// Graft guest into host at the slot, wrapping the inserted copy in one new
// bracket. Host labels above the graft label shift by the guest's particle
// count minus one; guest labels are offset to start at the graft label.
// The three admissible shapes:
//   1. plain host (A, Atil), plain line guest;
//   2. symmetric host, any standard pair, plain line guest (mirrored copy);
//   3. host with a fixed particle (B, Btil, Ctil), guest B or D, replacing
//      the fixed particle.
// A one-particle bracket-free guest is the unit and returns the host.
Cell compose(const Cell& host, GraftSlot at, const Cell& guest);

struct Decomposition {
  Cell base;  // bracket-free
  struct Part {
    GraftSlot at;
    Cell guest;
    // original (label, sign) of each guest slot, so splicing back restores
    // the exact chamber even when the block's displayed signs are mixed
    std::vector<std::pair<int, int>> embed;
  };
  std::vector<Part> parts;  // in graft order
};

// Peel the outermost brackets: base o_{i1} G_1 o ... o_{ik} G_k with the
// base bracket-free. recompose(decompose(c)) == c.
Decomposition decompose(const Cell& c);
Cell recompose(const Decomposition& d);

// Arity bookkeeping of a composition: n* = n_H - m + sum n_i and
// k* = k_H + m + sum k_i, with n counting particles plus fixed particles.
struct ArityReport {
  int n_star = 0, k_star = 0;     // predicted
  int n_actual = 0, k_actual = 0; // observed on the composite
  bool ok = false;
  std::string detail;
};

int operadic_arity(const Diagram& d);  // particles + fixed particles

ArityReport operad_arity_check(const Cell& host,
                               const std::vector<std::pair<GraftSlot, Cell>>& guests);

}  // namespace coxmod
