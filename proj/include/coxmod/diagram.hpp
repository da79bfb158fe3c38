#pragma once

#include "coxmod/graph.hpp"
#include "coxmod/ints.hpp"
#include "coxmod/tubing.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace coxmod {

// What sits past the innermost (low) or outermost (high) slot of a diagram.
//   Open  : the line just continues (spherical families, outward end).
//   Fixed : an axis point occupied by a fixed particle (a wall).
//   Free  : a marked axis point with no particle; mirror pairs pass freely.
enum class EndKind { Open, Fixed, Free };

// A particle-configuration diagram in its fundamental chamber.
//
// Symmetric families store one representative per mirror pair; slot 1 is the
// pair nearest the low end. Plain families (A, Atil) store `pairs` unsigned
// particles (n+1 of them for rank n). Thick particles are collision
// aggregates of mult >= 2 plain pairs; by convention the fundamental diagram
// makes labels 1..m thick.
//
// End kinds by family: A (Open,Open), Atil circle; B (Fixed,Open),
// D (Free,Open); Btil (Fixed,Free), Ctil (Fixed,Fixed), Dtil (Free,Free).
// The low end of a circle family is the point 1, the high end the point 0.
struct Diagram {
  FamilyTag family;
  int rank = 0;
  bool symmetric = false;
  bool circle = false;
  int pairs = 0;  // pair count, or particle count for plain families
  EndKind low = EndKind::Open, high = EndKind::Open;
  std::vector<int> mult;  // by label, 1-based; mult[i] >= 2 marks label i thick

  int multiplicity(int label) const { return mult.empty() ? 1 : mult[label]; }
  int thick_count() const;
  bool has_thick() const { return thick_count() > 0; }
  int ambient_pairs() const;  // pairs with every thick label expanded

  // Dimension of the complex the diagram's chambers cellulate.
  int complex_dim() const { return circle ? rank : rank - 1; }

  std::string render() const;  // "( -3 -2 -1 | 1 2 3 )" style
};

// Fundamental-chamber diagram of a family. thick_mult lists multiplicities
// (each >= 2) for labels 1..m; only the three atypical hosts accept it.
Diagram make_diagram(Family f, const std::vector<int>& thick_mult = {});

// --- Brackets ---------------------------------------------------------------

// A bracket marks one collision available from the chamber: a one-sided run
// of adjacent particles (Side), or a mirror-symmetric block around an axis
// point (AxisLow / AxisHigh).
//
// Side brackets span slots lo..hi; a sign of -1 at an end means the mirror
// partner of that slot's pair participates (possible only where the slot is
// innermost at a Free end and the pair is not thick). Axis brackets hold the
// `count` pairs nearest the end; when they swallow every pair of a circle
// diagram whose far end is Free, `branch` (+-1) records which side the far
// pair approaches on, which selects one of two distinct facets.
struct Bracket {
  enum class Kind : unsigned char { Side, AxisLow, AxisHigh };
  Kind kind = Kind::Side;
  int lo = 0, hi = 0;          // Side slot range (1-based); arcs may wrap for Atil
  int sign_lo = +1, sign_hi = +1;
  int count = 0;               // Axis block size
  int branch = 0;

  static Bracket side(int lo, int hi, int slo = +1, int shi = +1);
  static Bracket axis_low(int count, int branch = 0);
  static Bracket axis_high(int count, int branch = 0);

  auto key() const {
    return std::tuple(static_cast<int>(kind), count, branch, lo, hi, sign_lo, sign_hi);
  }
  bool operator==(const Bracket& o) const { return key() == o.key(); }
  bool operator<(const Bracket& o) const { return key() < o.key(); }
};

// Slot multiplicities as laid out in a chamber (mult of the label occupying
// each slot, 1-based). The fundamental layout puts label i at slot i.
std::vector<int> fundamental_slot_mult(const Diagram& d);

// All single brackets valid on the diagram (deduplicated under mirror
// symmetry), in a fixed order. slot_mult overrides the fundamental thick
// layout when brackets are taken on another chamber of an atypical model.
std::vector<Bracket> enumerate_brackets(const Diagram& d,
                                        const std::vector<int>* slot_mult = nullptr);

bool bracket_valid(const Diagram& d, const Bracket& b,
                   const std::vector<int>* slot_mult = nullptr);

// Non-crossing test: two brackets can be drawn on one diagram iff disjoint or
// sign-consistently nested. The lone exception is the pair of opposite-sign
// two-particle runs at a Free end, which jointly encode the reducible
// two-pair axis collision and are compatible.
bool brackets_compatible(const Diagram& d, const Bracket& a, const Bracket& b,
                         const std::vector<int>* slot_mult = nullptr);

// --- Stabilizers ------------------------------------------------------------

struct StabilizerType {
  enum class Tag { A, B, D, Product } tag = Tag::A;
  int rank = 0;
  int r = 0;  // thick particles in the bracket (D with walls)

  std::string str() const;  // "A3", "B2", "D4", "D2,1", "A1xA1"
  bool operator==(const StabilizerType& o) const {
    return tag == o.tag && rank == o.rank && r == o.r;
  }
};

// Type and rank of the reflection group stabilizing the bracket's support.
// Accepts the reducible two-pair axis block (count 2, no thick) and labels
// it as the A1 x A1 product.
StabilizerType bracket_stabilizer(const Diagram& d, const Bracket& b,
                                  const std::vector<int>* slot_mult = nullptr);

int support_dim(const Diagram& d, const Bracket& b,
                const std::vector<int>* slot_mult = nullptr);

// --- Bracket <-> tube bijection ----------------------------------------------

// The graph whose tubings the diagram's bracketings biject with: the family's
// Coxeter graph, or for thick diagrams the ambient family graph on
// ambient_pairs() pairs.
Graph bijection_graph(const Diagram& d);

// Tubes already implied by the thick particles (empty for plain diagrams).
Tubing base_tubing(const Diagram& d, const std::vector<int>* slot_mult = nullptr);

// Tube of one bracket: the chamber walls interior to it, expanded through
// thick particles into the ambient graph.
Mask tube_of_bracket(const Diagram& d, const Bracket& b,
                     const std::vector<int>* slot_mult = nullptr);

// Whole-set transport; includes the base tubing for thick diagrams. Throws
// on crossing brackets.
Tubing brackets_to_tubing(const Diagram& d, const std::vector<Bracket>& bs,
                          const std::vector<int>* slot_mult = nullptr);

// Inverse of the above (base tubes are ignored on input).
std::vector<Bracket> tubing_to_brackets(const Diagram& d, const Tubing& t,
                                        const std::vector<int>* slot_mult = nullptr);

// Visit every nested bracketing (every pairwise-compatible bracket set,
// empty set included) exactly once.
void enumerate_bracketings(const Diagram& d,
                           const std::function<void(const std::vector<Bracket>&)>& visit,
                           const std::vector<int>* slot_mult = nullptr);

// Number of k-bracketings for each k >= 0.
std::vector<Int> bracketing_counts(const Diagram& d,
                                   const std::vector<int>* slot_mult = nullptr);

// Graded face counts of the diagram's chamber in the blown-up complex: the
// interval above the base tubing in the ambient poset, skipping tubes that
// refine the inside of a thick block (those only exist for multiplicities
// above two and lie in deeper strata).
std::vector<Int> chamber_face_counts(const Diagram& d,
                                     const std::vector<int>* slot_mult = nullptr);

}  // namespace coxmod
