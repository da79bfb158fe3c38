#pragma once

#include "coxmod/diagram.hpp"
#include "coxmod/family.hpp"
#include "coxmod/ints.hpp"

#include <string>
#include <vector>

namespace coxmod {

// One census bucket of minimal-building-set elements: all supports sharing a
// dimension, stabilizer type, and thick-in-block count.
struct BuildingRow {
  Family family;
  int m = 0;            // thick particles of the complex
  int dim = 0;          // true support dimension
  StabilizerType stab;  // stabilizer class (rank and, for D-type, walls)
  int r_in_block = 0;   // thick particles in the bracket
  std::string subspace; // computed complex type of the support
  Int count;
};

// Brute-force census: canonical supports of all irreducible one-bracketings
// (collision blocks over all chambers, deduplicated), grouped. Reducible
// supports are excluded by an explicit split test on the stabilizing
// hyperplanes.
std::vector<BuildingRow> enumerate_building_set(Family f, int m = 0);

// The printed enumeration columns of the building-set tables, row by row.
struct TableRowSpec {
  std::string name;          // "free", "axis", "fixed", "free-per-r", ...
  StabilizerType::Tag tag;   // stabilizer family of the row
  bool per_r;                // whether the count depends on r
  // block size as a function of the row index k (from the stabilizer rank)
  int (*block_of_k)(int n, int k);
  Int (*count)(int n, int k, int m, int r);
  int walls_of_r(int r, int block) const;  // thick walls for census lookup
  bool fixed_walls = false;                // B-type rows have all walls
};

const std::vector<TableRowSpec>& table_rows(FamilyTag tag, bool atypical);

Int building_table_formula(Family f, const std::string& row_name, int k, int m, int r);

struct BuildingComparison {
  std::string row;
  int k = 0;       // table row index
  int r = 0;
  Int census;
  Int formula;
  bool match = false;
  std::string note;  // threshold exclusions and conventions, never silent
};

// Census totals against every printed row on its index range; mismatches are
// flagged with the reason where one is known (reducible D ranks).
std::vector<BuildingComparison> building_check(Family f, int m = 0);

}  // namespace coxmod
