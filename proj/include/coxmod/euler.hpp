#pragma once

#include "coxmod/family.hpp"
#include "coxmod/fvector.hpp"
#include "coxmod/ints.hpp"

#include <string>
#include <vector>

namespace coxmod {

// Chamber count of the spherical or toroidal Coxeter complex.
Int chamber_count(Family f);

// The tile of the blown-up complex, as a formula parameter: which closed
// f-vector family and at which index.
std::pair<PolytopeKind, int> tile_polytope(Family f);

enum class FVectorSource { Formula, Exhaustive };

// Euler characteristic via the tiling: sum (-1)^k g f_k / 2^(d-k). Exact;
// throws std::domain_error if the reduced sum is not an integer.
Int euler_sum(Family f, FVectorSource src = FVectorSource::Formula);

// Literal evaluation of the printed closed forms (zero at the parity the
// theorem excludes). Returns a rational because the Dtilde form, as printed,
// is not always integral.
Rat euler_closed(Family f);

struct EulerReport {
  Family family;
  Int chambers;
  FVector tile_f;
  Int chi_sum;
  Rat chi_closed;
  bool agree;
};

// Both methods for every family and rank up to max_rank; disagreements are
// reported, never reconciled.
std::vector<EulerReport> verify_closed_forms(int max_rank,
                                             FVectorSource src = FVectorSource::Formula);

}  // namespace coxmod
