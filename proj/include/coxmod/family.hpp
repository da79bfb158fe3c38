#pragma once

#include <string>

namespace coxmod {

// The seven infinite families of simplicial Coxeter groups: three spherical,
// four Euclidean (handled as toroidal quotients).
enum class FamilyTag { A, B, D, Atil, Btil, Ctil, Dtil };

struct Family {
  FamilyTag tag;
  int rank;
};

bool is_spherical(FamilyTag t);

// Smallest rank at which the family graph is simple, connected, and does not
// coincide with an earlier family.
int min_rank(FamilyTag t);

// Node count of the Coxeter graph: rank for spherical, rank+1 for toroidal.
int graph_node_count(Family f);

// Families whose configuration model has an axis point with no fixed
// particle; these are the ones that admit thick particles.
bool is_atypical_host(FamilyTag t);

std::string family_name(FamilyTag t);       // "A", "Atilde", ...
FamilyTag parse_family(const std::string&); // inverse, throws on junk

void check_rank(Family f);  // throws std::invalid_argument naming the bound

}  // namespace coxmod
