#pragma once

#include "coxmod/graph.hpp"
#include "coxmod/ints.hpp"

#include <vector>

namespace coxmod {

// f_0..f_d, exact; f_d = 1 counts the polytope itself.
using FVector = std::vector<Int>;

// f-vector of the graph-associahedron of a connected graph, by exhaustive
// tubing enumeration: f_{n-1-k} = number of k-tubings.
FVector fvector_exhaustive(const Graph& g);

// The four tiling polytopes with printed enumerations.
//   Assoc n  : associahedron of the path on n nodes (Cayley), dim n-1, n>=1.
//   Cyclo n  : cyclohedron of the cycle on n+1 nodes (Simion), dim n, n>=2.
//   DGraph n : graph-associahedron of the D_n graph (recursion), dim n-1, n>=3.
//   DtilGraph n : of the Dtil_n graph (recursion), dim n, n>=4.
enum class PolytopeKind { Assoc, Cyclo, DGraph, DtilGraph };

FVector fvector_formula(PolytopeKind kind, int n);

// Individual closed-form entries; 0 outside the valid k range, and the
// associahedron recursion base cases f(PA_1) = (1), PA_m = 0 for m <= 0.
Int assoc_face_count(int n, int k);
Int cyclo_face_count(int n, int k);
Int dgraph_face_count(int n, int k);
Int dtilgraph_face_count(int n, int k);

// Sum of (-1)^k f_k; equals 1 for every polytope f-vector here.
Int alternating_sum(const FVector& f);

PolytopeKind parse_polytope(const std::string& s);
std::string polytope_name(PolytopeKind k);

}  // namespace coxmod
