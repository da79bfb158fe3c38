#include "coxmod/fvector.hpp"

#include "coxmod/tubing.hpp"

#include <stdexcept>

namespace coxmod {

FVector fvector_exhaustive(const Graph& g) {
  auto counts = tubing_counts_by_size(g);  // index = tubing size
  FVector f(g.n);
  for (int k = 0; k < g.n; ++k) f[g.n - 1 - k] = counts[k];
  return f;
}

Int assoc_face_count(int n, int k) {
  if (n <= 0) return 0;
  if (k < 0 || k > n - 1) return 0;
  // Cayley: f_k = C(n-1,k) C(2n-k,n) / (n+1), counting n-gon dissections.
  Int num = binomial(n - 1, k) * binomial(2 * n - k, n);
  return num / (n + 1);
}

Int cyclo_face_count(int n, int k) {
  if (n <= 0) return 0;
  if (k < 0 || k > n) return 0;
  return binomial(n, k) * binomial(2 * n - k, n);
}

Int dgraph_face_count(int n, int k) {
  if (k < 0 || k > n - 1) return 0;
  return 2 * assoc_face_count(n, k) - 2 * assoc_face_count(n - 1, k) -
         assoc_face_count(n - 2, k) - assoc_face_count(n - 1, k - 1) -
         assoc_face_count(n - 2, k - 1);
}

Int dtilgraph_face_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  return 4 * assoc_face_count(n + 1, k) - 8 * assoc_face_count(n, k) -
         4 * assoc_face_count(n, k - 1) + assoc_face_count(n - 1, k - 2) +
         4 * assoc_face_count(n - 2, k) + 6 * assoc_face_count(n - 2, k - 1) +
         2 * assoc_face_count(n - 2, k - 2) + assoc_face_count(n - 3, k) +
         2 * assoc_face_count(n - 3, k - 1) + assoc_face_count(n - 3, k - 2);
}

FVector fvector_formula(PolytopeKind kind, int n) {
  int lo, dim;
  Int (*entry)(int, int);
  switch (kind) {
    case PolytopeKind::Assoc: lo = 1; dim = n - 1; entry = assoc_face_count; break;
    case PolytopeKind::Cyclo: lo = 2; dim = n; entry = cyclo_face_count; break;
    case PolytopeKind::DGraph: lo = 3; dim = n - 1; entry = dgraph_face_count; break;
    case PolytopeKind::DtilGraph: lo = 4; dim = n; entry = dtilgraph_face_count; break;
    default: throw std::logic_error("unreachable");
  }
  if (n < lo)
    throw std::invalid_argument(polytope_name(kind) + " requires n >= " + std::to_string(lo));
  FVector f(dim + 1);
  for (int k = 0; k <= dim; ++k) f[k] = entry(n, k);
  return f;
}

Int alternating_sum(const FVector& f) {
  Int s = 0;
  for (size_t k = 0; k < f.size(); ++k) s += (k % 2 ? -f[k] : f[k]);
  return s;
}

PolytopeKind parse_polytope(const std::string& s) {
  if (s == "assoc") return PolytopeKind::Assoc;
  if (s == "cyclo") return PolytopeKind::Cyclo;
  if (s == "D") return PolytopeKind::DGraph;
  if (s == "Dtilde") return PolytopeKind::DtilGraph;
  throw std::invalid_argument("unknown polytope '" + s +
                              "' (expected assoc, cyclo, D, Dtilde)");
}

std::string polytope_name(PolytopeKind k) {
  switch (k) {
    case PolytopeKind::Assoc: return "assoc";
    case PolytopeKind::Cyclo: return "cyclo";
    case PolytopeKind::DGraph: return "D";
    case PolytopeKind::DtilGraph: return "Dtilde";
  }
  return "?";
}

}  // namespace coxmod
