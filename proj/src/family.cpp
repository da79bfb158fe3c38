#include "coxmod/family.hpp"

#include <stdexcept>

namespace coxmod {

bool is_spherical(FamilyTag t) {
  return t == FamilyTag::A || t == FamilyTag::B || t == FamilyTag::D;
}

int min_rank(FamilyTag t) {
  switch (t) {
    case FamilyTag::A: return 1;
    case FamilyTag::B: return 2;
    case FamilyTag::D: return 3;
    case FamilyTag::Atil: return 1;
    case FamilyTag::Btil: return 3;
    case FamilyTag::Ctil: return 2;
    case FamilyTag::Dtil: return 4;
  }
  return 1;
}

int graph_node_count(Family f) {
  return is_spherical(f.tag) ? f.rank : f.rank + 1;
}

bool is_atypical_host(FamilyTag t) {
  return t == FamilyTag::D || t == FamilyTag::Btil || t == FamilyTag::Dtil;
}

std::string family_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::A: return "A";
    case FamilyTag::B: return "B";
    case FamilyTag::D: return "D";
    case FamilyTag::Atil: return "Atilde";
    case FamilyTag::Btil: return "Btilde";
    case FamilyTag::Ctil: return "Ctilde";
    case FamilyTag::Dtil: return "Dtilde";
  }
  return "?";
}

FamilyTag parse_family(const std::string& s) {
  if (s == "A") return FamilyTag::A;
  if (s == "B") return FamilyTag::B;
  if (s == "D") return FamilyTag::D;
  if (s == "Atilde") return FamilyTag::Atil;
  if (s == "Btilde") return FamilyTag::Btil;
  if (s == "Ctilde") return FamilyTag::Ctil;
  if (s == "Dtilde") return FamilyTag::Dtil;
  throw std::invalid_argument("unknown family '" + s +
                              "' (expected A, B, D, Atilde, Btilde, Ctilde, Dtilde)");
}

void check_rank(Family f) {
  int lo = min_rank(f.tag);
  if (f.rank < lo)
    throw std::invalid_argument("family " + family_name(f.tag) + " requires rank >= " +
                                std::to_string(lo) + ", got " + std::to_string(f.rank));
}

}  // namespace coxmod
