#include "coxmod/buildingset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace coxmod {

namespace {

using Vec = std::vector<int>;

long dot(const Vec& a, const Vec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += long(a[i]) * b[i];
  return s;
}

int rank_of(std::vector<Vec> rows) {
  int rank = 0;
  size_t cols = rows.empty() ? 0 : rows.front().size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r2 = rank + 1; r2 < rows.size(); ++r2) {
      if (rows[r2][c] == 0) continue;
      long a = rows[rank][c], b = rows[r2][c];
      for (size_t cc = 0; cc < cols; ++cc)
        rows[r2][cc] = static_cast<int>(a * rows[r2][cc] - b * rows[rank][cc]);
    }
    ++rank;
  }
  return rank;
}

// A stabilizer splits iff its hyperplanes fall into two mutually orthogonal
// parts; irreducible = the non-orthogonality graph is connected.
bool irreducible(const std::vector<Vec>& normals) {
  size_t h = normals.size();
  if (h == 0) return false;
  std::vector<char> seen(h, 0);
  std::vector<size_t> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (size_t u = 0; u < h; ++u)
      if (!seen[u] && dot(normals[v], normals[u]) != 0) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == h;
}

struct CensusAccum {
  Family family;
  int m;
  std::map<std::tuple<int, int, int, int, std::string>, Int> buckets;
  // key: (dim, tag, rank, r_in_block, subspace)

  void add(int dim, StabilizerType st, int r_in_block, const std::string& subspace,
           const Int& count) {
    buckets[{dim, static_cast<int>(st.tag), st.rank, r_in_block, subspace}] += count;
  }

  std::vector<BuildingRow> rows() const {
    std::vector<BuildingRow> out;
    for (auto& [key, count] : buckets) {
      auto [dim, tag, rank, r, subspace] = key;
      BuildingRow row;
      row.family = family;
      row.m = m;
      row.dim = dim;
      row.stab.tag = static_cast<StabilizerType::Tag>(tag);
      row.stab.rank = rank;
      row.stab.r = row.stab.tag == StabilizerType::Tag::D ? r : 0;
      row.r_in_block = r;
      row.subspace = subspace;
      row.count = count;
      out.push_back(std::move(row));
    }
    return out;
  }
};

std::string sub_label(FamilyTag tag, int pairs, int thick) {
  std::ostringstream os;
  os << family_name(tag) << pairs;
  if (thick > 0) os << "," << thick;
  return os.str();
}

}  // namespace

std::vector<BuildingRow> enumerate_building_set(Family f, int m) {
  check_rank(f);
  if (m > 0 && !is_atypical_host(f.tag))
    throw std::invalid_argument("thick particles require family D, Btilde or Dtilde");
  if (m > f.rank) throw std::invalid_argument("more thick particles than pairs");
  int n = f.rank;
  bool circle = !is_spherical(f.tag);
  CensusAccum acc{f, m, {}};

  if (f.tag == FamilyTag::A || f.tag == FamilyTag::Atil) {
    int particles = n + 1;
    int cdim = circle ? n : n - 1;
    int maxsz = circle ? particles : particles - 1;  // the spherical center is removed
    for (int sz = 2; sz <= maxsz; ++sz) {
      // stabilizer of a collision block: the difference hyperplanes inside it
      StabilizerType st{StabilizerType::Tag::A, sz - 1, 0};
      std::string sub = sub_label(f.tag, particles - sz + 1 - 1, 0);
      acc.add(cdim - (sz - 1), st, 0, sub, binomial(particles, sz));
    }
    return acc.rows();
  }

  int cdim = circle ? n : n - 1;
  auto thick = [&](int label) { return label <= m; };

  EndKind low, high;
  switch (f.tag) {
    case FamilyTag::B: low = EndKind::Fixed; high = EndKind::Open; break;
    case FamilyTag::D: low = EndKind::Free; high = EndKind::Open; break;
    case FamilyTag::Btil: low = EndKind::Fixed; high = EndKind::Free; break;
    case FamilyTag::Ctil: low = EndKind::Fixed; high = EndKind::Fixed; break;
    case FamilyTag::Dtil: low = EndKind::Free; high = EndKind::Free; break;
    default: throw std::logic_error("unreachable");
  }
  // thick walls exist at the axis points with no fixed particle
  auto wall_at = [&](EndKind end, int label) {
    return end == EndKind::Fixed || (end == EndKind::Free && thick(label));
  };

  // free collision blocks: a label subset with signs modulo the global flip
  for (std::uint32_t S = 1; S < (1u << n); ++S) {
    int sz = popcount(S);
    if (sz < 2) continue;
    std::vector<int> members;
    for (int l = 1; l <= n; ++l)
      if ((S >> (l - 1)) & 1) members.push_back(l);
    int r_in = 0;
    for (int l : members) r_in += thick(l);
    // each sign pattern gives a distinct support; patterns come in mirror
    // pairs, so fix the first member positive
    for (std::uint32_t eps = 0; eps < (1u << (sz - 1)); ++eps) {
      std::vector<Vec> normals;
      std::vector<int> sgn(sz, +1);
      for (int t = 1; t < sz; ++t) sgn[t] = (eps >> (t - 1)) & 1 ? -1 : +1;
      for (int i = 0; i < sz; ++i)
        for (int j = i + 1; j < sz; ++j) {
          Vec v(n, 0);
          v[members[i] - 1] = sgn[i];
          v[members[j] - 1] = -sgn[j];
          normals.push_back(v);
        }
      if (!irreducible(normals)) continue;
      int rank = rank_of(normals);
      StabilizerType st{StabilizerType::Tag::A, sz - 1, 0};
      if (rank != st.rank) throw std::logic_error("free block rank mismatch");
      int rem_thick = 0;
      if (is_atypical_host(f.tag)) rem_thick = m - r_in + 1;  // block turns thick
      std::string sub = sub_label(f.tag, n - sz + 1, rem_thick);
      acc.add(cdim - rank, st, r_in, sub, 1);
    }
  }

  // axis collision blocks at each axis point
  auto axis_blocks = [&](EndKind end, FamilyTag remaining_tag_fixed) {
    if (end == EndKind::Open) return;
    int max_sz = circle ? n : n - 1;  // the spherical center is removed
    for (std::uint32_t Z = 1; Z < (1u << n); ++Z) {
      int sz = popcount(Z);
      if (sz > max_sz) continue;
      std::vector<int> members;
      for (int l = 1; l <= n; ++l)
        if ((Z >> (l - 1)) & 1) members.push_back(l);
      int walls = 0;
      for (int l : members) walls += wall_at(end, l);
      if (sz == 1 && walls == 0) continue;  // not an intersection of hyperplanes
      std::vector<Vec> normals;
      for (int i = 0; i < sz; ++i)
        for (int j = i + 1; j < sz; ++j) {
          Vec v1(n, 0), v2(n, 0);
          v1[members[i] - 1] = 1;
          v1[members[j] - 1] = -1;
          v2[members[i] - 1] = 1;
          v2[members[j] - 1] = 1;
          normals.push_back(v1);
          normals.push_back(v2);
        }
      for (int i = 0; i < sz; ++i)
        if (wall_at(end, members[i])) {
          Vec v(n, 0);
          v[members[i] - 1] = 1;
          normals.push_back(v);
        }
      if (!irreducible(normals)) continue;
      int rank = rank_of(normals);
      int r_in = 0;
      for (int l : members) r_in += thick(l);
      StabilizerType st;
      if (end == EndKind::Fixed) {
        st = {StabilizerType::Tag::B, sz, 0};
      } else {
        st = {StabilizerType::Tag::D, sz, walls};
      }
      if (rank != st.rank) throw std::logic_error("axis block rank mismatch");
      int rem_thick = is_atypical_host(f.tag) ? m - r_in : 0;
      // a fixed particle at every meeting point makes thickness inert
      FamilyTag rt = remaining_tag_fixed;
      if (rt == FamilyTag::B || rt == FamilyTag::Ctil) rem_thick = 0;
      std::string sub = sub_label(rt, n - sz, rem_thick);
      acc.add(cdim - rank, st, r_in, sub, 1);
    }
  };

  // collapsing a block onto an axis point leaves that point walled off
  switch (f.tag) {
    case FamilyTag::B: axis_blocks(low, FamilyTag::B); break;
    case FamilyTag::D: axis_blocks(low, FamilyTag::B); break;
    case FamilyTag::Btil:
      axis_blocks(low, FamilyTag::Btil);   // onto the fixed particle at 1
      axis_blocks(high, FamilyTag::Ctil);  // onto the free point 0
      break;
    case FamilyTag::Ctil:
      axis_blocks(low, FamilyTag::Ctil);
      axis_blocks(high, FamilyTag::Ctil);
      break;
    case FamilyTag::Dtil:
      axis_blocks(low, FamilyTag::Btil);
      axis_blocks(high, FamilyTag::Btil);
      break;
    default: break;
  }
  return acc.rows();
}

// --- printed table rows -------------------------------------------------------

namespace {

int block_nk(int n, int k) { return n - k; }
int block_nk1(int n, int k) { return n - k - 1; }
int block_nk_plus1(int n, int k) { return n + 1 - k; }

Int count_A_row(int n, int k, int, int) { return binomial(n + 1, n - k); }
Int count_Atil_row(int n, int k, int, int) { return binomial(n + 1, n + 1 - k); }
Int count_axis_nk1(int n, int k, int, int) { return binomial(n, n - k - 1); }
Int count_free(int n, int k, int, int) {
  if (n - k - 1 < 0) return 0;
  return pow2(n - k - 1) * binomial(n, n - k);
}
Int count_free_per_r(int n, int k, int m, int r) {
  if (n - k - 1 < 0) return 0;
  return pow2(n - k - 1) * binomial(m, r) * binomial(n - m, n - k - r);
}
Int count_axis_mr(int n, int k, int m, int r) {
  return binomial(m, r) * binomial(n - m, n - k - r - 1);
}
Int count_axis_mr2(int n, int k, int m, int r) {
  return 2 * binomial(m, r) * binomial(n - m, n - k - r - 1);
}
Int count_fixed_nk(int n, int k, int, int) { return binomial(n, n - k); }
Int count_fixed_nk2(int n, int k, int, int) { return 2 * binomial(n, n - k); }

}  // namespace

int TableRowSpec::walls_of_r(int r, int block) const {
  return fixed_walls ? block : r;
}

const std::vector<TableRowSpec>& table_rows(FamilyTag tag, bool atypical) {
  using Tag = StabilizerType::Tag;
  static const std::vector<TableRowSpec> rows_A = {
      {"collision", Tag::A, false, block_nk, count_A_row}};
  static const std::vector<TableRowSpec> rows_Atil = {
      {"collision", Tag::A, false, block_nk_plus1, count_Atil_row}};
  static const std::vector<TableRowSpec> rows_B = {
      {"origin", Tag::B, false, block_nk1, count_axis_nk1, true},
      {"free", Tag::A, false, block_nk, count_free}};
  static const std::vector<TableRowSpec> rows_D = {
      {"axis", Tag::D, false, block_nk1, count_axis_nk1},
      {"free", Tag::A, false, block_nk, count_free}};
  static const std::vector<TableRowSpec> rows_Dm = {
      {"axis", Tag::D, true, block_nk1, count_axis_mr},
      {"free", Tag::A, false, block_nk, count_free},
      {"free-per-r", Tag::A, true, block_nk, count_free_per_r}};
  static const std::vector<TableRowSpec> rows_Btil = {
      {"free", Tag::A, false, block_nk, count_free},
      {"fixed", Tag::B, false, block_nk, count_fixed_nk, true},
      {"axis0", Tag::D, false, block_nk, count_fixed_nk}};
  static const std::vector<TableRowSpec> rows_Btilm = {
      {"free", Tag::A, false, block_nk, count_free},
      {"free-per-r", Tag::A, true, block_nk, count_free_per_r},
      {"fixed", Tag::B, true, block_nk1, count_axis_mr, true},
      {"axis0", Tag::D, true, block_nk1, count_axis_mr}};
  static const std::vector<TableRowSpec> rows_Ctil = {
      {"free", Tag::A, false, block_nk, count_free},
      {"fixed", Tag::B, false, block_nk, count_fixed_nk2, true}};
  static const std::vector<TableRowSpec> rows_Dtil = {
      {"free", Tag::A, false, block_nk, count_free},
      {"axis", Tag::D, false, block_nk, count_fixed_nk2}};
  static const std::vector<TableRowSpec> rows_Dtilm = {
      {"free", Tag::A, false, block_nk, count_free},
      {"free-per-r", Tag::A, true, block_nk, count_free_per_r},
      {"axis", Tag::D, true, block_nk1, count_axis_mr2}};
  switch (tag) {
    case FamilyTag::A: return rows_A;
    case FamilyTag::Atil: return rows_Atil;
    case FamilyTag::B: return rows_B;
    case FamilyTag::D: return atypical ? rows_Dm : rows_D;
    case FamilyTag::Btil: return atypical ? rows_Btilm : rows_Btil;
    case FamilyTag::Ctil: return rows_Ctil;
    case FamilyTag::Dtil: return atypical ? rows_Dtilm : rows_Dtil;
  }
  throw std::logic_error("unreachable");
}

Int building_table_formula(Family f, const std::string& row_name, int k, int m, int r) {
  check_rank(f);
  for (const auto& row : table_rows(f.tag, m > 0))
    if (row.name == row_name) return row.count(f.rank, k, m, r);
  throw std::invalid_argument("unknown table row '" + row_name + "'");
}

std::vector<BuildingComparison> building_check(Family f, int m) {
  auto census = enumerate_building_set(f, m);
  int n = f.rank;
  bool circle = !is_spherical(f.tag);
  int cdim = circle ? n : n - 1;

  auto census_count = [&](StabilizerType::Tag tag, int rank, int r, bool fixed_walls,
                          bool any_r) {
    Int total = 0;
    for (const auto& row : census) {
      if (row.stab.tag != tag || row.stab.rank != rank) continue;
      if (!any_r && row.r_in_block != r) continue;
      (void)fixed_walls;
      total += row.count;
    }
    return total;
  };

  std::vector<BuildingComparison> out;
  for (const auto& row : table_rows(f.tag, m > 0)) {
    for (int k = 0; k <= cdim - 1 + 1; ++k) {
      int block = row.block_of_k(n, k);
      int rank = row.tag == StabilizerType::Tag::A ? block - 1 : block;
      if (rank < 1) continue;
      for (int r = 0; r <= (row.per_r ? m : 0); ++r) {
        Int formula = row.count(n, k, m, r);
        bool any_r = !row.per_r && m > 0;
        Int cen;
        if (row.name == "free" && m > 0)
          cen = census_count(row.tag, rank, 0, false, true);  // summed over r
        else
          cen = census_count(row.tag, rank, r, row.fixed_walls, !row.per_r && m == 0);
        if (formula == 0 && cen == 0) continue;
        BuildingComparison c;
        c.row = row.name;
        c.k = k;
        c.r = r;
        c.census = cen;
        c.formula = formula;
        c.match = cen == formula;
        if (!c.match && row.tag == StabilizerType::Tag::D && block <= 2 && r == 0)
          c.note = "reducible: a free two-pair axis block splits as A1xA1";
        else if (!c.match && row.tag == StabilizerType::Tag::D && block == 1 && r == 0)
          c.note = "no collision: one free pair";
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace coxmod
