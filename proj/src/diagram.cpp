#include "coxmod/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxmod {

int Diagram::thick_count() const {
  int m = 0;
  for (size_t i = 1; i < mult.size(); ++i)
    if (mult[i] > 1) ++m;
  return m;
}

int Diagram::ambient_pairs() const {
  if (mult.empty()) return pairs;
  int total = 0;
  for (int s = 1; s <= pairs; ++s) total += mult[s];
  return total;
}

Diagram make_diagram(Family f, const std::vector<int>& thick_mult) {
  check_rank(f);
  Diagram d;
  d.family = f.tag;
  d.rank = f.rank;
  switch (f.tag) {
    case FamilyTag::A:
      d.pairs = f.rank + 1;
      break;
    case FamilyTag::Atil:
      d.circle = true;
      d.pairs = f.rank + 1;
      break;
    case FamilyTag::B:
      d.symmetric = true;
      d.pairs = f.rank;
      d.low = EndKind::Fixed;
      break;
    case FamilyTag::D:
      d.symmetric = true;
      d.pairs = f.rank;
      d.low = EndKind::Free;
      break;
    case FamilyTag::Btil:
      d.symmetric = true;
      d.circle = true;
      d.pairs = f.rank;
      d.low = EndKind::Fixed;
      d.high = EndKind::Free;
      break;
    case FamilyTag::Ctil:
      d.symmetric = true;
      d.circle = true;
      d.pairs = f.rank;
      d.low = EndKind::Fixed;
      d.high = EndKind::Fixed;
      break;
    case FamilyTag::Dtil:
      d.symmetric = true;
      d.circle = true;
      d.pairs = f.rank;
      d.low = EndKind::Free;
      d.high = EndKind::Free;
      break;
  }
  if (!thick_mult.empty()) {
    if (!is_atypical_host(f.tag))
      throw std::invalid_argument(
          "thick particles require an axis point without a fixed particle "
          "(families D, Btilde, Dtilde); they are inconsequential for " +
          family_name(f.tag));
    if (static_cast<int>(thick_mult.size()) > d.pairs)
      throw std::invalid_argument("more thick particles than pairs");
    d.mult.assign(d.pairs + 1, 1);
    for (size_t i = 0; i < thick_mult.size(); ++i) {
      if (thick_mult[i] < 2)
        throw std::invalid_argument("thick multiplicity must be >= 2");
      d.mult[i + 1] = thick_mult[i];
    }
  }
  return d;
}

std::string Diagram::render() const {
  std::ostringstream os;
  auto put = [&](int label, int sgn) {
    os << ' ';
    if (sgn < 0) os << '-';
    os << label;
    if (multiplicity(label) > 1) os << '#';
  };
  if (!symmetric) {
    os << (circle ? "circle(" : "(");
    for (int p = 1; p <= pairs; ++p) put(p, +1);
    os << " )";
    return os.str();
  }
  auto mark = [&](EndKind e) { os << ' ' << (e == EndKind::Fixed ? '*' : '|'); };
  if (!circle) {
    os << "(";
    for (int s = pairs; s >= 1; --s) put(s, -1);
    mark(low);
    for (int s = 1; s <= pairs; ++s) put(s, +1);
    os << " )";
  } else {
    os << "circle(";
    mark(low);
    for (int s = 1; s <= pairs; ++s) put(s, +1);
    mark(high);
    for (int s = pairs; s >= 1; --s) put(s, -1);
    os << " )";
  }
  return os.str();
}

Bracket Bracket::side(int lo, int hi, int slo, int shi) {
  Bracket b;
  b.kind = Kind::Side;
  b.lo = lo;
  b.hi = hi;
  b.sign_lo = slo;
  b.sign_hi = shi;
  return b;
}

Bracket Bracket::axis_low(int count, int branch) {
  Bracket b;
  b.kind = Kind::AxisLow;
  b.count = count;
  b.lo = 1;
  b.hi = count;
  b.branch = branch;
  return b;
}

Bracket Bracket::axis_high(int count, int branch) {
  Bracket b;
  b.kind = Kind::AxisHigh;
  b.count = count;
  b.branch = branch;
  return b;
}

std::vector<int> fundamental_slot_mult(const Diagram& d) {
  std::vector<int> sm(d.pairs + 1, 1);
  for (int s = 1; s <= d.pairs; ++s) sm[s] = d.multiplicity(s);
  return sm;
}

namespace {

struct Slots {
  const Diagram& d;
  std::vector<int> sm;

  Slots(const Diagram& dia, const std::vector<int>* slot_mult) : d(dia) {
    sm = slot_mult ? *slot_mult : fundamental_slot_mult(dia);
    if (static_cast<int>(sm.size()) != d.pairs + 1)
      throw std::invalid_argument("slot multiplicity vector has wrong length");
  }

  bool thick(int s) const { return sm[s] > 1; }

  int thick_in(int lo, int hi) const {
    int r = 0;
    for (int s = lo; s <= hi; ++s) r += thick(s);
    return r;
  }

  // 1-based start/end of a slot's block in the ambient (expanded) diagram
  int amb_start(int s) const {
    int a = 1;
    for (int t = 1; t < s; ++t) a += sm[t];
    return a;
  }
  int amb_end(int s) const { return amb_start(s) + sm[s] - 1; }
  int amb_pairs() const { return amb_end(d.pairs); }
};

// slot range occupied by a bracket
std::pair<int, int> block_range(const Diagram& d, const Bracket& b) {
  switch (b.kind) {
    case Bracket::Kind::Side: return {b.lo, b.hi};
    case Bracket::Kind::AxisLow: return {1, b.count};
    case Bracket::Kind::AxisHigh: return {d.pairs - b.count + 1, d.pairs};
  }
  throw std::logic_error("unreachable");
}

bool axis_block_is_single_bracket(EndKind end, int j, int r) {
  if (end == EndKind::Fixed) return j >= 1;
  return j >= 3 || (r >= 1 && j >= 1 && !(j == 2 && r == 0));
}

}  // namespace

bool bracket_valid(const Diagram& d, const Bracket& b, const std::vector<int>* slot_mult) {
  if (!d.symmetric) {
    // plain families: runs on the line, arcs on the circle
    if (b.kind != Bracket::Kind::Side || b.sign_lo != +1 || b.sign_hi != +1) return false;
    int len = b.hi - b.lo + 1;
    if (len < 2) return false;
    if (!d.circle) return b.lo >= 1 && b.hi <= d.pairs && !(b.lo == 1 && b.hi == d.pairs);
    return b.lo >= 1 && b.lo <= d.pairs && len <= d.pairs;
  }
  Slots sl(d, slot_mult);
  int n = d.pairs;
  switch (b.kind) {
    case Bracket::Kind::Side: {
      if (b.lo < 1 || b.hi > n || b.hi - b.lo + 1 < 2) return false;
      if (b.sign_lo == -1 &&
          !(b.lo == 1 && d.low == EndKind::Free && !sl.thick(1)))
        return false;
      if (b.sign_hi == -1 &&
          !(b.hi == n && d.circle && d.high == EndKind::Free && !sl.thick(n)))
        return false;
      return b.sign_lo != 0 && b.sign_hi != 0;
    }
    case Bracket::Kind::AxisLow: {
      if (d.low == EndKind::Open) return false;
      int j = b.count;
      if (j < 1 || j > n) return false;
      if (!d.circle && j == n) return false;  // the all-particle bracket
      if (!axis_block_is_single_bracket(d.low, j, sl.thick_in(1, j))) return false;
      if (j == n && d.circle && d.high == EndKind::Free)
        return sl.thick(n) ? b.branch == +1 : (b.branch == +1 || b.branch == -1);
      return b.branch == 0;
    }
    case Bracket::Kind::AxisHigh: {
      if (!d.circle || d.high == EndKind::Open) return false;
      int j = b.count;
      if (j < 1 || j > n) return false;
      if (!axis_block_is_single_bracket(d.high, j, sl.thick_in(n - j + 1, n))) return false;
      if (j == n && d.low == EndKind::Free)
        return sl.thick(1) ? b.branch == +1 : (b.branch == +1 || b.branch == -1);
      return b.branch == 0;
    }
  }
  return false;
}

std::vector<Bracket> enumerate_brackets(const Diagram& d, const std::vector<int>* slot_mult) {
  std::vector<Bracket> out;
  if (!d.symmetric) {
    int N = d.pairs;
    if (!d.circle) {
      for (int lo = 1; lo <= N; ++lo)
        for (int hi = lo + 1; hi <= N; ++hi)
          if (!(lo == 1 && hi == N)) out.push_back(Bracket::side(lo, hi));
    } else {
      for (int lo = 1; lo <= N; ++lo)
        for (int len = 2; len <= N; ++len)
          out.push_back(Bracket::side(lo, lo + len - 1));
    }
  } else {
    Slots sl(d, slot_mult);
    int n = d.pairs;
    for (int lo = 1; lo <= n; ++lo)
      for (int hi = lo + 1; hi <= n; ++hi)
        for (int slo : {+1, -1})
          for (int shi : {+1, -1}) {
            Bracket b = Bracket::side(lo, hi, slo, shi);
            if (bracket_valid(d, b, slot_mult)) out.push_back(b);
          }
    for (int j = 1; j <= n; ++j)
      for (int br : {0, +1, -1}) {
        Bracket b = Bracket::axis_low(j, br);
        if (bracket_valid(d, b, slot_mult)) out.push_back(b);
        b = Bracket::axis_high(j, br);
        if (bracket_valid(d, b, slot_mult)) out.push_back(b);
      }
    (void)sl;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brackets_compatible(const Diagram& d, const Bracket& a, const Bracket& b,
                         const std::vector<int>* slot_mult) {
  if (a == b) return true;
  if (!d.symmetric) {
    int N = d.pairs;
    if (!d.circle) {
      if (a.hi < b.lo || b.hi < a.lo) return true;                            // disjoint
      if (a.lo <= b.lo && b.hi <= a.hi) return true;                          // nested
      if (b.lo <= a.lo && a.hi <= b.hi) return true;
      return false;
    }
    // circular arcs: compare position sets relative to one arc's frame
    auto len = [&](const Bracket& x) { return x.hi - x.lo + 1; };
    auto contains = [&](const Bracket& outer, const Bracket& inner) {
      // inner's offsets in outer's frame must form an interval inside [0,len)
      int off = ((inner.lo - outer.lo) % N + N) % N;
      return off + len(inner) <= len(outer);
    };
    auto disjoint = [&](const Bracket& x, const Bracket& y) {
      int off = ((y.lo - x.lo) % N + N) % N;
      return off >= len(x) && off + len(y) <= N;
    };
    if (len(a) == N && len(b) == N) return false;  // same particles, different gap
    return disjoint(a, b) || contains(a, b) || contains(b, a);
  }

  Slots sl(d, slot_mult);
  int n = d.pairs;
  auto [alo, ahi] = block_range(d, a);
  auto [blo, bhi] = block_range(d, b);
  bool a_axis = a.kind != Bracket::Kind::Side;
  bool b_axis = b.kind != Bracket::Kind::Side;

  if (ahi < blo || bhi < alo) return true;  // disjoint blocks always coexist

  if (a_axis && b_axis) {
    if (a.kind != b.kind) return false;  // opposite ends overlapping
    if (a.count == b.count) return false;  // equal blocks, distinct branches
    // nested same-end blocks
    return true;
  }

  auto nested_sides_ok = [&](const Bracket& inner, const Bracket& outer) {
    if (inner.lo == 1 && inner.sign_lo != outer.sign_lo) return false;
    if (inner.hi == n && inner.sign_hi != outer.sign_hi) return false;
    return true;
  };

  if (!a_axis && !b_axis) {
    if (alo == blo && ahi == bhi) {
      // the reducible two-pair axis collision stored as a sign pair; a thick
      // slot would make the block irreducible and a single bracket instead
      bool low_pair = (alo == 1 && ahi == 2 && d.low == EndKind::Free &&
                       !sl.thick(1) && !sl.thick(2) &&
                       a.sign_lo == -b.sign_lo && a.sign_hi == b.sign_hi);
      bool high_pair = (alo == n - 1 && ahi == n && d.circle &&
                        d.high == EndKind::Free && !sl.thick(n - 1) && !sl.thick(n) &&
                        a.sign_hi == -b.sign_hi && a.sign_lo == b.sign_lo);
      return low_pair || high_pair;
    }
    if (blo <= alo && ahi <= bhi) return nested_sides_ok(a, b);
    if (alo <= blo && bhi <= ahi) return nested_sides_ok(b, a);
    return false;
  }

  // one axis block, one side run: the side may nest inside the block
  const Bracket& ax = a_axis ? a : b;
  const Bracket& sd = a_axis ? b : a;
  auto [xlo, xhi] = block_range(d, ax);
  if (sd.lo >= xlo && sd.hi <= xhi) {
    if (ax.count == n && ax.branch != 0) {
      if (ax.kind == Bracket::Kind::AxisLow && sd.hi == n && sd.sign_hi != ax.branch)
        return false;
      if (ax.kind == Bracket::Kind::AxisHigh && sd.lo == 1 && sd.sign_lo != ax.branch)
        return false;
    }
    return true;
  }
  return false;
  (void)sl;
}

std::string StabilizerType::str() const {
  switch (tag) {
    case Tag::A: return "A" + std::to_string(rank);
    case Tag::B: return "B" + std::to_string(rank);
    case Tag::D:
      return r > 0 ? "D" + std::to_string(rank) + "," + std::to_string(r)
                   : "D" + std::to_string(rank);
    case Tag::Product: return "A1xA1";
  }
  return "?";
}

StabilizerType bracket_stabilizer(const Diagram& d, const Bracket& b,
                                  const std::vector<int>* slot_mult) {
  StabilizerType st;
  if (!d.symmetric || b.kind == Bracket::Kind::Side) {
    st.tag = StabilizerType::Tag::A;
    st.rank = b.hi - b.lo;  // one less than the particle count
    return st;
  }
  Slots sl(d, slot_mult);
  auto [lo, hi] = block_range(d, b);
  int j = b.count;
  EndKind end = b.kind == Bracket::Kind::AxisLow ? d.low : d.high;
  if (end == EndKind::Fixed) {
    st.tag = StabilizerType::Tag::B;
    st.rank = j;
    return st;
  }
  int r = sl.thick_in(lo, hi);
  if (j == 2 && r == 0) {
    st.tag = StabilizerType::Tag::Product;
    st.rank = 2;
    return st;
  }
  if (j == 1 && r == 0) throw std::invalid_argument("one free pair is no collision");
  st.tag = StabilizerType::Tag::D;
  st.rank = j;
  st.r = r;
  return st;
}

int support_dim(const Diagram& d, const Bracket& b, const std::vector<int>* slot_mult) {
  return d.complex_dim() - bracket_stabilizer(d, b, slot_mult).rank;
}

Graph bijection_graph(const Diagram& d) {
  int pairs = d.has_thick() ? d.ambient_pairs() : d.pairs;
  int rank = d.symmetric ? pairs : pairs - 1;
  return build_coxeter_graph({d.family, rank});
}

namespace {

// Node ids of the chamber walls, matching build_coxeter_graph's numbering.
struct Walls {
  const Diagram& d;
  int n;

  explicit Walls(const Diagram& dia) : d(dia), n(dia.pairs) {}

  int low(int sign) const {
    switch (d.family) {
      case FamilyTag::B:
      case FamilyTag::Btil:
      case FamilyTag::Ctil: return 0;
      case FamilyTag::D: return sign > 0 ? n - 2 : n - 1;
      case FamilyTag::Dtil: return sign > 0 ? n - 3 : n - 2;
      default: throw std::logic_error("no low wall");
    }
  }

  int high(int sign) const {
    switch (d.family) {
      case FamilyTag::Btil: return sign > 0 ? n - 1 : n;
      case FamilyTag::Ctil: return n;
      case FamilyTag::Dtil: return sign > 0 ? n - 1 : n;
      default: throw std::logic_error("no high wall");
    }
  }

  // wall between slots j and j+1, both particles on the displayed side
  int mid(int j) const {
    switch (d.family) {
      case FamilyTag::A: return j - 1;
      case FamilyTag::Atil: return (j - 1) % (n);  // n here counts particles
      case FamilyTag::B: return j;
      case FamilyTag::D: return n - 1 - j;
      case FamilyTag::Btil: return j;
      case FamilyTag::Ctil: return j;
      case FamilyTag::Dtil: return j - 2;
      default: throw std::logic_error("unreachable");
    }
  }

  // wall between slots j, j+1 given end signs of the enclosing bracket
  int between(int j, int sign_at_low, int sign_at_high) const {
    if (j == 1 && d.low == EndKind::Free) return low(sign_at_low);
    if (d.circle && j == n - 1 && d.high == EndKind::Free) return high(sign_at_high);
    return mid(j);
  }
};

Bracket ambient_bracket(const Diagram& d, const Bracket& b, const Slots& sl) {
  Bracket a = b;
  switch (b.kind) {
    case Bracket::Kind::Side:
      a.lo = sl.amb_start(b.lo);
      a.hi = sl.amb_end(b.hi);
      break;
    case Bracket::Kind::AxisLow:
      a.count = sl.amb_end(b.count);
      a.lo = 1;
      a.hi = a.count;
      break;
    case Bracket::Kind::AxisHigh:
      a.count = sl.amb_pairs() - sl.amb_start(d.pairs - b.count + 1) + 1;
      break;
  }
  return a;
}

Diagram plain_ambient(const Diagram& d) {
  Diagram amb = d;
  amb.mult.clear();
  amb.pairs = d.ambient_pairs();
  amb.rank = amb.pairs;
  return amb;
}

Mask tube_of_plain_bracket(const Diagram& d, const Bracket& b) {
  Walls w(d);
  Mask tube = 0;
  if (!d.symmetric) {
    int N = d.pairs;
    for (int j = b.lo; j <= b.hi - 1; ++j)
      tube |= bit(d.circle ? ((j - 1) % N) : (j - 1));
    return tube;
  }
  int n = d.pairs;
  switch (b.kind) {
    case Bracket::Kind::Side:
      for (int j = b.lo; j < b.hi; ++j) tube |= bit(w.between(j, b.sign_lo, b.sign_hi));
      return tube;
    case Bracket::Kind::AxisLow: {
      if (d.low == EndKind::Fixed)
        tube |= bit(0);
      else {
        // a two-pair free block is the reducible collision; with the plus
        // side as the thick base, the bracket contributes the minus wall
        if (b.count == 2) return bit(w.low(-1));
        tube |= bit(w.low(+1)) | bit(w.low(-1));
      }
      int start = d.low == EndKind::Fixed ? 1 : 2;
      for (int j = start; j < b.count; ++j)
        tube |= bit(w.between(j, 0, b.branch == 0 ? +1 : b.branch));
      return tube;
    }
    case Bracket::Kind::AxisHigh: {
      if (d.high == EndKind::Fixed)
        tube |= bit(w.high(0));
      else {
        if (b.count == 2) return bit(w.high(-1));
        tube |= bit(w.high(+1)) | bit(w.high(-1));
      }
      int lo = n - b.count + 1;
      int last = d.high == EndKind::Fixed ? n - 1 : n - 2;
      for (int j = lo; j <= last; ++j)
        tube |= bit(w.between(j, b.branch == 0 ? +1 : b.branch, 0));
      return tube;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Mask tube_of_bracket(const Diagram& d, const Bracket& b, const std::vector<int>* slot_mult) {
  if (!bracket_valid(d, b, slot_mult)) throw std::invalid_argument("invalid bracket");
  Slots sl(d, slot_mult);
  if (sl.amb_pairs() == d.pairs || !d.symmetric)
    return tube_of_plain_bracket(d, b);
  Diagram amb = plain_ambient(d);
  return tube_of_plain_bracket(amb, ambient_bracket(d, b, sl));
}

Tubing base_tubing(const Diagram& d, const std::vector<int>* slot_mult) {
  Tubing base;
  if (!d.symmetric) return base;
  Slots sl(d, slot_mult);
  if (sl.amb_pairs() == d.pairs) return base;
  Diagram amb = plain_ambient(d);
  for (int s = 1; s <= d.pairs; ++s)
    if (sl.thick(s))
      base.tubes.push_back(
          tube_of_plain_bracket(amb, Bracket::side(sl.amb_start(s), sl.amb_end(s))));
  std::sort(base.tubes.begin(), base.tubes.end());
  return base;
}

Tubing brackets_to_tubing(const Diagram& d, const std::vector<Bracket>& bs,
                          const std::vector<int>* slot_mult) {
  for (size_t i = 0; i < bs.size(); ++i)
    for (size_t j = i + 1; j < bs.size(); ++j)
      if (!brackets_compatible(d, bs[i], bs[j], slot_mult))
        throw std::invalid_argument("crossing brackets");
  Tubing t = base_tubing(d, slot_mult);
  for (const Bracket& b : bs) t.tubes.push_back(tube_of_bracket(d, b, slot_mult));
  std::sort(t.tubes.begin(), t.tubes.end());
  t.tubes.erase(std::unique(t.tubes.begin(), t.tubes.end()), t.tubes.end());
  return t;
}

std::vector<Bracket> tubing_to_brackets(const Diagram& d, const Tubing& t,
                                        const std::vector<int>* slot_mult) {
  std::map<Mask, Bracket> inv;
  for (const Bracket& b : enumerate_brackets(d, slot_mult))
    inv.emplace(tube_of_bracket(d, b, slot_mult), b);
  Tubing base = base_tubing(d, slot_mult);
  std::vector<Bracket> out;
  for (Mask tube : t.tubes) {
    if (std::find(base.tubes.begin(), base.tubes.end(), tube) != base.tubes.end())
      continue;
    auto it = inv.find(tube);
    if (it == inv.end())
      throw std::invalid_argument("tube has no bracket preimage on this diagram");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void enumerate_bracketings(const Diagram& d,
                           const std::function<void(const std::vector<Bracket>&)>& visit,
                           const std::vector<int>* slot_mult) {
  auto all = enumerate_brackets(d, slot_mult);
  std::vector<Bracket> cur;
  std::function<void(size_t)> rec = [&](size_t from) {
    visit(cur);
    for (size_t i = from; i < all.size(); ++i) {
      bool ok = true;
      for (const Bracket& c : cur)
        if (!brackets_compatible(d, c, all[i], slot_mult)) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(all[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<Int> bracketing_counts(const Diagram& d, const std::vector<int>* slot_mult) {
  std::vector<Int> counts;
  enumerate_bracketings(d, [&](const std::vector<Bracket>& bs) {
    if (counts.size() <= bs.size()) counts.resize(bs.size() + 1, 0);
    counts[bs.size()] += 1;
  }, slot_mult);
  return counts;
}

std::vector<Int> chamber_face_counts(const Diagram& d, const std::vector<int>* slot_mult) {
  Graph g = bijection_graph(d);
  Tubing base = base_tubing(d, slot_mult);
  // candidates: tubes over the base that are not strictly inside a base tube
  std::vector<Mask> cand;
  for (Mask s : all_tubes(g)) {
    bool drop = false;
    for (Mask b : base.tubes) {
      if (s == b) drop = true;
      if ((s & b) == s && s != b) drop = true;
      if (!are_compatible(g, s, b)) drop = true;
    }
    if (!drop) cand.push_back(s);
  }
  std::vector<Int> counts{1};
  std::vector<Mask> chosen;
  std::function<void(size_t)> rec = [&](size_t from) {
    for (size_t i = from; i < cand.size(); ++i) {
      bool ok = true;
      for (Mask c : chosen)
        if (!are_compatible(g, cand[i], c)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(cand[i]);
      if (counts.size() <= chosen.size()) counts.resize(chosen.size() + 1, 0);
      counts[chosen.size()] += 1;
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return counts;
}

}  // namespace coxmod
