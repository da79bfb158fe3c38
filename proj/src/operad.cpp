#include "coxmod/operad.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace coxmod {

namespace {

bool pin_low(const Diagram& d, const std::vector<int>& label,
             const std::vector<int>& mult_by_label) {
  return d.symmetric && d.low == EndKind::Free && mult_by_label[label[1]] == 1;
}

bool pin_high(const Diagram& d, const std::vector<int>& label,
              const std::vector<int>& mult_by_label) {
  return d.symmetric && d.circle && d.high == EndKind::Free &&
         mult_by_label[label[d.pairs]] == 1;
}

std::vector<int> mult_by_label(const Diagram& d) {
  std::vector<int> m(d.pairs + 1, 1);
  for (int l = 1; l <= d.pairs; ++l) m[l] = d.multiplicity(l);
  return m;
}

}  // namespace

Chamber Chamber::fundamental(const Diagram& d) {
  Chamber c;
  c.shape = d;
  c.label.resize(d.pairs + 1);
  c.sign.assign(d.pairs + 1, +1);
  for (int s = 0; s <= d.pairs; ++s) c.label[s] = s;
  return c;
}

std::vector<int> Chamber::slot_mult() const {
  std::vector<int> sm(shape.pairs + 1, 1);
  for (int s = 1; s <= shape.pairs; ++s) sm[s] = shape.multiplicity(label[s]);
  return sm;
}

Chamber Chamber::canonical() const {
  Chamber c = *this;
  int n = shape.pairs;
  if (!shape.symmetric) {
    if (shape.circle) {
      // rotate the largest label to the last slot
      int at = 1;
      for (int s = 1; s <= n; ++s)
        if (c.label[s] == n) at = s;
      if (at != n) {
        Chamber r = c;
        for (int s = 1; s <= n; ++s) r.label[(s - at + n - 1) % n + 1] = c.label[s];
        c = r;
      }
    }
    return c;
  }
  auto ml = mult_by_label(shape);
  if (pin_low(shape, c.label, ml) && c.sign[1] < 0) c.sign[1] = +1;
  if (pin_high(shape, c.label, ml) && c.sign[n] < 0) c.sign[n] = +1;
  return c;
}

bool Chamber::is_canonical() const { return *this == canonical(); }

std::string Chamber::render() const {
  std::ostringstream os;
  int n = shape.pairs;
  auto put = [&](int s, int sgn) {
    os << ' ';
    if (sgn < 0) os << '-';
    os << label[s];
    if (shape.multiplicity(label[s]) > 1) os << '#';
  };
  auto mark = [&](EndKind e) { os << ' ' << (e == EndKind::Fixed ? '*' : '|'); };
  if (!shape.symmetric) {
    os << (shape.circle ? "circle(" : "(");
    for (int s = 1; s <= n; ++s) put(s, +1);
    os << " )";
    return os.str();
  }
  if (!shape.circle) {
    os << "(";
    for (int s = n; s >= 1; --s) put(s, -sign[s]);
    mark(shape.low);
    for (int s = 1; s <= n; ++s) put(s, sign[s]);
    os << " )";
  } else {
    os << "circle(";
    mark(shape.low);
    for (int s = 1; s <= n; ++s) put(s, sign[s]);
    mark(shape.high);
    for (int s = n; s >= 1; --s) put(s, -sign[s]);
    os << " )";
  }
  return os.str();
}

std::vector<Chamber> group_elements(const Diagram& d) {
  std::vector<Chamber> out;
  int n = d.pairs;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  auto ml = mult_by_label(d);
  do {
    Chamber c = Chamber::fundamental(d);
    for (int s = 1; s <= n; ++s) c.label[s] = perm[s - 1];
    if (!d.symmetric) {
      if (d.circle && c.label[n] != n) continue;  // rotation representative
      out.push_back(c);
      continue;
    }
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      Chamber v = c;
      for (int s = 1; s <= n; ++s) v.sign[s] = (bits >> (s - 1)) & 1 ? -1 : +1;
      if (pin_low(d, v.label, ml) && v.sign[1] < 0) continue;
      if (pin_high(d, v.label, ml) && v.sign[n] < 0) continue;
      out.push_back(v);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Chamber act(const Chamber& e, const Chamber& c) {
  if (!(e.shape.family == c.shape.family && e.shape.pairs == c.shape.pairs))
    throw std::invalid_argument("act: shape mismatch");
  Chamber r = c;
  for (int s = 1; s <= c.shape.pairs; ++s) {
    r.label[s] = c.label[e.label[s]];
    r.sign[s] = c.sign[e.label[s]] * e.sign[s];
  }
  return r.canonical();
}

// --- cells -------------------------------------------------------------------

Cell Cell::sorted() const {
  Cell c = *this;
  std::sort(c.brackets.begin(), c.brackets.end());
  return c;
}

bool Cell::operator==(const Cell& o) const {
  return chamber == o.chamber && brackets == o.brackets;
}

bool Cell::operator<(const Cell& o) const {
  if (chamber.key() != o.chamber.key()) return chamber < o.chamber;
  return brackets < o.brackets;
}

std::string Cell::render() const {
  std::ostringstream os;
  os << chamber.render() << " brackets[";
  for (size_t i = 0; i < brackets.size(); ++i) {
    const Bracket& b = brackets[i];
    if (i) os << " ";
    switch (b.kind) {
      case Bracket::Kind::Side:
        os << "s" << b.lo << ":" << b.hi;
        if (b.sign_lo < 0) os << "-lo";
        if (b.sign_hi < 0) os << "-hi";
        break;
      case Bracket::Kind::AxisLow: os << "al" << b.count; break;
      case Bracket::Kind::AxisHigh: os << "ah" << b.count; break;
    }
    if (b.branch) os << (b.branch > 0 ? "+" : "-");
  }
  os << "]";
  return os.str();
}

namespace {

std::vector<int> cell_slot_mult(const Cell& c) { return c.chamber.slot_mult(); }

// slot span occupied by a bracket on an n-pair diagram
std::pair<int, int> bracket_span(int n, const Bracket& b) {
  switch (b.kind) {
    case Bracket::Kind::Side: return {b.lo, b.hi};
    case Bracket::Kind::AxisLow: return {1, b.count};
    case Bracket::Kind::AxisHigh: return {n - b.count + 1, n};
  }
  return {0, -1};
}

void check_cell(const Cell& c) {
  auto sm = cell_slot_mult(c);
  for (size_t i = 0; i < c.brackets.size(); ++i) {
    if (!bracket_valid(c.chamber.shape, c.brackets[i], &sm))
      throw std::invalid_argument("invalid bracket in cell");
    for (size_t j = i + 1; j < c.brackets.size(); ++j)
      if (!brackets_compatible(c.chamber.shape, c.brackets[i], c.brackets[j], &sm))
        throw std::invalid_argument("crossing brackets in cell");
  }
}

// Flip the display of the mirror pair at slot s; a representation change,
// not a different cell. Bracket flags that reference that display adjust.
void toggle_slot_display(Cell& c, int s) {
  int n = c.chamber.shape.pairs;
  c.chamber.sign[s] = -c.chamber.sign[s];
  for (Bracket& b : c.brackets) {
    if (b.kind == Bracket::Kind::Side) {
      if (b.lo == s) b.sign_lo = -b.sign_lo;
      if (b.hi == s) b.sign_hi = -b.sign_hi;
    } else if (b.kind == Bracket::Kind::AxisLow && b.branch != 0 && s == n) {
      b.branch = -b.branch;
    } else if (b.kind == Bracket::Kind::AxisHigh && b.branch != 0 && s == 1) {
      b.branch = -b.branch;
    }
  }
}

Cell canonical_cell(Cell c) {
  const Diagram& d = c.chamber.shape;
  if (d.symmetric) {
    auto ml = mult_by_label(d);
    if (pin_low(d, c.chamber.label, ml) && c.chamber.sign[1] < 0)
      toggle_slot_display(c, 1);
    if (pin_high(d, c.chamber.label, ml) && c.chamber.sign[d.pairs] < 0)
      toggle_slot_display(c, d.pairs);
  } else if (d.circle) {
    // rotate labels and bracket arcs together
    int n = d.pairs, at = 1;
    for (int s = 1; s <= n; ++s)
      if (c.chamber.label[s] == n) at = s;
    if (at != n) {
      Cell r = c;
      for (int s = 1; s <= n; ++s)
        r.chamber.label[(s - at + n - 1) % n + 1] = c.chamber.label[s];
      int shift = (n - at) % n;
      for (Bracket& b : r.brackets) {
        int len = b.hi - b.lo + 1;
        b.lo = (b.lo - 1 + shift) % n + 1;
        b.hi = b.lo + len - 1;
      }
      c = r;
    }
  }
  return c.sorted();
}

// Direct units of a bracket's content: maximal child brackets and loose
// slots, in slot order along the bracket.
struct Unit {
  int lo, hi;  // slot span (uncut; Atil arcs use unreduced coordinates)
};

std::vector<Unit> content_units(const Cell& c, const Bracket& b) {
  // maximal brackets strictly inside b
  int np = c.chamber.shape.pairs;
  auto [blo, bhi] = bracket_span(np, b);
  std::vector<Unit> children;
  for (const Bracket& x : c.brackets) {
    if (x == b) continue;
    auto [xlo, xhi] = bracket_span(np, x);
    bool inside = xlo >= blo && xhi <= bhi && !(xlo == blo && xhi == bhi);
    if (!inside) continue;
    bool maximal = true;
    for (const Bracket& y : c.brackets) {
      if (y == b || y == x) continue;
      auto [ylo, yhi] = bracket_span(np, y);
      if (ylo >= blo && yhi <= bhi && !(ylo == blo && yhi == bhi) && xlo >= ylo &&
          xhi <= yhi && !(xlo == ylo && xhi == yhi)) {
        maximal = false;
        break;
      }
    }
    if (maximal) children.push_back({xlo, xhi});
  }
  std::sort(children.begin(), children.end(),
            [](const Unit& a, const Unit& b2) { return a.lo < b2.lo; });
  // equal-span siblings appear once
  children.erase(std::unique(children.begin(), children.end(),
                             [](const Unit& a, const Unit& b2) {
                               return a.lo == b2.lo && a.hi == b2.hi;
                             }),
                 children.end());
  std::vector<Unit> units;
  int s = blo;
  for (const Unit& ch : children) {
    while (s < ch.lo) units.push_back({s, s}), ++s;
    units.push_back(ch);
    s = ch.hi + 1;
  }
  while (s <= bhi) units.push_back({s, s}), ++s;
  return units;
}

}  // namespace

Cell make_cell(Chamber c, std::vector<Bracket> bs) {
  Cell cell{std::move(c), std::move(bs)};
  cell = canonical_cell(cell);
  check_cell(cell);
  return cell;
}

Cell flip_bracket(const Cell& cell_in, const Bracket& b_in) {
  Cell c = cell_in;
  Bracket b = b_in;
  const Diagram& d = c.chamber.shape;
  int n = d.pairs;
  auto find_b = [&]() {
    return std::find(c.brackets.begin(), c.brackets.end(), b) != c.brackets.end();
  };
  if (!find_b()) throw std::invalid_argument("flip_bracket: bracket not in cell");

  // adjust the display so the bracket reads plainly off the chamber
  if (b.kind == Bracket::Kind::Side) {
    if (b.sign_lo < 0) {
      Bracket before = b;
      toggle_slot_display(c, b.lo);
      b = before;
      b.sign_lo = +1;
    }
    if (b.sign_hi < 0) {
      toggle_slot_display(c, b.hi);
      b.sign_hi = +1;
    }
  } else if (b.branch < 0) {
    toggle_slot_display(c, b.kind == Bracket::Kind::AxisLow ? n : 1);
    b.branch = +1;
  }

  if (b.kind == Bracket::Kind::Side && !d.symmetric && d.circle) {
    // arc reversal; children are lifted into the arc's unreduced frame
    auto lift = [&](const Bracket& x) -> Unit {
      int off = ((x.lo - b.lo) % n + n) % n;
      return {b.lo + off, b.lo + off + (x.hi - x.lo)};
    };
    std::vector<Unit> children;
    for (const Bracket& x : c.brackets) {
      if (x == b) continue;
      Unit u = lift(x);
      if (!(u.lo >= b.lo && u.hi <= b.hi && !(u.lo == b.lo && u.hi == b.hi)))
        continue;
      bool maximal = true;
      for (const Bracket& y : c.brackets) {
        if (y == b || y == x) continue;
        Unit v = lift(y);
        if (v.lo >= b.lo && v.hi <= b.hi && !(v.lo == b.lo && v.hi == b.hi) &&
            u.lo >= v.lo && u.hi <= v.hi && !(u.lo == v.lo && u.hi == v.hi))
          maximal = false;
      }
      if (maximal) children.push_back(u);
    }
    std::sort(children.begin(), children.end(),
              [](const Unit& a, const Unit& b2) { return a.lo < b2.lo; });
    children.erase(std::unique(children.begin(), children.end(),
                               [](const Unit& a, const Unit& b2) {
                                 return a.lo == b2.lo && a.hi == b2.hi;
                               }),
                   children.end());
    std::vector<Unit> units;
    {
      int s = b.lo;
      for (const Unit& ch : children) {
        while (s < ch.lo) units.push_back({s, s}), ++s;
        units.push_back(ch);
        s = ch.hi + 1;
      }
      while (s <= b.hi) units.push_back({s, s}), ++s;
    }
    Chamber nc = c.chamber;
    std::vector<std::pair<Unit, Unit>> moved;
    int pos = b.lo;
    for (auto it = units.rbegin(); it != units.rend(); ++it) {
      int len = it->hi - it->lo + 1;
      moved.push_back({*it, {pos, pos + len - 1}});
      for (int t = 0; t < len; ++t) {
        int from = (it->lo + t - 1) % n + 1;
        int to = (pos + t - 1) % n + 1;
        nc.label[to] = c.chamber.label[from];
      }
      pos += len;
    }
    std::vector<Bracket> nb;
    for (Bracket x : c.brackets) {
      if (!(x == b)) {
        Unit u = lift(x);
        for (auto& [oldu, newu] : moved)
          if (u.lo >= oldu.lo && u.hi <= oldu.hi && oldu.lo != oldu.hi) {
            int off = u.lo - oldu.lo;
            int len = x.hi - x.lo;
            x.lo = (newu.lo + off - 1) % n + 1;
            x.hi = x.lo + len;
            break;
          }
      }
      nb.push_back(x);
    }
    return canonical_cell(Cell{nc, nb});
  }

  if (b.kind == Bracket::Kind::Side) {
    auto units = content_units(c, b);
    Chamber nc = c.chamber;
    std::vector<std::pair<Unit, Unit>> moved;
    int pos = b.lo;
    for (auto it = units.rbegin(); it != units.rend(); ++it) {
      int len = it->hi - it->lo + 1;
      moved.push_back({*it, {pos, pos + len - 1}});
      for (int t = 0; t < len; ++t) {
        nc.label[pos + t] = c.chamber.label[it->lo + t];
        nc.sign[pos + t] = c.chamber.sign[it->lo + t];
      }
      pos += len;
    }
    std::vector<Bracket> nb;
    for (Bracket x : c.brackets) {
      if (!(x == b)) {
        auto [xlo, xhi] = bracket_span(n, x);
        for (auto& [oldu, newu] : moved)
          if (xlo >= oldu.lo && xhi <= oldu.hi && oldu.lo != oldu.hi) {
            if (x.kind == Bracket::Kind::Side) {
              int off = x.lo - oldu.lo;
              int len = x.hi - x.lo;
              x.lo = newu.lo + off;
              x.hi = x.lo + len;
            }
            break;
          }
      }
      nb.push_back(x);
    }
    return canonical_cell(Cell{nc, nb});
  }

  // axis flip: central reflection of the block, signs negate slotwise
  auto [blo, bhi] = std::pair{b.kind == Bracket::Kind::AxisLow ? 1 : n - b.count + 1,
                              b.kind == Bracket::Kind::AxisLow ? b.count : n};
  Chamber nc = c.chamber;
  for (int s = blo; s <= bhi; ++s) nc.sign[s] = -nc.sign[s];
  return canonical_cell(Cell{nc, c.brackets});
}

Chamber adjacent_chamber(const Chamber& c, const Bracket& facet) {
  return cross_facet(c, facet).first;
}

std::pair<Chamber, Bracket> cross_facet(const Chamber& c, const Bracket& facet) {
  auto sm = c.slot_mult();
  if (!bracket_valid(c.shape, facet, &sm))
    throw std::invalid_argument("cross_facet: invalid facet");
  Cell cell{c.canonical(), {facet}};
  Cell flipped = flip_bracket(cell, facet);
  return {flipped.chamber, flipped.brackets.front()};
}

std::pair<Cell, std::vector<Cell>> flip_canonicalize(const Cell& c_in) {
  Cell start = canonical_cell(c_in);
  check_cell(start);
  std::set<Cell> seen{start};
  std::vector<Cell> frontier{start};
  while (!frontier.empty()) {
    std::vector<Cell> next;
    for (const Cell& c : frontier)
      for (const Bracket& b : c.brackets) {
        Cell f = flip_bracket(c, b);
        if (seen.insert(f).second) next.push_back(f);
      }
    frontier = std::move(next);
  }
  std::vector<Cell> orbit(seen.begin(), seen.end());
  return {*seen.begin(), orbit};
}

// --- composition --------------------------------------------------------------

int operadic_arity(const Diagram& d) {
  int fixed = (d.low == EndKind::Fixed) + (d.circle && d.high == EndKind::Fixed);
  return d.pairs + fixed;
}

namespace {

bool plain_line(const Diagram& d) { return !d.symmetric && !d.circle; }

Diagram composite_shape(const Diagram& host, int new_pairs, EndKind low, EndKind high) {
  Diagram d = host;
  d.pairs = new_pairs;
  d.low = low;
  d.high = high;
  d.mult.clear();
  if (!d.symmetric) {
    d.rank = d.circle ? new_pairs - 1 : new_pairs - 1;
    d.family = d.circle ? FamilyTag::Atil : FamilyTag::A;
  } else {
    d.rank = new_pairs;
    if (!d.circle)
      d.family = low == EndKind::Fixed ? FamilyTag::B : FamilyTag::D;
    else if (low == EndKind::Fixed && high == EndKind::Fixed)
      d.family = FamilyTag::Ctil;
    else if (low == EndKind::Free && high == EndKind::Free)
      d.family = FamilyTag::Dtil;
    else
      d.family = FamilyTag::Btil;
  }
  return d;
}

// mirror a symmetric circle diagram end-for-end (used to keep Btil's fixed
// point at the low end)
Cell mirror_cell(const Cell& c) {
  const Diagram& d = c.chamber.shape;
  int n = d.pairs;
  Diagram nd = d;
  std::swap(nd.low, nd.high);
  Cell r;
  r.chamber.shape = nd;
  r.chamber.label.resize(n + 1);
  r.chamber.sign.assign(n + 1, +1);
  r.chamber.label[0] = 0;
  for (int s = 1; s <= n; ++s) {
    r.chamber.label[s] = c.chamber.label[n + 1 - s];
    r.chamber.sign[s] = c.chamber.sign[n + 1 - s];
  }
  for (Bracket b : c.brackets) {
    switch (b.kind) {
      case Bracket::Kind::Side: {
        Bracket m = Bracket::side(n + 1 - b.hi, n + 1 - b.lo, b.sign_hi, b.sign_lo);
        r.brackets.push_back(m);
        break;
      }
      case Bracket::Kind::AxisLow:
        r.brackets.push_back(Bracket::axis_high(b.count, b.branch));
        break;
      case Bracket::Kind::AxisHigh:
        r.brackets.push_back(Bracket::axis_low(b.count, b.branch));
        break;
    }
  }
  return r.sorted();
}

}  // namespace

Cell compose(const Cell& host, GraftSlot at, const Cell& guest) {
  check_cell(host);
  check_cell(guest);
  const Diagram& hd = host.chamber.shape;
  const Diagram& gd = guest.chamber.shape;
  if (hd.has_thick() || gd.has_thick())
    throw composition_error("composition is defined on plain diagrams");

  if (at.kind == GraftSlot::Kind::Particle) {
    if (!plain_line(gd))
      throw composition_error("particle grafts take a line diagram guest (family A)");
    if (at.label < 1 || at.label > hd.pairs)
      throw composition_error("graft label out of range");
    int k = gd.pairs;
    if (k == 1 && guest.brackets.empty()) return host;  // the operad unit

    Cell h = host;
    int p = 0;
    for (int s = 1; s <= hd.pairs; ++s)
      if (h.chamber.label[s] == at.label) p = s;
    // a reducible axis pair at the graft slot has no drawn-diagram graft
    for (size_t i = 0; i < h.brackets.size(); ++i)
      for (size_t j = i + 1; j < h.brackets.size(); ++j)
        if (h.brackets[i].kind == Bracket::Kind::Side &&
            h.brackets[j].kind == Bracket::Kind::Side &&
            h.brackets[i].lo == h.brackets[j].lo && h.brackets[i].hi == h.brackets[j].hi &&
            (h.brackets[i].lo == p || h.brackets[i].hi == p))
          throw composition_error("grafting into a reducible axis pair");
    // make every flag at the graft slot read off the display
    for (const Bracket& b : h.brackets) {
      if (b.kind == Bracket::Kind::Side &&
          ((b.lo == p && b.sign_lo < 0) || (b.hi == p && b.sign_hi < 0))) {
        toggle_slot_display(h, p);
        break;
      }
    }

    int sigma = hd.symmetric ? h.chamber.sign[p] : +1;
    Diagram nd = composite_shape(hd, hd.pairs + k - 1, hd.low, hd.high);
    nd.family = hd.family;
    nd.rank = hd.symmetric ? nd.pairs : nd.pairs - 1;
    Cell out;
    out.chamber.shape = nd;
    out.chamber.label.assign(nd.pairs + 1, 0);
    out.chamber.sign.assign(nd.pairs + 1, +1);
    auto relabel = [&](int l) { return l < at.label ? l : l + k - 1; };
    for (int s = 1; s <= hd.pairs; ++s) {
      int s2 = s < p ? s : s + k - 1;
      if (s == p) continue;
      out.chamber.label[s2] = relabel(h.chamber.label[s]);
      out.chamber.sign[s2] = hd.symmetric ? h.chamber.sign[s] : +1;
    }
    for (int t = 1; t <= k; ++t) {
      out.chamber.label[p + t - 1] = at.label + guest.chamber.label[t] - 1;
      out.chamber.sign[p + t - 1] = sigma;
    }
    for (Bracket b : h.brackets) {
      if (b.kind == Bracket::Kind::Side) {
        if (b.lo > p) b.lo += k - 1;
        if (b.hi >= p) b.hi += k - 1;
      } else if (b.kind == Bracket::Kind::AxisLow) {
        if (b.count >= p) b.count += k - 1;
        b.hi = b.count;
      } else {
        if (p >= hd.pairs - b.count + 1) b.count += k - 1;
      }
      out.brackets.push_back(b);
    }
    for (Bracket b : guest.brackets) {
      b.lo += p - 1;
      b.hi += p - 1;
      out.brackets.push_back(b);
    }
    out.brackets.push_back(Bracket::side(p, p + k - 1));
    return canonical_cell(out);
  }

  // fixed-particle graft
  bool at_low = at.kind == GraftSlot::Kind::FixedLow;
  EndKind hosted = at_low ? hd.low : (hd.circle ? hd.high : EndKind::Open);
  if (!hd.symmetric || hosted != EndKind::Fixed)
    throw composition_error("host has no fixed particle at that end");
  if (!gd.symmetric || gd.circle)
    throw composition_error("fixed grafts take a symmetric line guest (family B or D)");
  Cell h = at_low ? host : mirror_cell(host);
  int k = gd.pairs;
  Diagram nd = composite_shape(h.chamber.shape, hd.pairs + k, gd.low,
                               h.chamber.shape.high);
  Cell out;
  out.chamber.shape = nd;
  out.chamber.label.assign(nd.pairs + 1, 0);
  out.chamber.sign.assign(nd.pairs + 1, +1);
  for (int t = 1; t <= k; ++t) {
    out.chamber.label[t] = guest.chamber.label[t];
    out.chamber.sign[t] = guest.chamber.sign[t];
  }
  for (int s = 1; s <= hd.pairs; ++s) {
    out.chamber.label[s + k] = h.chamber.label[s] + k;
    out.chamber.sign[s + k] = h.chamber.sign[s];
  }
  for (Bracket b : h.brackets) {
    switch (b.kind) {
      case Bracket::Kind::Side:
        b.lo += k;
        b.hi += k;
        break;
      case Bracket::Kind::AxisLow:
        b.count += k;
        b.hi = b.count;
        break;
      case Bracket::Kind::AxisHigh:
        break;  // anchored at the high end
    }
    out.brackets.push_back(b);
  }
  for (Bracket b : guest.brackets) out.brackets.push_back(b);  // slots 1..k keep place
  out.brackets.push_back(Bracket::axis_low(k));
  Cell res = canonical_cell(out);
  check_cell(res);
  return res;
}

Decomposition decompose(const Cell& c_in) {
  Cell c = canonical_cell(c_in);
  check_cell(c);
  const Diagram& d = c.chamber.shape;
  int n = d.pairs;
  Decomposition out;

  auto span = [&](const Bracket& b) -> std::pair<int, int> {
    return bracket_span(n, b);
  };
  // outermost brackets; of an equal-span reducible pair keep both
  std::vector<Bracket> outer;
  for (const Bracket& b : c.brackets) {
    bool inside = false;
    auto [blo, bhi] = span(b);
    for (const Bracket& x : c.brackets) {
      if (x == b) continue;
      auto [xlo, xhi] = span(x);
      if (blo >= xlo && bhi <= xhi && !(blo == xlo && bhi == xhi)) inside = true;
    }
    if (!inside) outer.push_back(b);
  }
  // the base keeps one particle per outermost block
  // (an equal-span pair shares a block and decomposes no further here)
  std::vector<char> consumed(n + 2, 0);
  std::sort(outer.begin(), outer.end(),
            [&](const Bracket& a, const Bracket& b) { return span(a) < span(b); });

  struct Block {
    int lo, hi;
    std::vector<Bracket> members;
  };
  std::vector<Block> blocks;
  for (const Bracket& b : outer) {
    auto [lo, hi] = span(b);
    if (!blocks.empty() && blocks.back().lo == lo && blocks.back().hi == hi)
      blocks.back().members.push_back(b);
    else
      blocks.push_back({lo, hi, {b}});
  }

  Diagram base_shape = d;
  Cell base;
  std::vector<int> base_label, base_sign;
  base_label.push_back(0);
  base_sign.push_back(+1);
  int low_fixed_from_guest = 0, high_fixed_from_guest = 0;
  EndKind base_low = d.low, base_high = d.high;

  size_t bi = 0;
  int s = 1;
  std::vector<Decomposition::Part> parts;
  while (s <= n) {
    if (bi < blocks.size() && blocks[bi].lo == s) {
      const Block& blk = blocks[bi];
      const Bracket& b = blk.members.front();
      if (blk.members.size() > 1) {
        // reducible sign pair: not a single drawn bracket; keep both brackets
        // as guests of one axis-style block around the free end
        Decomposition::Part part;
        part.at = b.kind == Bracket::Kind::Side && b.lo == 1 ? GraftSlot::fixed_low()
                                                             : GraftSlot::fixed_high();
        // guest: the two-pair D cell carrying both brackets
        Diagram gshape = composite_shape(d, 2, EndKind::Free, EndKind::Open);
        gshape.circle = false;
        gshape.family = FamilyTag::D;
        gshape.rank = 2;
        Cell g;
        g.chamber.shape = gshape;
        g.chamber.label = {0, 0, 0};
        g.chamber.sign = {+1, +1, +1};
        bool at_low_end = part.at.kind == GraftSlot::Kind::FixedLow;
        for (int t = 0; t < 2; ++t) {
          int from = at_low_end ? s + t : blk.hi - t;
          g.chamber.label[t + 1] = t + 1;
          g.chamber.sign[t + 1] = c.chamber.sign[from];
          part.embed.push_back({c.chamber.label[from], c.chamber.sign[from]});
        }
        g.brackets = {Bracket::side(1, 2, +1, +1), Bracket::side(1, 2, -1, +1)};
        part.guest = g.sorted();
        parts.push_back(part);
        if (at_low_end) { base_low = EndKind::Fixed; low_fixed_from_guest = 1; }
        else { base_high = EndKind::Fixed; high_fixed_from_guest = 1; }
        s = blk.hi + 1;
        ++bi;
        continue;
      }
      Decomposition::Part part;
      int len = blk.hi - blk.lo + 1;
      if (b.kind == Bracket::Kind::Side) {
        // guest: line diagram of the displayed content (rep-adjusted)
        Cell rep = c;
        Bracket bb = b;
        if (bb.sign_lo < 0) { toggle_slot_display(rep, bb.lo); bb.sign_lo = +1; }
        if (bb.sign_hi < 0) { toggle_slot_display(rep, bb.hi); bb.sign_hi = +1; }
        Diagram gshape;
        gshape.family = FamilyTag::A;
        gshape.rank = len - 1;
        gshape.pairs = len;
        Cell g;
        g.chamber.shape = gshape;
        g.chamber.label.assign(len + 1, 0);
        g.chamber.sign.assign(len + 1, +1);
        std::vector<std::pair<int, int>> content;
        for (int t = 0; t < len; ++t)
          content.push_back({rep.chamber.label[s + t], rep.chamber.sign[s + t]});
        std::vector<int> order(len);
        std::iota(order.begin(), order.end(), 0);
        // guest labels by displayed order of the original labels
        std::vector<int> sorted_labels;
        for (auto& pr : content) sorted_labels.push_back(pr.first);
        std::sort(sorted_labels.begin(), sorted_labels.end());
        for (int t = 0; t < len; ++t) {
          int rankpos = static_cast<int>(
              std::find(sorted_labels.begin(), sorted_labels.end(), content[t].first) -
              sorted_labels.begin());
          g.chamber.label[t + 1] = rankpos + 1;
        }
        for (const Bracket& x : rep.brackets)
          if (!(x == bb) && x.kind == Bracket::Kind::Side && x.lo >= s && x.hi <= blk.hi)
            g.brackets.push_back(Bracket::side(x.lo - s + 1, x.hi - s + 1));
        part.at = GraftSlot::particle(0);  // filled below via embed
        part.guest = g.sorted();
        part.embed = content;
        parts.push_back(part);
      } else {
        // axis bracket: guest is the symmetric content at that end
        bool at_low_end = b.kind == Bracket::Kind::AxisLow;
        Cell rep = c;
        Bracket bb = b;
        if (bb.branch < 0) {
          toggle_slot_display(rep, at_low_end ? n : 1);
          bb.branch = +1;
        }
        EndKind point = at_low_end ? d.low : d.high;
        Diagram gshape;
        gshape.symmetric = true;
        gshape.circle = false;
        gshape.low = point;
        gshape.high = EndKind::Open;
        gshape.family = point == EndKind::Fixed ? FamilyTag::B : FamilyTag::D;
        gshape.pairs = len;
        gshape.rank = len;
        Cell g;
        g.chamber.shape = gshape;
        g.chamber.label.assign(len + 1, 0);
        g.chamber.sign.assign(len + 1, +1);
        for (int t = 0; t < len; ++t) {
          int from = at_low_end ? s + t : blk.hi - t;
          g.chamber.sign[t + 1] = rep.chamber.sign[from];
          part.embed.push_back({rep.chamber.label[from], rep.chamber.sign[from]});
        }
        std::vector<int> sorted_labels;
        for (auto& pr : part.embed) sorted_labels.push_back(pr.first);
        std::sort(sorted_labels.begin(), sorted_labels.end());
        for (int t = 0; t < len; ++t)
          g.chamber.label[t + 1] =
              static_cast<int>(std::find(sorted_labels.begin(), sorted_labels.end(),
                                         part.embed[t].first) -
                               sorted_labels.begin()) +
              1;
        for (const Bracket& x : rep.brackets) {
          if (x == bb) continue;
          auto [xlo, xhi] = span(x);
          if (xlo < s || xhi > blk.hi) continue;
          if (x.kind == Bracket::Kind::Side) {
            if (at_low_end)
              g.brackets.push_back(Bracket::side(x.lo - s + 1, x.hi - s + 1,
                                                 x.sign_lo, +1));
            else
              g.brackets.push_back(Bracket::side(blk.hi - x.hi + 1, blk.hi - x.lo + 1,
                                                 x.sign_hi, +1));
          } else {
            g.brackets.push_back(Bracket::axis_low(x.count));
          }
        }
        part.at = at_low_end ? GraftSlot::fixed_low() : GraftSlot::fixed_high();
        part.guest = g.sorted();
        parts.push_back(part);
        if (at_low_end) { base_low = EndKind::Fixed; low_fixed_from_guest = 1; }
        else { base_high = EndKind::Fixed; high_fixed_from_guest = 1; }
      }
      s = blk.hi + 1;
      ++bi;
      continue;
    }
    base_label.push_back(c.chamber.label[s]);
    base_sign.push_back(d.symmetric ? c.chamber.sign[s] : +1);
    ++s;
  }
  (void)consumed;
  (void)low_fixed_from_guest;
  (void)high_fixed_from_guest;

  // base chamber: collapsed blocks become single particles (side blocks) or
  // fixed particles (axis blocks, which vanish from the pair list)
  int base_pairs = static_cast<int>(base_label.size()) - 1;
  for (auto& part : parts)
    if (part.at.kind == GraftSlot::Kind::Particle) ++base_pairs;
  Diagram bshape = d;
  bshape.pairs = base_pairs;
  bshape.low = base_low;
  bshape.high = base_high;
  bshape.mult.clear();
  bshape = composite_shape(bshape, base_pairs, base_low, base_high);
  if (!d.symmetric) {
    bshape.family = d.family;
    bshape.rank = base_pairs - 1;
  }

  Cell base_cell;
  base_cell.chamber.shape = bshape;
  base_cell.chamber.label.assign(base_pairs + 1, 0);
  base_cell.chamber.sign.assign(base_pairs + 1, +1);

  // interleave loose particles with collapsed side blocks in slot order,
  // using fresh labels 1..base_pairs by first appearance of their smallest
  // original label
  struct BaseSlot {
    int orig_smallest;
    int sign;
    int part_index;  // -1 for a loose particle
  };
  std::vector<BaseSlot> base_slots;
  {
    size_t bj = 0;
    int t = 1;
    size_t loose = 1;
    int spos = 1;
    while (spos <= n) {
      if (bj < blocks.size() && blocks[bj].lo == spos) {
        const Block& blk = blocks[bj];
        bool is_side = blk.members.size() == 1 &&
                       blk.members.front().kind == Bracket::Kind::Side;
        if (is_side) {
          int smallest = c.chamber.label[spos];
          for (int q = spos; q <= blk.hi; ++q)
            smallest = std::min(smallest, c.chamber.label[q]);
          int pi = 0;
          for (size_t z = 0; z < parts.size(); ++z)
            if (parts[z].at.kind == GraftSlot::Kind::Particle &&
                parts[z].embed.front().first == c.chamber.label[spos] &&
                parts[z].embed.size() ==
                    static_cast<size_t>(blk.hi - blk.lo + 1))
              pi = static_cast<int>(z);
          base_slots.push_back({smallest, c.chamber.sign[spos], pi});
        }
        spos = blk.hi + 1;
        ++bj;
        ++t;
        continue;
      }
      base_slots.push_back({c.chamber.label[spos], d.symmetric ? c.chamber.sign[spos] : +1, -1});
      ++spos;
      ++loose;
    }
  }
  std::vector<int> order_labels;
  for (auto& bs : base_slots) order_labels.push_back(bs.orig_smallest);
  std::vector<int> sorted_ol = order_labels;
  std::sort(sorted_ol.begin(), sorted_ol.end());
  for (size_t i = 0; i < base_slots.size(); ++i) {
    int fresh = static_cast<int>(std::find(sorted_ol.begin(), sorted_ol.end(),
                                           base_slots[i].orig_smallest) -
                                 sorted_ol.begin()) +
                1;
    base_cell.chamber.label[i + 1] = fresh;
    base_cell.chamber.sign[i + 1] = base_slots[i].sign;
    if (base_slots[i].part_index >= 0)
      parts[base_slots[i].part_index].at = GraftSlot::particle(fresh);
  }
  out.base = canonical_cell(base_cell);
  out.parts = std::move(parts);
  return out;
}

namespace {

// splice with explicit signed-label embedding (inverse of decompose)
Cell splice(const Cell& host, const Decomposition::Part& part) {
  const Cell& g = part.guest;
  int k = g.chamber.shape.pairs;
  const Diagram& hd = host.chamber.shape;

  if (part.at.kind == GraftSlot::Kind::Particle) {
    Cell h = host;
    int p = 0;
    for (int s = 1; s <= hd.pairs; ++s)
      if (h.chamber.label[s] == part.at.label) p = s;
    if (p == 0) throw composition_error("splice: label not found");
    Diagram nd = composite_shape(hd, hd.pairs + k - 1, hd.low, hd.high);
    nd.family = hd.family;
    nd.rank = hd.symmetric ? nd.pairs : nd.pairs - 1;
    Cell out;
    out.chamber.shape = nd;
    out.chamber.label.assign(nd.pairs + 1, 0);
    out.chamber.sign.assign(nd.pairs + 1, +1);
    // old labels keep identity except the grafted one disappears; embedded
    // labels flow in from the part
    for (int s = 1; s <= hd.pairs; ++s) {
      if (s == p) continue;
      int s2 = s < p ? s : s + k - 1;
      out.chamber.label[s2] = h.chamber.label[s];
      out.chamber.sign[s2] = h.chamber.sign[s];
    }
    for (int t = 1; t <= k; ++t) {
      // guest slot t holds guest-label g.label[t]; its original identity is
      // embed[t-1]
      out.chamber.label[p + t - 1] = part.embed[t - 1].first;
      out.chamber.sign[p + t - 1] = part.embed[t - 1].second;
    }
    for (Bracket b : h.brackets) {
      if (b.kind == Bracket::Kind::Side) {
        if (b.lo > p) b.lo += k - 1;
        if (b.hi >= p) b.hi += k - 1;
      } else if (b.kind == Bracket::Kind::AxisLow) {
        if (b.count >= p) b.count += k - 1;
        b.hi = b.count;
      } else if (b.kind == Bracket::Kind::AxisHigh) {
        if (p >= hd.pairs - b.count + 1) b.count += k - 1;
      }
      out.brackets.push_back(b);
    }
    for (Bracket b : g.brackets) {
      b.lo += p - 1;
      b.hi += p - 1;
      out.brackets.push_back(b);
    }
    out.brackets.push_back(Bracket::side(p, p + k - 1));
    return out.sorted();
  }

  bool at_low = part.at.kind == GraftSlot::Kind::FixedLow;
  const Diagram& gd = g.chamber.shape;
  Diagram nd = composite_shape(hd, hd.pairs + k,
                               at_low ? gd.low : hd.low,
                               at_low ? hd.high : gd.low);
  if (!at_low) nd.high = gd.low;
  Cell out;
  out.chamber.shape = nd;
  out.chamber.label.assign(nd.pairs + 1, 0);
  out.chamber.sign.assign(nd.pairs + 1, +1);
  bool sign_pair = g.brackets.size() == 2 && g.brackets.front().kind == Bracket::Kind::Side;
  if (at_low) {
    for (int t = 1; t <= k; ++t) {
      out.chamber.label[t] = part.embed[t - 1].first;
      out.chamber.sign[t] = part.embed[t - 1].second;
    }
    for (int s = 1; s <= hd.pairs; ++s) {
      out.chamber.label[s + k] = host.chamber.label[s];
      out.chamber.sign[s + k] = host.chamber.sign[s];
    }
    for (Bracket b : host.brackets) {
      if (b.kind == Bracket::Kind::Side) { b.lo += k; b.hi += k; }
      else if (b.kind == Bracket::Kind::AxisLow) { b.count += k; b.hi = b.count; }
      out.brackets.push_back(b);
    }
    if (sign_pair) {
      out.brackets.push_back(Bracket::side(1, 2, +1, +1));
      out.brackets.push_back(Bracket::side(1, 2, -1, +1));
    } else {
      for (Bracket b : g.brackets) {
        if (b.kind == Bracket::Kind::Side) out.brackets.push_back(b);
        else out.brackets.push_back(Bracket::axis_low(b.count));
      }
      out.brackets.push_back(Bracket::axis_low(k));
    }
  } else {
    int m = hd.pairs;
    for (int s = 1; s <= m; ++s) {
      out.chamber.label[s] = host.chamber.label[s];
      out.chamber.sign[s] = host.chamber.sign[s];
    }
    for (int t = 1; t <= k; ++t) {
      out.chamber.label[m + t] = part.embed[t - 1].first;
      out.chamber.sign[m + t] = part.embed[t - 1].second;
    }
    for (Bracket b : host.brackets) out.brackets.push_back(b);
    if (sign_pair) {
      int n2 = nd.pairs;
      out.brackets.push_back(Bracket::side(n2 - 1, n2, +1, +1));
      out.brackets.push_back(Bracket::side(n2 - 1, n2, +1, -1));
    } else {
      for (Bracket b : g.brackets) {
        if (b.kind == Bracket::Kind::Side)
          out.brackets.push_back(Bracket::side(nd.pairs - b.hi + 1, nd.pairs - b.lo + 1,
                                               +1, b.sign_lo));
        else
          out.brackets.push_back(Bracket::axis_high(b.count));
      }
      out.brackets.push_back(Bracket::axis_high(k));
    }
  }
  // guest labels were embedded verbatim; relabel 1..N in increasing order
  std::vector<int> labs(out.chamber.label.begin() + 1, out.chamber.label.end());
  std::vector<int> sorted_labs = labs;
  std::sort(sorted_labs.begin(), sorted_labs.end());
  for (int s = 1; s <= nd.pairs; ++s)
    out.chamber.label[s] =
        static_cast<int>(std::find(sorted_labs.begin(), sorted_labs.end(),
                                   out.chamber.label[s]) -
                         sorted_labs.begin()) +
        1;
  return out.sorted();
}

}  // namespace

Cell recompose(const Decomposition& dec) {
  Cell cur = dec.base;
  // fixed grafts first restore the symmetric ends, then particle grafts from
  // the largest label down so earlier labels stay stable
  std::vector<Decomposition::Part> parts = dec.parts;
  std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    auto rank = [](const Decomposition::Part& p) {
      return p.at.kind == GraftSlot::Kind::Particle ? 1 : 0;
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a.at.label > b.at.label;
  });
  for (const auto& part : parts) {
    if (part.at.kind == GraftSlot::Kind::Particle) {
      cur = splice(cur, part);
    } else {
      cur = splice(cur, part);
    }
  }
  return canonical_cell(cur);
}

ArityReport operad_arity_check(const Cell& host,
                               const std::vector<std::pair<GraftSlot, Cell>>& guests) {
  ArityReport rep;
  int m = static_cast<int>(guests.size());
  rep.n_star = operadic_arity(host.chamber.shape) - m;
  rep.k_star = static_cast<int>(host.brackets.size()) + m;
  for (const auto& [slot, g] : guests) {
    rep.n_star += operadic_arity(g.chamber.shape);
    rep.k_star += static_cast<int>(g.brackets.size());
  }
  Cell cur = host;
  try {
    // graft labels refer to the original host; apply descending so earlier
    // labels keep their positions
    std::vector<std::pair<GraftSlot, Cell>> gs = guests;
    std::stable_sort(gs.begin(), gs.end(), [](const auto& a, const auto& b) {
      auto key = [](const GraftSlot& s) {
        return s.kind == GraftSlot::Kind::Particle ? s.label : 1000 + static_cast<int>(s.kind);
      };
      return key(a.first) > key(b.first);
    });
    for (const auto& [slot, g] : gs) cur = compose(cur, slot, g);
  } catch (const composition_error& e) {
    rep.ok = false;
    rep.detail = e.what();
    return rep;
  }
  rep.n_actual = operadic_arity(cur.chamber.shape);
  rep.k_actual = static_cast<int>(cur.brackets.size());
  rep.ok = rep.n_actual == rep.n_star && rep.k_actual == rep.k_star;
  if (!rep.ok) {
    std::ostringstream os;
    os << "arity mismatch: predicted (" << rep.n_star << "," << rep.k_star
       << ") actual (" << rep.n_actual << "," << rep.k_actual << ")";
    rep.detail = os.str();
  }
  return rep;
}

}  // namespace coxmod
