#include "CLI11.hpp"

#include "coxmod/buildingset.hpp"
#include "coxmod/euler.hpp"
#include "coxmod/fvector.hpp"
#include "coxmod/graph.hpp"
#include "coxmod/operad.hpp"
#include "coxmod/tilings.hpp"
#include "coxmod/tubing.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace coxmod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAnomaly = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string family = "A";
  int rank = 3;
  int thick = 0;
  std::string format = "text";
  int jobs = 0;
  long cap = 0;
};

int default_jobs() {
  if (const char* env = std::getenv("COXMOD_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

std::string join_ints(const FVector& f, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) os << sep;
    os << f[i];
  }
  return os.str();
}

Family opt_family(const Options& o) { return Family{parse_family(o.family), o.rank}; }

std::vector<int> thick_mults(int m) { return std::vector<int>(m, 2); }

int cmd_graph(const Options& o) {
  Graph g = build_coxeter_graph(opt_family(o));
  if (o.format == "json") {
    std::cout << g.to_json() << "\n";
  } else {
    std::cout << family_name(parse_family(o.family)) << o.rank << ": " << g.n
              << " nodes\n";
    for (auto [a, b] : g.edge_list()) {
      std::cout << "  " << a << " - " << b;
      auto it = g.labels.find({a, b});
      if (it != g.labels.end()) std::cout << "  (m=" << it->second << ")";
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_tubings(const Options& o, std::optional<int> k) {
  Graph g = build_coxeter_graph(opt_family(o));
  long emitted = 0;
  std::vector<Int> counts(g.n, 0);
  bool capped = false;
  enumerate_tubings(g, k, [&](const Tubing& t) {
    if (t.size() < static_cast<int>(counts.size())) counts[t.size()] += 1;
    if (o.cap > 0 && emitted >= o.cap) {
      capped = true;
      return;
    }
    ++emitted;
    if (o.format == "json")
      std::cout << t.to_json(g) << "\n";
    else if (o.format == "text")
      std::cout << t.to_json(g) << "\n";
  });
  if (o.format == "csv") {
    std::cout << "k,count\n";
    for (size_t i = 0; i < counts.size(); ++i) std::cout << i << "," << counts[i] << "\n";
  } else if (capped) {
    std::cout << "... (capped at " << o.cap << ")\n";
  }
  return kExitOk;
}

int cmd_fvector(const std::string& poly, int n, const std::string& method,
                const std::string& format) {
  PolytopeKind kind = parse_polytope(poly);
  bool do_formula = method != "exhaustive";
  bool do_exhaustive = method != "formula";
  FVector ff, fe;
  if (do_formula) ff = fvector_formula(kind, n);
  if (do_exhaustive) {
    Family gf;
    switch (kind) {
      case PolytopeKind::Assoc: gf = {FamilyTag::A, n}; break;
      case PolytopeKind::Cyclo: gf = {FamilyTag::Atil, n}; break;
      case PolytopeKind::DGraph: gf = {FamilyTag::D, n}; break;
      case PolytopeKind::DtilGraph: gf = {FamilyTag::Dtil, n}; break;
    }
    fe = fvector_exhaustive(build_coxeter_graph(gf));
  }
  std::string agree =
      (do_formula && do_exhaustive) ? (ff == fe ? "yes" : "NO") : "";
  const char* sep = format == "csv" ? "," : " ";
  if (format == "csv") std::cout << "polytope,n,method,agree,f\n";
  if (do_formula)
    std::cout << (format == "csv"
                      ? poly + "," + std::to_string(n) + ",formula," + agree + ","
                      : "formula:    ")
              << join_ints(ff, sep) << "\n";
  if (do_exhaustive)
    std::cout << (format == "csv"
                      ? poly + "," + std::to_string(n) + ",exhaustive," + agree + ","
                      : "exhaustive: ")
              << join_ints(fe, sep) << "\n";
  if (do_formula && do_exhaustive && ff != fe) return kExitAnomaly;
  return kExitOk;
}

int cmd_buildingset(const Options& o, bool check) {
  Family f = opt_family(o);
  auto rows = enumerate_building_set(f, o.thick);
  if (o.format == "csv")
    std::cout << "complex,dim,stabilizer,r,subspace,count\n";
  for (const auto& row : rows) {
    std::string complex_name = family_name(f.tag) + std::to_string(f.rank) +
                               (o.thick ? "," + std::to_string(o.thick) : "");
    if (o.format == "csv")
      std::cout << complex_name << "," << row.dim << "," << row.stab.str() << ","
                << row.r_in_block << "," << row.subspace << "," << row.count << "\n";
    else
      std::cout << "dim " << row.dim << "  stab " << row.stab.str() << "  r "
                << row.r_in_block << "  subspace " << row.subspace << "  count "
                << row.count << "\n";
  }
  if (!check) return kExitOk;
  auto cmp = building_check(f, o.thick);
  bool all_match = true;
  std::cout << (o.format == "csv" ? "row,k,r,census,formula,match,note\n"
                                  : "--- formula check ---\n");
  for (const auto& c : cmp) {
    all_match = all_match && c.match;
    if (o.format == "csv")
      std::cout << c.row << "," << c.k << "," << c.r << "," << c.census << ","
                << c.formula << "," << (c.match ? "yes" : "NO") << "," << c.note
                << "\n";
    else
      std::cout << c.row << " k=" << c.k << " r=" << c.r << ": census " << c.census
                << " vs formula " << c.formula << (c.match ? "" : "  << MISMATCH")
                << (c.note.empty() ? "" : "  [" + c.note + "]") << "\n";
  }
  return all_match ? kExitOk : kExitAnomaly;
}

int cmd_euler(const Options& o, const std::string& method) {
  Family f = opt_family(o);
  bool do_sum = method != "closed";
  bool do_closed = method != "sum";
  Int s;
  Rat c;
  if (do_sum) s = euler_sum(f);
  if (do_closed) c = euler_closed(f);
  if (o.format == "csv") {
    std::cout << "family,rank,method,chi\n";
    if (do_sum) std::cout << o.family << "," << o.rank << ",sum," << s << "\n";
    if (do_closed) std::cout << o.family << "," << o.rank << ",closed," << c << "\n";
  } else {
    if (do_sum) std::cout << "sum:    " << s << "\n";
    if (do_closed) std::cout << "closed: " << c << "\n";
  }
  if (do_sum && do_closed) {
    bool agree = Rat(s) == c;
    if (o.format != "csv") std::cout << (agree ? "agree" : "DISAGREE") << "\n";
    return agree ? kExitOk : kExitAnomaly;
  }
  return kExitOk;
}

int cmd_verify(int max_rank, const std::string& format, int jobs) {
  std::vector<EulerReport> reports;
  if (jobs > 1) {
    std::vector<std::future<std::vector<EulerReport>>> futs;
    std::vector<FamilyTag> tags{FamilyTag::A, FamilyTag::B, FamilyTag::D,
                                FamilyTag::Atil, FamilyTag::Btil, FamilyTag::Ctil,
                                FamilyTag::Dtil};
    for (auto tag : tags)
      futs.push_back(std::async(std::launch::async, [tag, max_rank] {
        std::vector<EulerReport> part;
        for (int r = min_rank(tag); r <= max_rank; ++r) {
          Family f{tag, r};
          EulerReport rep;
          rep.family = f;
          rep.chambers = chamber_count(f);
          rep.chi_sum = euler_sum(f);
          rep.chi_closed = euler_closed(f);
          rep.agree = Rat(rep.chi_sum) == rep.chi_closed;
          part.push_back(rep);
        }
        return part;
      }));
    for (auto& fu : futs) {
      auto part = fu.get();
      reports.insert(reports.end(), part.begin(), part.end());
    }
  } else {
    reports = verify_closed_forms(max_rank);
  }
  bool anomaly = false;
  if (format == "csv") std::cout << "family,rank,chambers,chi_sum,chi_closed,agree\n";
  for (const auto& rep : reports) {
    anomaly = anomaly || !rep.agree;
    if (format == "csv")
      std::cout << family_name(rep.family.tag) << "," << rep.family.rank << ","
                << rep.chambers << "," << rep.chi_sum << "," << rep.chi_closed << ","
                << (rep.agree ? "yes" : "NO") << "\n";
    else
      std::cout << family_name(rep.family.tag) << rep.family.rank << ": sum "
                << rep.chi_sum << ", closed " << rep.chi_closed
                << (rep.agree ? "" : "  << ANOMALY") << "\n";
  }
  if (anomaly)
    std::cerr << "anomaly: a printed closed form disagrees with the tiling sum "
                 "(known for Dtilde at even ranks)\n";
  return anomaly ? kExitAnomaly : kExitOk;
}

Chamber parse_chamber(const Diagram& d, const std::string& spec) {
  Chamber c = Chamber::fundamental(d);
  if (spec.empty()) return c;
  std::istringstream is(spec);
  std::string tok;
  int s = 1;
  while (std::getline(is, tok, ',')) {
    if (s > d.pairs) throw std::invalid_argument("chamber spec too long");
    int v = std::stoi(tok);
    c.label[s] = std::abs(v);
    c.sign[s] = v < 0 ? -1 : +1;
    ++s;
  }
  if (s != d.pairs + 1) throw std::invalid_argument("chamber spec too short");
  return c.canonical();
}

Bracket parse_bracket(const std::string& spec) {
  // side:lo,hi[,slo,shi] | axislow:j[,branch] | axishigh:j[,branch]
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad bracket spec");
  std::string kind = spec.substr(0, colon);
  std::vector<int> args;
  std::istringstream is(spec.substr(colon + 1));
  std::string tok;
  while (std::getline(is, tok, ',')) args.push_back(std::stoi(tok));
  if (kind == "side") {
    if (args.size() < 2) throw std::invalid_argument("side:lo,hi[,slo,shi]");
    return Bracket::side(args[0], args[1], args.size() > 2 ? args[2] : +1,
                         args.size() > 3 ? args[3] : +1);
  }
  if (kind == "axislow")
    return Bracket::axis_low(args.at(0), args.size() > 1 ? args[1] : 0);
  if (kind == "axishigh")
    return Bracket::axis_high(args.at(0), args.size() > 1 ? args[1] : 0);
  throw std::invalid_argument("bracket kind must be side, axislow or axishigh");
}

int cmd_glue(const Options& o, const std::string& chamber_spec,
             const std::string& facet_spec) {
  Family f = opt_family(o);
  Diagram d = make_diagram(f, thick_mults(o.thick));
  Chamber c = parse_chamber(d, chamber_spec);
  Bracket b = parse_bracket(facet_spec);
  Chamber other = adjacent_chamber(c, b);
  auto [canon, orbit] = flip_canonicalize(make_cell(c, {b}));
  std::cout << "chamber:  " << c.render() << "\n";
  std::cout << "adjacent: " << other.render() << "\n";
  std::cout << "face orbit size " << orbit.size() << ":\n";
  for (const auto& cell : orbit) std::cout << "  " << cell.render() << "\n";
  return kExitOk;
}

int cmd_faces(const Options& o) {
  Family f = opt_family(o);
  TileAssignment ta = tile_graph(f);
  std::cout << "tile of " << family_name(f.tag) << o.rank << ": "
            << classify_graph(ta.tile).str() << " (dim " << ta.tile_dimension
            << ")\n";
  for (Mask t : all_tubes(ta.tile)) {
    auto factors = classify_face_factors(ta.tile, Tubing{{t}});
    std::cout << "facet " << Tubing{{t}}.to_json(ta.tile) << " = ";
    for (size_t i = 0; i < factors.size(); ++i)
      std::cout << (i ? " x " : "") << factors[i].str();
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_atlas(int max_rank, const std::string& format) {
  auto atlas = special_graph_atlas(max_rank);
  if (format == "json") {
    std::cout << "[";
    for (size_t i = 0; i < atlas.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "{\"name\":\"" << atlas[i].label.str() << "\",\"graph\":"
                << atlas[i].witness.to_json() << ",\"first_seen\":\""
                << atlas[i].first_seen << "\"}";
    }
    std::cout << "]\n";
  } else {
    for (const auto& e : atlas)
      std::cout << e.label.str() << "  nodes=" << e.witness.n << "  from "
                << e.first_seen << "\n";
  }
  return kExitOk;
}

int cmd_operad_check(int max_rank, int instances, unsigned seed);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-associahedra, particle configurations, and blown-up "
               "Coxeter complexes"};
  app.require_subcommand(1);

  Options o;
  o.jobs = default_jobs();

  auto add_common = [&](CLI::App* sub, bool family_opts = true) {
    if (family_opts) {
      sub->add_option("--family", o.family,
                      "family: A, B, D, Atilde, Btilde, Ctilde, Dtilde");
      sub->add_option("--rank", o.rank, "rank n");
      sub->add_option("--thick", o.thick, "thick particles m (D/Btilde/Dtilde)");
    }
    sub->add_option("--format", o.format, "text, csv or json");
    sub->add_option("--jobs", o.jobs, "parallelism degree");
    sub->add_option("--cap", o.cap, "enumeration cap");
  };

  auto* g = app.add_subcommand("graph", "emit a family Coxeter graph");
  add_common(g);

  std::optional<int> tub_k;
  auto* tub = app.add_subcommand("tubings", "enumerate tubings of a family graph");
  add_common(tub);
  int tub_k_val = -1;
  tub->add_option("--k", tub_k_val, "restrict to k-tubings");

  std::string fv_poly = "assoc", fv_method = "both";
  int fv_n = 3;
  auto* fv = app.add_subcommand("fvector", "f-vectors of the tiling polytopes");
  fv->add_option("--polytope", fv_poly, "assoc, cyclo, D or Dtilde");
  fv->add_option("--n", fv_n, "index n");
  fv->add_option("--method", fv_method, "formula, exhaustive or both");
  fv->add_option("--format", o.format, "text or csv");

  bool bs_check = false;
  auto* bs = app.add_subcommand("buildingset", "minimal building set census");
  add_common(bs);
  bs->add_flag("--check", bs_check, "compare against the printed enumerations");

  std::string eu_method = "both";
  auto* eu = app.add_subcommand("euler", "Euler characteristics of the blown-up complexes");
  add_common(eu);
  eu->add_option("--method", eu_method, "sum, closed or both");

  int verify_max = 6;
  auto* ver = app.add_subcommand("verify", "closed forms against tiling sums");
  ver->add_option("--max-rank", verify_max, "largest rank per family");
  ver->add_option("--format", o.format, "text or csv");
  ver->add_option("--jobs", o.jobs, "parallelism degree");

  std::string glue_chamber, glue_facet = "side:1,2";
  auto* gl = app.add_subcommand("glue", "adjacent chamber across a facet");
  add_common(gl);
  gl->add_option("--chamber", glue_chamber, "signed labels by slot, e.g. 2,-1,3");
  gl->add_option("--facet", glue_facet,
                 "side:lo,hi[,slo,shi] | axislow:j[,branch] | axishigh:j[,branch]");

  auto* fc = app.add_subcommand("faces", "facet factor decompositions of a tile");
  add_common(fc);

  int atlas_max = 7;
  auto* at = app.add_subcommand("atlas", "derived special-graph catalog");
  at->add_option("--max-rank", atlas_max, "scan tiles up to this rank");
  at->add_option("--format", o.format, "text or json");

  int oc_max = 4, oc_instances = 1000;
  unsigned oc_seed = 20240816;
  auto* oc = app.add_subcommand("operad-check", "composition law suite");
  oc->add_option("--max-rank", oc_max, "largest rank in the exhaustive laws");
  oc->add_option("--instances", oc_instances, "random composition trees");
  oc->add_option("--seed", oc_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g->parsed()) return cmd_graph(o);
    if (tub->parsed())
      return cmd_tubings(o, tub_k_val >= 0 ? std::optional<int>(tub_k_val)
                                           : std::nullopt);
    if (fv->parsed()) return cmd_fvector(fv_poly, fv_n, fv_method, o.format);
    if (bs->parsed()) return cmd_buildingset(o, bs_check);
    if (eu->parsed()) return cmd_euler(o, eu_method);
    if (ver->parsed()) return cmd_verify(verify_max, o.format, o.jobs);
    if (gl->parsed()) return cmd_glue(o, glue_chamber, glue_facet);
    if (fc->parsed()) return cmd_faces(o);
    if (at->parsed()) return cmd_atlas(atlas_max, o.format);
    if (oc->parsed()) return cmd_operad_check(oc_max, oc_instances, oc_seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnomaly;
  }
  return kExitUsage;
}

namespace {

int cmd_operad_check(int max_rank, int instances, unsigned seed) {
  // exhaustive round-trips and unit/associativity laws at small ranks, then
  // randomized arity bookkeeping
  std::mt19937 rng(seed);
  long checked = 0, failed = 0;

  auto report = [&](bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      std::cout << "FAIL " << what << "\n";
    }
  };

  // round-trip decompose/recompose on every cell of every family
  for (auto tag : {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                   FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil})
    for (int r = min_rank(tag); r <= std::min(max_rank, 4); ++r) {
      Diagram d = make_diagram({tag, r});
      Chamber fund = Chamber::fundamental(d);
      enumerate_bracketings(d, [&](const std::vector<Bracket>& bs) {
        Cell c = make_cell(fund, bs);
        Cell back = recompose(decompose(c));
        report(back == c, "round trip " + family_name(tag) + std::to_string(r));
      });
    }

  // associativity of line grafts, exhaustively at small arities
  for (int nh = 2; nh <= 4; ++nh)
    for (int ng = 2; ng <= 3; ++ng)
      for (int nk = 2; nk <= 3; ++nk)
        for (int i = 1; i <= nh; ++i) {
          Cell H{Chamber::fundamental(make_diagram({FamilyTag::A, nh - 1})), {}};
          Cell G{Chamber::fundamental(make_diagram({FamilyTag::A, ng - 1})), {}};
          Cell K{Chamber::fundamental(make_diagram({FamilyTag::A, nk - 1})), {}};
          for (int j = 1; j <= ng; ++j) {
            Cell lhs = compose(compose(H, GraftSlot::particle(i), G),
                               GraftSlot::particle(i + j - 1), K);
            Cell rhs = compose(H, GraftSlot::particle(i),
                               compose(G, GraftSlot::particle(j), K));
            report(lhs == rhs, "associativity nested");
          }
          for (int j = 1; j <= nh; ++j) {
            if (j == i) continue;
            int i2 = i < j ? i : i + ng - 1;
            int j2 = j < i ? j : j + ng - 1;
            Cell lhs = compose(compose(H, GraftSlot::particle(i), G),
                               GraftSlot::particle(j2), K);
            Cell rhs = compose(compose(H, GraftSlot::particle(j), K),
                               GraftSlot::particle(i2), G);
            report(lhs == rhs, "associativity parallel");
          }
        }

  // randomized arity identities over the admissible host/guest shapes
  std::uniform_int_distribution<int> pick_host(0, 6), pick_rank(1, 4);
  for (int t = 0; t < instances; ++t) {
    FamilyTag tags[] = {FamilyTag::A, FamilyTag::B, FamilyTag::D, FamilyTag::Atil,
                        FamilyTag::Btil, FamilyTag::Ctil, FamilyTag::Dtil};
    FamilyTag htag = tags[pick_host(rng)];
    int hr = std::max(min_rank(htag), pick_rank(rng));
    Diagram hd = make_diagram({htag, hr});
    Cell host{Chamber::fundamental(hd), {}};
    std::vector<std::pair<GraftSlot, Cell>> guests;
    int count = 1 + (rng() % 2);
    std::set<int> used;
    for (int q = 0; q < count; ++q) {
      if (hd.symmetric && hd.low == EndKind::Fixed && (rng() % 3 == 0)) {
        Diagram gd = make_diagram({rng() % 2 ? FamilyTag::B : FamilyTag::D,
                                   std::max(3, static_cast<int>(rng() % 3) + 2)});
        guests.push_back({GraftSlot::fixed_low(), Cell{Chamber::fundamental(gd), {}}});
        break;  // one fixed particle at the low end
      }
      int label = 1 + static_cast<int>(rng() % hd.pairs);
      if (!used.insert(label).second) continue;
      Diagram gd = make_diagram({FamilyTag::A, 1 + static_cast<int>(rng() % 3)});
      guests.push_back({GraftSlot::particle(label), Cell{Chamber::fundamental(gd), {}}});
    }
    auto rep = operad_arity_check(host, guests);
    report(rep.ok, "arity " + rep.detail);
  }

  // forbidden grafts raise typed errors
  try {
    Cell A3{Chamber::fundamental(make_diagram({FamilyTag::A, 3})), {}};
    Cell D3{Chamber::fundamental(make_diagram({FamilyTag::D, 3})), {}};
    compose(A3, GraftSlot::particle(1), D3);
    report(false, "forbidden graft accepted");
  } catch (const composition_error&) {
    report(true, "");
  }

  std::cout << "operad checks: " << checked << " run, " << failed << " failed\n";
  return failed ? kExitAnomaly : kExitOk;
}

}  // namespace
