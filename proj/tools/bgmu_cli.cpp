// bgmu command line tool.
//
// Subcommands: enumerate, classify, essgap, hasse, polygon, table, examples.
// Inputs are datum JSON files (see --help of each subcommand and README.md
// for the format); outputs are TSV, JSON, DOT, SVG, or ASCII, all
// byte-deterministic for a fixed input.
//
// Exit codes: 0 success, 1 failed check or internal disagreement (both
// values are printed), 2 malformed input.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bgmu/bg.hpp"
#include "bgmu/classifier.hpp"
#include "bgmu/essgap.hpp"
#include "bgmu/hodgenewton.hpp"
#include "bgmu/io.hpp"
#include "bgmu/polygon.hpp"

namespace {

using namespace bgmu;
using nlohmann::json;

std::string int_str(const Int& v) { return v.get_str(); }

std::string join_nodes(const std::vector<int>& nodes, int offset) {
  if (nodes.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    out += (k ? "," : "") + std::to_string(nodes[k] + offset);
  return out;
}

json nu_json(const Vec& nu) {
  json arr = json::array();
  for (int k = 0; k < nu.size(); ++k) arr.push_back(rat_str(nu(k)));
  return arr;
}

std::string factor_label(const FactorSummary& f) {
  std::string base = f.d > 1 ? "Res" + std::to_string(f.d) + "(" + f.type + ")" : f.type;
  return base + ":" + f.mu_label;
}

std::string levi_label(const std::vector<FactorSummary>& fs) {
  if (fs.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < fs.size(); ++k) out += (k ? " x " : "") + factor_label(fs[k]);
  return out;
}

// A selector is either a class index or a full Newton vector written as
// comma-separated exact rationals ("1/2,0,0,-1/2").
int resolve_selector(const CoxeterDatum& d, const BGMuPoset& pos, const std::string& sel) {
  if (sel.find(',') != std::string::npos || sel.find('/') != std::string::npos) {
    std::vector<Rat> vals;
    std::stringstream ss(sel);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        Rat r(tok);
        r.canonicalize();
        vals.push_back(r);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("selector: '" + tok + "' is not an exact rational");
      }
    }
    if (static_cast<int>(vals.size()) != d.rd.dim)
      throw std::invalid_argument("selector: expected " + std::to_string(d.rd.dim) +
                                  " coordinates, got " + std::to_string(vals.size()));
    Vec nu(d.rd.dim);
    for (int k = 0; k < d.rd.dim; ++k) nu(k) = vals[static_cast<std::size_t>(k)];
    int idx = pos.index_of(nu);
    if (idx < 0) throw std::invalid_argument("selector: no class has nu = " + vec_str(nu));
    return idx;
  }
  int idx = 0;
  try {
    std::size_t used = 0;
    idx = std::stoi(sel, &used);
    if (used != sel.size()) throw std::invalid_argument(sel);
  } catch (const std::exception&) {
    throw std::invalid_argument("selector: '" + sel + "' is neither an index nor a nu vector");
  }
  if (idx < 0 || idx >= pos.size())
    throw std::invalid_argument("selector: index " + std::to_string(idx) + " out of range 0.." +
                                std::to_string(pos.size() - 1));
  return idx;
}

// ----- enumerate ---------------------------------------------------------

int run_enumerate(const std::string& path, const std::string& fmt, bool use_oracle, bool check) {
  CoxeterDatum d = parse_datum_file(path);
  BGMuPoset pos = use_oracle ? oracle_bg_mu(d) : enumerate_bg_mu(d);
  if (check) {
    BGMuPoset other = use_oracle ? enumerate_bg_mu(d) : oracle_bg_mu(d);
    bool same = pos.size() == other.size();
    for (int k = 0; same && k < pos.size(); ++k)
      same = vec_eq(pos.elements[static_cast<std::size_t>(k)].nu,
                    other.elements[static_cast<std::size_t>(k)].nu);
    if (!same) {
      std::cerr << "disagreement: candidate enumeration and oracle differ\n";
      std::cerr << "candidate (" << (use_oracle ? other.size() : pos.size()) << "):\n";
      const BGMuPoset& cand = use_oracle ? other : pos;
      const BGMuPoset& orac = use_oracle ? pos : other;
      for (const SigmaClass& c : cand.elements) std::cerr << "  " << vec_str(c.nu) << "\n";
      std::cerr << "oracle (" << orac.size() << "):\n";
      for (const SigmaClass& c : orac.elements) std::cerr << "  " << vec_str(c.nu) << "\n";
      return 1;
    }
    std::cerr << "# check: enumeration and oracle agree on " << pos.size() << " classes\n";
  }
  if (fmt == "tsv") {
    std::cout << "index\tnu\tkappa\tdefect\tbasic\tsuperbasic\tlattice_orbits\n";
    for (int k = 0; k < pos.size(); ++k) {
      const SigmaClass& c = pos.elements[static_cast<std::size_t>(k)];
      std::cout << k << "\t" << vec_str(c.nu) << "\t" << d.kappa_str(c.kappa) << "\t"
                << defect(d, c) << "\t" << (is_basic(d, c) ? 1 : 0) << "\t"
                << (is_superbasic(d, c) ? 1 : 0) << "\t" << join_nodes(lattice_orbits(d, c), 0)
                << "\n";
    }
  } else {
    json out;
    out["datum"] = d.label;
    out["classes"] = json::array();
    for (int k = 0; k < pos.size(); ++k) {
      const SigmaClass& c = pos.elements[static_cast<std::size_t>(k)];
      json row;
      row["index"] = k;
      row["nu"] = nu_json(c.nu);
      row["kappa"] = d.kappa_str(c.kappa);
      row["defect"] = defect(d, c);
      row["basic"] = is_basic(d, c);
      row["superbasic"] = is_superbasic(d, c);
      row["lattice_orbits"] = lattice_orbits(d, c);
      out["classes"].push_back(row);
    }
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

// ----- classify ----------------------------------------------------------

int run_classify(const std::string& path, const std::string& fmt, bool check) {
  CoxeterDatum d = parse_datum_file(path);
  std::vector<Verdict> vs = classify(d);
  int agree = 0;
  for (const Verdict& v : vs)
    if (v.agree) ++agree;
  bool saturated = true;
  if (check) saturated = saturation_check(d, vs);
  if (fmt == "tsv") {
    std::cout << "index\tnu\tcond2\tcond3\tagree\tminimal_J\tlevi\tdim_lower_bound\n";
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const Verdict& v = vs[k];
      std::cout << k << "\t" << vec_str(v.class_id.nu) << "\t" << (v.cond2 ? 1 : 0) << "\t"
                << (v.cond3 ? 1 : 0) << "\t" << (v.agree ? 1 : 0) << "\t"
                << join_nodes(v.minimal_J, 1) << "\t" << levi_label(v.levi_summary) << "\t"
                << int_str(v.dim_lower_bound) << "\n";
    }
    std::cout << "# AGREE " << agree << "/" << vs.size() << "\n";
    if (check) std::cout << "# saturated " << (saturated ? 1 : 0) << "\n";
  } else {
    json out;
    out["datum"] = d.label;
    out["verdicts"] = json::array();
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const Verdict& v = vs[k];
      json row;
      row["index"] = k;
      row["nu"] = nu_json(v.class_id.nu);
      row["cond2"] = v.cond2;
      row["cond3"] = v.cond3;
      row["agree"] = v.agree;
      json mj = json::array();
      for (int node : v.minimal_J) mj.push_back(node + 1);
      row["minimal_J"] = mj;
      json levi = json::array();
      for (const FactorSummary& f : v.levi_summary) {
        json fac;
        fac["type"] = f.type;
        fac["d"] = f.d;
        fac["mu"] = f.mu_label;
        fac["pass"] = f.pass;
        levi.push_back(fac);
      }
      row["levi"] = levi;
      row["dim_lower_bound"] = int_str(v.dim_lower_bound);
      out["verdicts"].push_back(row);
    }
    out["all_agree"] = agree == static_cast<int>(vs.size());
    if (check) out["saturated"] = saturated;
    std::cout << out.dump(2) << "\n";
  }
  if (agree != static_cast<int>(vs.size())) {
    std::cerr << "disagreement: " << (vs.size() - static_cast<std::size_t>(agree))
              << " classes have cond2 != cond3 (see rows above)\n";
    return 1;
  }
  if (check && !saturated) {
    std::cerr << "disagreement: zero-dimensional set is not upward closed\n";
    return 1;
  }
  return 0;
}

// ----- essgap ------------------------------------------------------------

int run_essgap(const std::string& path, const std::string& from_s, const std::string& to_s,
               const std::string& fmt, bool check) {
  CoxeterDatum d = parse_datum_file(path);
  BGMuPoset pos = enumerate_bg_mu(d);
  int from = resolve_selector(d, pos, from_s);
  int to = resolve_selector(d, pos, to_s);
  const SigmaClass& lower = pos.elements[static_cast<std::size_t>(from)];
  const SigmaClass& upper = pos.elements[static_cast<std::size_t>(to)];
  GapReport g = ess_gap(d, lower, upper);
  Rat big_a = Rat(g.two_rho_pairing) / 2;
  if (check && d.rd.gl_mode) {
    PickCounts pc = pick_counts(shifted_polygon(d, lower), shifted_polygon(d, upper));
    if (pc.i != g.i || pc.b1 != g.b1 || pc.b2 != g.b2 || pc.A != big_a) {
      std::cerr << "disagreement: polygon counts (A=" << rat_str(pc.A) << " i=" << int_str(pc.i)
                << " b1=" << int_str(pc.b1) << " b2=" << int_str(pc.b2)
                << ") vs gap decomposition (A=" << rat_str(big_a) << " i=" << int_str(g.i)
                << " b1=" << int_str(g.b1) << " b2=" << int_str(g.b2) << ")\n";
      return 1;
    }
    std::cerr << "# check: polygon counts agree with the gap decomposition\n";
  }
  if (fmt == "tsv") {
    std::cout << "from\tto\tlength\ttwo_rho\tess_gap\ti\tb1\tb2\tA\n";
    std::cout << from << "\t" << to << "\t" << int_str(g.length) << "\t"
              << int_str(g.two_rho_pairing) << "\t" << int_str(g.ess_gap) << "\t" << int_str(g.i)
              << "\t" << int_str(g.b1) << "\t" << int_str(g.b2) << "\t" << rat_str(big_a) << "\n";
  } else {
    json out;
    out["datum"] = d.label;
    out["from"] = from;
    out["to"] = to;
    out["from_nu"] = nu_json(lower.nu);
    out["to_nu"] = nu_json(upper.nu);
    out["length"] = int_str(g.length);
    out["two_rho"] = int_str(g.two_rho_pairing);
    out["ess_gap"] = int_str(g.ess_gap);
    out["i"] = int_str(g.i);
    out["b1"] = int_str(g.b1);
    out["b2"] = int_str(g.b2);
    out["A"] = rat_str(big_a);
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

// ----- hasse -------------------------------------------------------------

int run_hasse(const std::string& path, const std::string& fmt) {
  CoxeterDatum d = parse_datum_file(path);
  BGMuPoset pos = enumerate_bg_mu(d);
  const SigmaClass& bas = pos.basic();
  std::vector<long> rank(static_cast<std::size_t>(pos.size()), 0);
  long max_rank = 0;
  for (int k = 0; k < pos.size(); ++k) {
    rank[static_cast<std::size_t>(k)] =
        length(d, bas, pos.elements[static_cast<std::size_t>(k)]).get_si();
    max_rank = std::max(max_rank, rank[static_cast<std::size_t>(k)]);
  }
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < pos.size(); ++a)
    for (int b = 0; b < pos.size(); ++b) {
      if (a == b) continue;
      const SigmaClass& ca = pos.elements[static_cast<std::size_t>(a)];
      const SigmaClass& cb = pos.elements[static_cast<std::size_t>(b)];
      if (leq(d, ca, cb) && !vec_eq(ca.nu, cb.nu) && length(d, ca, cb) == 1)
        covers.push_back({a, b});
    }
  std::sort(covers.begin(), covers.end());
  if (fmt == "dot") {
    std::cout << "digraph bgmu {\n";
    std::cout << "  rankdir=BT;\n";
    std::cout << "  node [shape=box fontname=\"monospace\"];\n";
    for (int k = 0; k < pos.size(); ++k)
      std::cout << "  n" << k << " [label=\"" << k << ": "
                << vec_str(pos.elements[static_cast<std::size_t>(k)].nu) << "\"];\n";
    for (long r = 0; r <= max_rank; ++r) {
      std::string group;
      for (int k = 0; k < pos.size(); ++k)
        if (rank[static_cast<std::size_t>(k)] == r) group += " n" + std::to_string(k) + ";";
      if (!group.empty()) std::cout << "  { rank=same;" << group << " }\n";
    }
    for (const auto& [a, b] : covers) std::cout << "  n" << a << " -> n" << b << ";\n";
    std::cout << "}\n";
  } else {
    json out;
    out["datum"] = d.label;
    out["nodes"] = json::array();
    for (int k = 0; k < pos.size(); ++k) {
      json row;
      row["index"] = k;
      row["nu"] = nu_json(pos.elements[static_cast<std::size_t>(k)].nu);
      row["rank"] = rank[static_cast<std::size_t>(k)];
      out["nodes"].push_back(row);
    }
    out["edges"] = json::array();
    for (const auto& [a, b] : covers) out["edges"].push_back(json::array({a, b}));
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

// ----- polygon -----------------------------------------------------------

int run_polygon(const std::string& path, const std::string& from_s, const std::string& to_s,
                const std::string& fmt) {
  CoxeterDatum d = parse_datum_file(path);
  BGMuPoset pos = enumerate_bg_mu(d);
  int from = from_s.empty() ? pos.basic_index : resolve_selector(d, pos, from_s);
  int to = to_s.empty() ? pos.max_index : resolve_selector(d, pos, to_s);
  std::vector<NewtonPolygon> polys;
  polys.push_back(shifted_polygon(d, pos.elements[static_cast<std::size_t>(from)]));
  if (to != from) polys.push_back(shifted_polygon(d, pos.elements[static_cast<std::size_t>(to)]));
  std::cout << render(polys, fmt);
  return 0;
}

// ----- table -------------------------------------------------------------

int run_table(int max_rank, const std::string& fmt) {
  std::vector<TableEntry> entries = mu_ordinary_table(max_rank);
  int matched = 0;
  for (const TableEntry& e : entries)
    if (e.row_matches) ++matched;
  if (fmt == "tsv") {
    std::cout << "type\tsigma0\ttau\tforced_nodes\trow\tmatched\n";
    for (const TableEntry& e : entries)
      std::cout << e.label << "\t" << e.sigma0_name << "\t" << e.tau_name << "\t"
                << join_nodes(e.bad_nodes, 0) << "\t" << e.row << "\t" << (e.row_matches ? 1 : 0)
                << "\n";
    std::cout << "# matched " << matched << "/" << entries.size() << "\n";
  } else {
    json out;
    out["max_rank"] = max_rank;
    out["entries"] = json::array();
    for (const TableEntry& e : entries) {
      json row;
      row["type"] = e.label;
      row["sigma0"] = e.sigma0_name;
      row["tau"] = e.tau_name;
      row["forced_nodes"] = e.bad_nodes;
      row["row"] = e.row;
      row["matched"] = e.row_matches;
      out["entries"].push_back(row);
    }
    out["all_matched"] = matched == static_cast<int>(entries.size());
    std::cout << out.dump(2) << "\n";
  }
  if (matched != static_cast<int>(entries.size())) {
    std::cerr << "disagreement: " << (entries.size() - static_cast<std::size_t>(matched))
              << " data match no known wall-condition row\n";
    return 1;
  }
  return 0;
}

// ----- examples ----------------------------------------------------------

Vec make_vec(std::initializer_list<Rat> xs) {
  Vec v(static_cast<int>(xs.size()));
  int k = 0;
  for (const Rat& x : xs) v(k++) = x;
  return v;
}

Vec gl_mu(std::initializer_list<long> xs) {
  Vec v(static_cast<int>(xs.size()));
  int k = 0;
  for (long x : xs) v(k++) = Rat(x);
  return v;
}

struct ExampleItem {
  std::string name;
  std::string (*fn)();  // empty string = pass, otherwise failure detail
};

#define EXPECT(cond)                                        \
  do {                                                      \
    if (!(cond)) return std::string("failed: ") + #cond;    \
  } while (0)

std::string ex_gl8_lattice_counts() {
  CoxeterDatum d =
      make_coxeter_datum(make_gl_datum(8), identity_perm(make_gl_datum(8)), TauSpec::identity(),
                         gl_mu({3, 1, 1, 1, 0, 0, 0, 0}));
  SigmaClass lower = make_class(
      d, make_vec({Rat(5, 4), Rat(5, 4), Rat(5, 4), Rat(5, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4),
                   Rat(1, 4)}));
  SigmaClass upper = make_class(
      d, make_vec({3, 1, Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), 0, 0}));
  GapReport g = ess_gap(d, lower, upper);
  EXPECT(g.length == 7);
  EXPECT(g.ess_gap == 3);
  EXPECT(g.i == 3);
  EXPECT(g.b1 == 0);
  EXPECT(g.b2 == 4);
  PickCounts pc = pick_counts(shifted_polygon(d, lower), shifted_polygon(d, upper));
  EXPECT(pc.A == 5);
  EXPECT(pc.i == 3);
  EXPECT(pc.b1 == 0);
  EXPECT(pc.b2 == 4);
  EXPECT(pc.common == 3);
  return "";
}

std::string ex_a3_flip_chain() {
  RootDatum rd = make_root_datum({{'A', 3}});
  CoxeterDatum d =
      make_coxeter_datum(rd, flip_perm(rd), TauSpec::identity(), Vec(rd.lattice.col(1)));
  BGMuPoset pos = enumerate_bg_mu(d);
  EXPECT(pos.size() == 3);
  EXPECT(vec_eq(pos.max().nu, make_vec({Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)})));
  int ib1 = pos.index_of(make_vec({Rat(1, 2), 0, 0, Rat(-1, 2)}));
  EXPECT(ib1 >= 0);
  const SigmaClass& b1 = pos.elements[static_cast<std::size_t>(ib1)];
  EXPECT(vec_eq(pos.basic().nu, Vec::Zero(4)));
  EXPECT(gap_to_max(d, pos, b1).ess_gap == 0);
  EXPECT(minimal_J(d, b1) == (std::vector<int>{1}));
  LeviDatum levi = build_levi_datum(d, {1});
  std::vector<FactorSummary> fs = lubin_tate_factors(levi.inner);
  EXPECT(fs.size() == 1);
  EXPECT(fs[0].type == "A1");
  EXPECT(fs[0].d == 1);
  EXPECT(fs[0].mu_label == "w1" || fs[0].mu_label == "wn");
  EXPECT(fs[0].pass);
  std::vector<Verdict> vs = classify(d);
  int zero_dim = 0;
  for (const Verdict& v : vs) {
    EXPECT(v.agree);
    if (v.cond3) ++zero_dim;
  }
  EXPECT(zero_dim == 2);  // the top class and the middle class
  EXPECT(gap_to_max(d, pos, pos.basic()).ess_gap == 2);
  return "";
}

std::string ex_a4_flip_chain() {
  RootDatum rd = make_root_datum({{'A', 4}});
  CoxeterDatum d =
      make_coxeter_datum(rd, flip_perm(rd), TauSpec::identity(), Vec(rd.lattice.col(0)));
  BGMuPoset pos = enumerate_bg_mu(d);
  EXPECT(pos.size() == 3);
  EXPECT(vec_eq(pos.max().nu, make_vec({Rat(1, 2), 0, 0, 0, Rat(-1, 2)})));
  int ib1 = pos.index_of(make_vec({Rat(1, 4), Rat(1, 4), 0, Rat(-1, 4), Rat(-1, 4)}));
  EXPECT(ib1 >= 0);
  const SigmaClass& b1 = pos.elements[static_cast<std::size_t>(ib1)];
  EXPECT(gap_to_max(d, pos, b1).ess_gap == 0);
  EXPECT(minimal_J(d, b1) == (std::vector<int>{0, 3}));
  LeviDatum levi = build_levi_datum(d, {0, 3});
  std::vector<FactorSummary> fs = lubin_tate_factors(levi.inner);
  EXPECT(fs.size() == 1);
  EXPECT(fs[0].type == "A1xA1");
  EXPECT(fs[0].d == 2);
  EXPECT(fs[0].mu_label == "w1" || fs[0].mu_label == "wn");
  EXPECT(fs[0].pass);
  std::vector<Verdict> vs = classify(d);
  int zero_dim = 0;
  for (const Verdict& v : vs) {
    EXPECT(v.agree);
    if (v.cond3) ++zero_dim;
  }
  EXPECT(zero_dim == 2);
  return "";
}

std::string ex_a5_rotation_flip_chain() {
  RootDatum rd = make_root_datum({{'A', 5}});
  CoxeterDatum d = make_coxeter_datum(rd, flip_perm(rd), TauSpec::node(1), Vec(rd.lattice.col(0)));
  BGMuPoset pos = enumerate_bg_mu(d);
  EXPECT(pos.size() == 3);
  EXPECT(vec_eq(pos.max().nu, make_vec({Rat(1, 2), 0, 0, 0, 0, Rat(-1, 2)})));
  int ib1 = pos.index_of(make_vec({Rat(1, 4), Rat(1, 4), 0, 0, Rat(-1, 4), Rat(-1, 4)}));
  EXPECT(ib1 >= 0);
  const SigmaClass& b1 = pos.elements[static_cast<std::size_t>(ib1)];
  EXPECT(gap_to_max(d, pos, b1).ess_gap == 0);
  EXPECT(minimal_J(d, b1) == (std::vector<int>{0, 2, 4}));
  LeviDatum levi = build_levi_datum(d, {0, 2, 4});
  std::vector<FactorSummary> fs = lubin_tate_factors(levi.inner);
  EXPECT(fs.size() == 2);
  int res_factors = 0, central_factors = 0;
  for (const FactorSummary& f : fs) {
    EXPECT(f.pass);
    if (f.d == 2) {
      ++res_factors;
      EXPECT(f.type == "A1xA1");
      EXPECT(f.mu_label == "w1" || f.mu_label == "wn");
    }
    if (f.d == 1) {
      ++central_factors;
      EXPECT(f.type == "A1");
      EXPECT(f.mu_label == "central");
    }
  }
  EXPECT(res_factors == 1 && central_factors == 1);
  std::vector<Verdict> vs = classify(d);
  int zero_dim = 0;
  for (const Verdict& v : vs) {
    EXPECT(v.agree);
    if (v.cond3) ++zero_dim;
  }
  EXPECT(zero_dim == 2);
  return "";
}

std::string run_d_rotation_chain(int n) {
  RootDatum rd = make_root_datum({{'D', n}});
  CoxeterDatum d = make_coxeter_datum(rd, identity_perm(rd), TauSpec::node(1), Vec(rd.lattice.col(0)));
  BGMuPoset pos = enumerate_bg_mu(d);
  EXPECT(pos.size() == n - 1);
  Vec top = Vec::Zero(n);
  top(0) = 1;
  EXPECT(vec_eq(pos.max().nu, top));
  EXPECT(vec_eq(pos.basic().nu, Vec::Zero(n)));
  std::vector<Verdict> vs = classify(d);
  int zero_dim = 0;
  for (const Verdict& v : vs) {
    EXPECT(v.agree);
    if (v.cond3) ++zero_dim;
  }
  EXPECT(zero_dim == n - 2);
  for (int i = 2; i <= n - 2; ++i) {
    Vec nu = Vec::Zero(n);
    for (int k = 0; k < i; ++k) nu(k) = Rat(1, i);
    int idx = pos.index_of(nu);
    EXPECT(idx >= 0);
    const SigmaClass& bi = pos.elements[static_cast<std::size_t>(idx)];
    EXPECT(gap_to_max(d, pos, bi).ess_gap == 0);
    std::vector<int> expect_j;
    for (int k = 0; k < n; ++k)
      if (k != i - 1) expect_j.push_back(k);
    EXPECT(minimal_J(d, bi) == expect_j);
    LeviDatum levi = build_levi_datum(d, expect_j);
    std::vector<FactorSummary> fs = lubin_tate_factors(levi.inner);
    int noncentral = 0;
    for (const FactorSummary& f : fs) {
      EXPECT(f.pass);
      if (f.mu_label != "central") {
        ++noncentral;
        EXPECT(f.type == "A" + std::to_string(i - 1));
        EXPECT(f.d == 1);
      }
    }
    EXPECT(noncentral == 1);
  }
  EXPECT(gap_to_max(d, pos, pos.basic()).ess_gap > 0);
  return "";
}

std::string ex_d5_rotation_chain() { return run_d_rotation_chain(5); }
std::string ex_d6_rotation_chain() { return run_d_rotation_chain(6); }
std::string ex_d7_rotation_chain() { return run_d_rotation_chain(7); }

std::string ex_gl4_zero_dim_set() {
  RootDatum rd = make_gl_datum(4);
  CoxeterDatum d = make_coxeter_datum(rd, identity_perm(rd), TauSpec::identity(),
                                      gl_mu({1, 1, 0, 0}));
  std::vector<Verdict> vs = classify(d);
  std::vector<Vec> expected = {
      make_vec({1, 1, 0, 0}),
      make_vec({1, Rat(1, 2), Rat(1, 2), 0}),
      make_vec({1, Rat(1, 3), Rat(1, 3), Rat(1, 3)}),
      make_vec({Rat(2, 3), Rat(2, 3), Rat(2, 3), 0}),
  };
  std::vector<const Verdict*> zero_dim;
  for (const Verdict& v : vs) {
    EXPECT(v.agree);
    if (v.cond3) zero_dim.push_back(&v);
  }
  EXPECT(zero_dim.size() == expected.size());
  for (const Vec& nu : expected) {
    bool found = false;
    for (const Verdict* v : zero_dim)
      if (vec_eq(v->class_id.nu, nu)) found = true;
    EXPECT(found);
  }
  EXPECT(saturation_check(d, vs));
  // Two minimal elements, so the zero-dimensional set has no unique minimum.
  int minimal = 0;
  for (const Verdict* v : zero_dim) {
    bool is_min = true;
    for (const Verdict* w : zero_dim)
      if (w != v && leq(d, w->class_id, v->class_id) && !vec_eq(w->class_id.nu, v->class_id.nu))
        is_min = false;
    if (is_min) ++minimal;
  }
  EXPECT(minimal == 2);
  return "";
}

std::string ex_gl5_levi_factors() {
  RootDatum rd = make_gl_datum(5);
  CoxeterDatum d = make_coxeter_datum(rd, identity_perm(rd), TauSpec::identity(),
                                      gl_mu({2, 1, 0, -1, -1}));
  BGMuPoset pos = enumerate_bg_mu(d);
  SigmaClass b = make_class(
      d, make_vec({Rat(3, 2), Rat(3, 2), Rat(-2, 3), Rat(-2, 3), Rat(-2, 3)}));
  GapReport g = gap_to_max(d, pos, b);
  EXPECT(g.i == 0);
  EXPECT(g.b1 == 0);
  std::vector<int> mj = minimal_J(d, b);
  EXPECT(mj == (std::vector<int>{0, 2, 3}));
  LeviDatum levi = build_levi_datum(d, mj);
  std::vector<FactorSummary> fs = lubin_tate_factors(levi.inner);
  EXPECT(fs.size() == 2);
  EXPECT(levi_label(fs) == "A1:w1 x A2:w1");
  for (const FactorSummary& f : fs) EXPECT(f.pass && f.d == 1);
  return "";
}

std::string ex_central_mu_single_class() {
  RootDatum rd = make_root_datum({{'A', 2}});
  CoxeterDatum d = make_coxeter_datum(rd, identity_perm(rd), TauSpec::identity(), Vec::Zero(3));
  BGMuPoset pos = enumerate_bg_mu(d);
  EXPECT(pos.size() == 1);
  EXPECT(pos.max_index == pos.basic_index);
  return "";
}

#undef EXPECT

int run_examples() {
  std::vector<ExampleItem> items = {
      {"gl8-lattice-counts", ex_gl8_lattice_counts},
      {"a3-flip-chain", ex_a3_flip_chain},
      {"a4-flip-chain", ex_a4_flip_chain},
      {"a5-rotation-flip-chain", ex_a5_rotation_flip_chain},
      {"d5-rotation-chain", ex_d5_rotation_chain},
      {"d6-rotation-chain", ex_d6_rotation_chain},
      {"d7-rotation-chain", ex_d7_rotation_chain},
      {"gl4-zero-dim-set", ex_gl4_zero_dim_set},
      {"gl5-levi-factors", ex_gl5_levi_factors},
      {"central-mu-single-class", ex_central_mu_single_class},
  };
  int failures = 0;
  for (const ExampleItem& item : items) {
    std::string detail;
    try {
      detail = item.fn();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "[PASS] " << item.name << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << item.name << " (" << detail << ")\n";
    }
  }
  std::cout << (failures == 0 ? "all examples passed" : "some examples FAILED") << " ("
            << (items.size() - static_cast<std::size_t>(failures)) << "/" << items.size()
            << ")\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bgmu: exact arithmetic for sigma-conjugacy class posets.\n"
      "Computes the neutrally acceptable classes B(G,{mu}) of a twisted\n"
      "Coxeter datum, essential gaps with their lattice-point decomposition,\n"
      "zero-dimensionality verdicts, Hasse diagrams, Newton polygons, and\n"
      "the mu-ordinary wall-condition table.\n\n"
      "Datum files are JSON objects with keys: type (\"A3\", \"B2xA1\",\n"
      "\"GL4\"), sigma0 (\"id\", \"flip\", or a 1-based image array), tau\n"
      "(node index, 0 for identity; {\"rotate\": i} in GL mode), mu (integer\n"
      "coordinates in the coweight-lattice basis, or a label like \"w2\").\n"
      "Exact values in output are decimal strings or fractions like 5/4."};
  app.require_subcommand(1);

  struct {
    std::string path, fmt = "tsv";
    bool oracle = false, check = false;
  } enu;
  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "List the classes of B(G,{mu}), one row per class, top first");
  c_enum->add_option("datum", enu.path, "datum JSON file")->required();
  c_enum->add_option("--format", enu.fmt, "tsv or json (default tsv)")
      ->check(CLI::IsMember({"tsv", "json"}));
  c_enum->add_flag("--oracle", enu.oracle, "enumerate via the admissible-set oracle instead");
  c_enum->add_flag("--check", enu.check, "also run the other enumeration and compare");
  c_enum->footer(
      "TSV columns: index, nu (exact fractions), kappa, defect, basic (0/1),\n"
      "superbasic (0/1), lattice_orbits (0-based orbit indices at integral\n"
      "height, or -).");

  struct {
    std::string path, fmt = "tsv";
    bool check = false;
  } cls;
  CLI::App* c_cls = app.add_subcommand(
      "classify", "Zero-dimensionality verdicts for every class, by two independent routes");
  c_cls->add_option("datum", cls.path, "datum JSON file")->required();
  c_cls->add_option("--format", cls.fmt, "tsv or json (default tsv)")
      ->check(CLI::IsMember({"tsv", "json"}));
  c_cls->add_flag("--check", cls.check, "also verify the zero-dim set is upward closed");
  c_cls->footer(
      "TSV columns: index, nu, cond2 (Levi factors are extended Lubin-Tate,\n"
      "0/1), cond3 (top class mu-ordinary and essential gap zero, 0/1),\n"
      "agree (0/1), minimal_J (1-based nodes, or -), levi (factor labels\n"
      "like Res2(A1xA1):w1), dim_lower_bound. A trailing '# AGREE k/n' line\n"
      "summarizes; any disagreement exits 1.");

  struct {
    std::string path, from, to, fmt = "tsv";
    bool check = false;
  } gap;
  CLI::App* c_gap = app.add_subcommand(
      "essgap", "Essential gap and lattice-point decomposition for one comparable pair");
  c_gap->add_option("datum", gap.path, "datum JSON file")->required();
  c_gap->add_option("--from", gap.from, "lower class: index or nu like 1/2,0,0,-1/2")->required();
  c_gap->add_option("--to", gap.to, "upper class: index or nu")->required();
  c_gap->add_option("--format", gap.fmt, "tsv or json (default tsv)")
      ->check(CLI::IsMember({"tsv", "json"}));
  c_gap->add_flag("--check", gap.check, "in GL mode, compare against Newton polygon counts");
  c_gap->footer(
      "TSV columns: from, to (class indices), length (poset distance),\n"
      "two_rho (pairing of the nu difference with the positive-root sum),\n"
      "ess_gap, i (interior lattice orbits), b1/b2 (boundary-only orbits of\n"
      "the lower/upper class), A = two_rho/2.");

  struct {
    std::string path, fmt = "dot";
  } has;
  CLI::App* c_has = app.add_subcommand("hasse", "Cover-relation diagram of the poset");
  c_has->add_option("datum", has.path, "datum JSON file")->required();
  c_has->add_option("--format", has.fmt, "dot or json (default dot)")
      ->check(CLI::IsMember({"dot", "json"}));
  c_has->footer(
      "DOT output ranks nodes by poset distance from the basic class\n"
      "(rankdir=BT), with one rank=same group per level and one edge per\n"
      "cover relation.");

  struct {
    std::string path, from, to, fmt = "svg";
  } pol;
  CLI::App* c_pol = app.add_subcommand(
      "polygon", "Render Newton polygons of two classes of a GL datum (drift shift included)");
  c_pol->add_option("datum", pol.path, "datum JSON file (GL mode only)")->required();
  c_pol->add_option("--from", pol.from, "lower class selector (default: basic)");
  c_pol->add_option("--to", pol.to, "upper class selector (default: top)");
  c_pol->add_option("--format", pol.fmt, "svg or ascii (default svg)")
      ->check(CLI::IsMember({"svg", "ascii"}));

  struct {
    int max_rank = 7;
    std::string fmt = "tsv";
  } tab;
  CLI::App* c_tab = app.add_subcommand(
      "table", "Wall conditions for mu-ordinariness of every twisted adjoint datum");
  c_tab->add_option("--max-rank", tab.max_rank, "sweep ranks 2..N (default 7)")
      ->check(CLI::Range(2, 8));
  c_tab->add_option("--format", tab.fmt, "tsv or json (default tsv)")
      ->check(CLI::IsMember({"tsv", "json"}));
  c_tab->footer(
      "TSV columns: type, sigma0, tau, forced_nodes (1-based nodes that must\n"
      "carry integral mu-pairings, or -), row (matched wall-condition row, 0\n"
      "= no condition), matched (0/1). Any unmatched datum exits 1.");

  CLI::App* c_exa = app.add_subcommand(
      "examples", "Run the built-in regression set and print PASS/FAIL per item");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_enum->parsed()) return run_enumerate(enu.path, enu.fmt, enu.oracle, enu.check);
    if (c_cls->parsed()) return run_classify(cls.path, cls.fmt, cls.check);
    if (c_gap->parsed()) return run_essgap(gap.path, gap.from, gap.to, gap.fmt, gap.check);
    if (c_has->parsed()) return run_hasse(has.path, has.fmt);
    if (c_pol->parsed()) return run_polygon(pol.path, pol.from, pol.to, pol.fmt);
    if (c_tab->parsed()) return run_table(tab.max_rank, tab.fmt);
    if (c_exa->parsed()) return run_examples();
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal disagreement: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
