#pragma once

// Decision procedure for zero-dimensionality: mu-ordinariness of the top
// class, extended Lubin-Tate detection on the minimal Levi (two independent
// routes that must agree), per-class verdicts with a dimension lower bound,
// saturation of the zero-dimensional locus, the table of non-quasi-split
// mu-ordinary wall conditions, and the no-gap scan for twisted type A.

#include <string>
#include <vector>

#include "bgmu/essgap.hpp"
#include "bgmu/hodgenewton.hpp"

namespace bgmu {

struct FactorSummary {
  std::string type;      // component labels joined with "x", e.g. "A1xA1"
  int d = 1;             // components exchanged cyclically by the twist
  bool is_A_type = false;
  std::string mu_label;  // "central", "w1", "wn", or "other"
  bool fully_hn_dec = false;
  bool basic_superbasic = false;
  bool pass = false;     // factor has the extended Lubin-Tate shape
};

struct Verdict {
  SigmaClass class_id;
  bool cond2 = false;  // extended Lubin-Tate after Levi restriction
  bool cond3 = false;  // top class mu-ordinary and essential gap zero
  bool agree = false;  // cond2 == cond3
  std::vector<int> minimal_J;
  std::vector<FactorSummary> levi_summary;
  Int dim_lower_bound = 0;
};

// The wall criterion on orbits meeting the complement of I(mu_diamond),
// cross-checked against nu(max) == mu_diamond; disagreement is a
// std::logic_error.
bool is_mu_ordinary_max(const CoxeterDatum& d, const BGMuPoset& poset);

// Per-factor records behind extended Lubin-Tate detection. Each noncentral
// factor is decided twice: by diagram shape (type A components, trivial
// induced automorphism after d steps, mu equal to a chain-end fundamental
// coweight on exactly one component) and by computation (fully HN
// decomposable and superbasic basic class); the routes must agree (else
// std::logic_error).
std::vector<FactorSummary> lubin_tate_factors(const CoxeterDatum& d);

bool is_extended_lubin_tate(const CoxeterDatum& d);
bool is_extended_lubin_tate(const LeviDatum& levi);

// One verdict per class, in poset order.
std::vector<Verdict> classify(const CoxeterDatum& d);

// True iff the set of classes with cond3 true is upward closed.
bool saturation_check(const CoxeterDatum& d, const std::vector<Verdict>& verdicts);

struct TableEntry {
  std::string label;           // datum description
  std::string sigma0_name;     // "id", "flip", or 1-based images "[2,1,4,3]"
  std::string tau_name;        // length-zero element
  std::vector<int> bad_nodes;  // 1-based nodes forced into I(mu_diamond)
  int row = 0;                 // matched table row, 0 = ordinary for all mu
  bool row_matches = false;
};

// Sweep of adjoint types A..D (plus E6, E7) up to the rank bound, all
// diagram twists, all nontrivial length-zero tau: for each datum the exact
// wall condition for mu-ordinariness, matched against the known table rows
// up to diagram automorphism.
std::vector<TableEntry> mu_ordinary_table(int max_rank);

// Exhaustive check that no class strictly below the mu-ordinary top of a
// cyclically twisted type A datum has essential gap zero to it. The datum
// must be twisted (i not divisible by n) and mu-ordinary (else
// std::invalid_argument).
bool no_gap_in_twisted_A(int n, int i, const Vec& mu);

}  // namespace bgmu
