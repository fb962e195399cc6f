#pragma once

// Sigma-conjugacy classes as (Newton vector, kappa class) pairs, the finite
// poset B(G,{mu}) of neutrally acceptable classes, and two independent ways
// to produce it: a direct candidate generator driven by breakpoint
// integrality, and a brute-force oracle that walks the mu-admissible subset
// of the extended affine Weyl group and takes Newton points. The two must
// agree; tests and the CLI enforce that.
//
// Newton vectors are normalized so the identity element is the zero class:
// the drift of the twist itself (nu_tau) is subtracted. All pairings against
// orbit weights are insensitive to that central shift, while dominance
// comparisons against mu-diamond require it.

#include "bgmu/datum.hpp"

namespace bgmu {

struct SigmaClass {
  Vec nu;  // dominant, sigma0-invariant, identity class = 0
  KappaValue kappa;
};

// Element of the extended affine Weyl group split as (affine Weyl) x Omega.
struct AffineWeylElement {
  Vec translation;
  Mat finite;
  OmegaElement omega_part;

  Aff aff() const { return Aff{translation, finite}; }
};

struct BGMuPoset {
  // Sorted by descending pairing with 2 rho, ties broken lexicographically,
  // so the generic class comes first and the basic class last.
  std::vector<SigmaClass> elements;
  int max_index = -1;
  int basic_index = -1;
  int indec_index = -1;  // largest Hodge-Newton indecomposable element

  int size() const { return static_cast<int>(elements.size()); }
  const SigmaClass& max() const { return elements.at(max_index); }
  const SigmaClass& basic() const { return elements.at(basic_index); }
  const SigmaClass& indec() const { return elements.at(indec_index); }

  // Index of the element with this Newton vector, or -1.
  int index_of(const Vec& nu) const;
};

// The kappa class shared by every element of B(G,{mu}): the class of mu
// shifted by the twist translation.
KappaValue kappa_target(const CoxeterDatum& d);

// Newton point and kappa of the class of w: iterate the affine map
// w followed by the twisted diagram action until the linear part closes up,
// average the translation, dominantize, and subtract the identity drift.
SigmaClass newton_point(const CoxeterDatum& d, const Aff& w);
SigmaClass newton_point(const CoxeterDatum& d, const AffineWeylElement& w);

// Union of Bruhat lower sets of the translations by the Weyl orbit of mu,
// inside the coset of the extended group determined by mu. Deterministic
// order.
std::vector<AffineWeylElement> admissible_set(const CoxeterDatum& d);

// Candidate-generation enumeration of B(G,{mu}): dominant sigma0-invariant
// nu <= mu-diamond whose pairing with every orbit weight off its wall set is
// congruent to the reference pairing mod Z, with the central part forced by
// the kappa target.
BGMuPoset enumerate_bg_mu(const CoxeterDatum& d);

// Independent oracle: Newton points of the admissible set, deduplicated.
BGMuPoset oracle_bg_mu(const CoxeterDatum& d);

// Validates nu as the Newton vector of a member of B(G,{mu}) (same tests the
// candidate generator applies) and wraps it; throws std::invalid_argument
// with the failing condition otherwise.
SigmaClass make_class(const CoxeterDatum& d, const Vec& nu);

// Partial order: equal kappa and dominance of Newton vectors.
bool leq(const CoxeterDatum& d, const SigmaClass& c1, const SigmaClass& c2);

// Number of sigma0-orbits whose orbit-weight pairing with nu is not at an
// integral height relative to the reference cocharacter.
int defect(const CoxeterDatum& d, const SigmaClass& c);

bool is_basic(const CoxeterDatum& d, const SigmaClass& c);
bool is_superbasic(const CoxeterDatum& d, const SigmaClass& c);

// The maximal integral coweight class below nu with matching kappa,
// identified with the sigma0-invariant vector carrying its orbit-weight
// pairings and the central part of nu.
Vec best_integral_approx(const CoxeterDatum& d, const SigmaClass& c);

// Orbits where nu sits at an integral height ("lattice points" of the
// class).
std::vector<int> lattice_orbits(const CoxeterDatum& d, const SigmaClass& c);

// Distance in the ranked poset B(G): computed by the ceiling formula and
// checked against the closed form via rho and defects; the two disagreeing
// raises std::logic_error. Requires leq(c1, c2).
Int length(const CoxeterDatum& d, const SigmaClass& c1, const SigmaClass& c2);

// Smallest node set J such that (mu, c) decomposes through the standard
// Levi on J: the walls of nu together with every node whose fundamental
// weight separates nu from mu-diamond. Returns sorted node indices; the
// result is always sigma0-stable.
std::vector<int> minimal_levi_support(const CoxeterDatum& d, const SigmaClass& c);

}  // namespace bgmu
