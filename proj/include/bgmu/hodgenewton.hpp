#pragma once

// Levi restriction: decide when a class decomposes into a twist-stable
// standard Levi subsystem, build the induced twisted datum on that
// subsystem, and restrict classes to it. The induced datum lives in the
// same ambient coordinates, so restricted classes keep their Newton
// vectors verbatim.

#include <vector>

#include "bgmu/bg.hpp"

namespace bgmu {

struct LeviDatum {
  std::vector<int> J;      // defining node set, 0-based, sorted, twist-stable
  WeylElement z;           // transporter: conjugating the twisted action by
                           // z makes it fix the J-central regular point
  Aff tau_J;               // length-zero part of the conjugated action,
                           // relative to the parent's diagram twist
  Vec mu_P;                // z-image of mu, for reporting
  CoxeterDatum inner;      // twisted datum on the sub root system
  std::vector<int> nodes;  // inner column -> parent node
};

// Chamber-normalized twisted datum on a sub root system. psi must be an
// affine transformation whose linear part stabilizes the subsystem; a
// sub-Weyl correction turns the linear part into a diagram automorphism
// delta, and psi composed with the inverse of delta becomes the datum's
// length-zero tau.
CoxeterDatum make_twisted_sub_datum(const RootDatum& sub_rd, const Aff& psi, const Vec& mu);

// True when the class decomposes into the standard Levi on J: the walls of
// nu must lie in J and mu_diamond - nu must be a nonnegative combination
// of J-coroots. J must be sigma0-stable (else std::invalid_argument).
bool is_hn_decomposable(const CoxeterDatum& d, const SigmaClass& c, const std::vector<int>& J);

// Smallest J the class decomposes into: walls of nu together with the
// support of mu_diamond - nu. Always sigma0-stable.
std::vector<int> minimal_J(const CoxeterDatum& d, const SigmaClass& c);

// Unique maximum among the classes whose minimal J is the full node set.
// Recomputed from scratch and cross-checked against the poset's cached
// index.
SigmaClass indec_max(const CoxeterDatum& d, const BGMuPoset& poset);

// Induced twisted datum on the standard Levi of J. The conjugating element
// z is found by breadth-first search in length order; J must be
// sigma0-stable (else std::invalid_argument). Throws std::logic_error if
// no transporter exists or the induced datum disagrees with the parent on
// mu_diamond.
LeviDatum build_levi_datum(const CoxeterDatum& d, const std::vector<int>& J);

// The class of the Levi poset with the same Newton vector. Requires
// is_hn_decomposable for the Levi's J (else std::invalid_argument); a
// missing match in the Levi poset is a std::logic_error.
SigmaClass restrict_class(const CoxeterDatum& d, const LeviDatum& levi, const SigmaClass& c);

}  // namespace bgmu
