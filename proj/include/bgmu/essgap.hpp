#pragma once

// Essential gap of a comparable pair of classes and its decomposition into
// lattice-point counts. Every identity between the counts is recomputed and
// asserted on each call, so a report that comes back without throwing has
// already survived the cross-checks.

#include "bgmu/bg.hpp"

namespace bgmu {

struct GapReport {
  Int ess_gap;          // two_rho_pairing - length, equals i + b1
  Int b1;               // lattice orbits of the lower class off the common set
  Int b2;               // lattice orbits of the upper class off the common set
  Int i;                // length - b2
  Int length;           // poset distance
  Int two_rho_pairing;  // pairing of nu2 - nu1 with the sum of positive roots
};

// Requires leq(c1, c2); throws std::invalid_argument otherwise and
// std::logic_error if any internal identity fails.
GapReport ess_gap(const CoxeterDatum& d, const SigmaClass& c1, const SigmaClass& c2);

// Gap from a poset member to the maximal class; the class must belong to the
// poset.
GapReport gap_to_max(const CoxeterDatum& d, const BGMuPoset& poset, const SigmaClass& c);

}  // namespace bgmu
