#pragma once

// A Coxeter datum bundles a root datum with a chamber-preserving diagram
// twist sigma0, a length-zero element tau of the extended affine Weyl
// group, and a dominant lattice cocharacter mu. It also carries the two
// abelian quotients everything downstream keys classes by: lattice/Q and
// lattice/(Q + (1-sigma0)lattice).

#include "bgmu/smith.hpp"
#include "bgmu/weyl.hpp"

namespace bgmu {

struct OmegaElement {
  Aff a;                   // affine action on the coweight apartment
  std::vector<Int> coset;  // class in lattice/Q
  std::string name;        // "id", "tau[2]", "rot(3)", products
};

struct KappaValue {
  std::vector<Int> v;
  bool operator==(const KappaValue& o) const { return v == o.v; }
  bool operator!=(const KappaValue& o) const { return v != o.v; }
  bool operator<(const KappaValue& o) const { return v < o.v; }
};

struct TauSpec {
  enum Kind { Identity, Node, Rotate, Explicit };
  Kind kind = Identity;
  int index = 0;
  Aff aff;

  static TauSpec identity() { return TauSpec{}; }
  static TauSpec node(int k) {  // 1-based simple node
    TauSpec t;
    t.kind = Node;
    t.index = k;
    return t;
  }
  static TauSpec rotate(int s) {  // GL mode cyclic power
    TauSpec t;
    t.kind = Rotate;
    t.index = s;
    return t;
  }
  static TauSpec explicit_aff(const Aff& a) {
    TauSpec t;
    t.kind = Explicit;
    t.aff = a;
    return t;
  }
};

struct CoxeterDatum {
  RootDatum rd;
  std::vector<int> sigma0;  // node permutation, 0-based images
  Mat sigma0_mat;
  int sigma0_order = 1;
  OmegaElement tau;
  Vec mu;

  std::vector<std::vector<int>> orbits;  // sigma0 orbits on nodes, each sorted
  std::vector<int> orbit_of;
  Mat omega_orbit;  // dim x n_orbits, summed fundamental weights per orbit
  Vec mu_diamond;
  Vec nu_tau;            // Newton drift of the identity element; central
  AbelianQuotient pq;    // lattice / Q
  AbelianQuotient kq;    // lattice / (Q + (1 - sigma0) lattice)
  std::string label;

  int n_orbits() const { return static_cast<int>(orbits.size()); }
  Aff sigma_aff() const { return aff_mul(tau.a, aff_linear(sigma0_mat)); }

  // Average over the sigma0 orbit of v.
  Vec diamond(const Vec& v) const;

  KappaValue kappa_of(const Vec& lattice_vec) const;
  Vec kappa_rep(const KappaValue& k) const;  // some lattice representative
  std::string kappa_str(const KappaValue& k) const { return kq.class_str(k.v); }

  // Image of the base alcove's origin under the twisted affine action.
  Vec sigma_zero_point() const { return tau.a.t; }

  // Dominant reference cocharacter for breakpoint tests: the dominant
  // representative of mu + tau-translation, which lies in the kappa target
  // class of the mu-admissible set.
  Vec lambda_ref() const;

  bool is_quasi_split() const;
};

std::vector<int> identity_perm(const RootDatum& rd);

// Per-component diagram flip: reversal for A, swap of the fork for D,
// the involution for E6, identity elsewhere. In GL mode the matrix acts
// as minus-reversal so the lattice is preserved.
std::vector<int> flip_perm(const RootDatum& rd);

CoxeterDatum make_coxeter_datum(const RootDatum& rd, const std::vector<int>& sigma0_perm,
                                const TauSpec& tau, const Vec& mu);

// Variant with an explicit twist matrix (used for Levi data, where the
// chamber-normalized twist is a product of reflections with the parent's
// twist and does not come from a bare node permutation of the realization).
CoxeterDatum make_coxeter_datum_mat(const RootDatum& rd, const Mat& sigma0_mat,
                                    const TauSpec& tau, const Vec& mu);

OmegaElement omega_identity(const CoxeterDatum& d);
OmegaElement omega_from_node(const CoxeterDatum& d, int node_1based);
OmegaElement omega_rotate(const CoxeterDatum& d, int power);
OmegaElement omega_mul(const CoxeterDatum& d, const OmegaElement& x, const OmegaElement& y);

// All length-zero classes of an adjoint datum: products of per-component
// minuscule-node elements, closed under multiplication. Identity first,
// then breadth-first by product length; deterministic.
std::vector<OmegaElement> enumerate_omega(const CoxeterDatum& d);

// Rebuild with a different tau or mu, revalidating everything.
CoxeterDatum with_tau(const CoxeterDatum& d, const OmegaElement& tau);
CoxeterDatum with_mu(const CoxeterDatum& d, const Vec& mu);

// All Cartan-preserving node permutations (diagram automorphisms).
std::vector<std::vector<int>> diagram_automorphisms(const RootDatum& rd);

}  // namespace bgmu
