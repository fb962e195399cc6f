#pragma once

// Finite root systems realized in exact orthogonal coordinates. Roots and
// coweights share one ambient space, so the natural pairing is the plain
// dot product and reflections act by one orthogonal formula on both sides.
// Each classical type uses its standard orthonormal realization; E6 and E7
// live inside the E8 lattice.

#include "bgmu/rational.hpp"

#include <unordered_map>

namespace bgmu {

struct Component {
  char type = 'A';
  int rank = 0;
  std::vector<int> nodes;  // global simple-root indices in Bourbaki order
};

struct RootDatum {
  bool gl_mode = false;
  int rank = 0;  // number of simple roots
  int dim = 0;   // ambient dimension
  std::vector<Component> components;
  std::vector<int> comp_of;  // simple index -> component index

  Mat simple_roots;    // dim x rank
  Mat simple_coroots;  // dim x rank
  Mat weights;         // dim x rank, dot(simple_coroots_i, weights_j) = delta
  Mat coweights;       // dim x rank, dot(coweights_i, simple_roots_j) = delta
  Mat cartan;          // cartan(i,j) = dot(simple_coroots_i, simple_roots_j)
  Mat lattice;         // dim x lattice_rank, basis of the coweight lattice

  Mat pos_roots;    // dim x npos
  Mat pos_coroots;  // dim x npos
  IMat pos_coeffs;  // rank x npos, expansion of each positive root in simples
  std::vector<int> pos_comp;

  Vec two_rho;                    // sum of all positive roots
  std::vector<Vec> theta;         // per component: the dominant root
  std::vector<Vec> theta_coroot;  // its coroot

  int npos() const { return static_cast<int>(pos_roots.cols()); }

  // Sign and index lookup for root vectors: returns +1/-1 in *sign and the
  // positive-root index, or false if v is not a root.
  bool root_lookup(const Vec& v, int* index, int* sign) const;

 private:
  friend RootDatum finish_root_datum(RootDatum rd);
  std::unordered_map<std::string, int> root_index_;
};

// Adjoint datum: lattice is spanned by the fundamental coweights of each
// listed component. Types: A,B,C,D rank >= 1/2/2/3, E rank 6..8, F 4, G 2.
RootDatum make_root_datum(const std::vector<std::pair<char, int>>& types);

// A_{n-1} realized in R^n with coweight lattice Z^n.
RootDatum make_gl_datum(int n);

// Root datum spanned by a subset of the simple roots, kept inside the
// parent's ambient space and carrying the parent's cocharacter lattice.
// Columns are rearranged into Bourbaki order component by component; nodes
// maps the new column index back to the parent node it came from.
struct SubDatum {
  RootDatum rd;
  std::vector<int> nodes;
};
SubDatum make_sub_datum(const RootDatum& parent, const std::vector<int>& nodes);

inline Rat pairing(const Vec& a, const Vec& b) { return dot(a, b); }

// Reflection in the i-th simple root; one orthogonal map for both the root
// and the coweight side.
Vec reflect_simple(const RootDatum& rd, int i, const Vec& v);

// Reflection in an arbitrary root vector.
Vec reflect_root(const Vec& root, const Vec& v);
Mat reflect_root_matrix(int dim, const Vec& root);

bool is_dominant(const RootDatum& rd, const Vec& v);
bool is_dominant_on(const RootDatum& rd, const std::vector<int>& nodes, const Vec& v);

struct Dominantized {
  Vec v;                  // the dominant representative, v = w(input)
  Mat w;                  // the Weyl element applied
  std::vector<int> word;  // simple reflections, applied left to right
};

Dominantized dominantize(const RootDatum& rd, const Vec& v);
Dominantized dominantize_on(const RootDatum& rd, const std::vector<int>& nodes, const Vec& v);

// Simple walls through v: { i : dot(v, alpha_i) == 0 }.
std::vector<int> wall_set(const RootDatum& rd, const Vec& v);

// Dominance order on dominant vectors: v2 - v1 must be a nonnegative
// rational combination of simple coroots with zero residual. Throws
// std::invalid_argument if either input is not dominant.
bool dominance_leq(const RootDatum& rd, const Vec& v1, const Vec& v2);

// Full Weyl orbit, sorted for determinism.
std::vector<Vec> weyl_orbit(const RootDatum& rd, const Vec& v);

struct WeylElement {
  Mat w;
  std::vector<int> word;  // reduced, applied right to left: w = s_{word[0]} * ...
};

// Longest element of the parabolic generated by the listed nodes.
WeylElement longest_element(const RootDatum& rd, const std::vector<int>& nodes);

// Positive roots supported on the listed nodes; returns indices into pos_roots.
std::vector<int> pos_roots_in(const RootDatum& rd, const std::vector<int>& nodes);

// Connected components of the sub-diagram on the listed nodes, each with its
// Cartan type and nodes rearranged into Bourbaki order.
std::vector<Component> recognize_subsystem(const RootDatum& rd, const std::vector<int>& nodes);

// "A3", "GL4", "B2 x A1", via the component list.
std::string datum_type_label(const RootDatum& rd);
std::string component_label(const Component& c);

// Membership of v in the span of the lattice columns with integer
// coefficients.
bool lattice_member(const RootDatum& rd, const Vec& v);
IVec lattice_coords(const RootDatum& rd, const Vec& v);  // throws if not a member

}  // namespace bgmu
