#pragma once

// Extended affine Weyl group elements as exact affine maps x -> t + m x,
// with Iwahori-Matsumoto length, reduced words over the affine simple
// reflections, and Bruhat lower sets computed by the subword property.

#include "bgmu/rootsys.hpp"
#include "bgmu/smith.hpp"

#include <map>
#include <set>

namespace bgmu {

struct Aff {
  Vec t;
  Mat m;
};

Aff aff_identity(int dim);
Aff aff_translation(const Vec& lambda);
Aff aff_linear(const Mat& m);
Aff aff_mul(const Aff& a, const Aff& b);
Aff aff_inv(const Aff& a);
Vec aff_apply(const Aff& a, const Vec& v);
bool aff_eq(const Aff& a, const Aff& b);
std::string aff_key(const Aff& a);

// Finite simple reflections followed by one affine reflection per
// irreducible component (through the wall of its dominant root).
struct AffineSystem {
  const RootDatum* rd = nullptr;
  std::vector<Aff> simples;
  int n_finite = 0;
};

AffineSystem affine_system(const RootDatum& rd);

// Iwahori-Matsumoto length of t^lambda u; lambda must pair integrally with
// every root.
Int aff_length(const RootDatum& rd, const Aff& a);

// Reduced word for an element of the affine Weyl group (indices into
// sys.simples); throws if the element does not reduce to the identity.
std::vector<int> reduced_word(const AffineSystem& sys, Aff a);

// Lower Bruhat cones with memoization across queries. lower(a) returns the
// set of elements below a, keyed canonically; elements() resolves keys.
class BruhatExplorer {
 public:
  explicit BruhatExplorer(const AffineSystem& sys) : sys_(&sys) {}

  const std::set<std::string>& lower(const Aff& a);
  const Aff& element(const std::string& key) const { return registry_.at(key); }

 private:
  const AffineSystem* sys_;
  std::map<std::string, std::set<std::string>> memo_;
  std::map<std::string, Aff> registry_;
  std::map<std::string, Int> lengths_;

  Int length_of(const Aff& a);
};

// Membership in the (unextended) affine Weyl group: the translation part
// must lie in the coroot lattice. `pq` is the quotient lattice / Q.
bool in_affine_weyl(const RootDatum& rd, const AbelianQuotient& pq, const Aff& a);

}  // namespace bgmu
