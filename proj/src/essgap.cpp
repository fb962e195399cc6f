#include "bgmu/essgap.hpp"

#include <set>
#include <stdexcept>

namespace bgmu {

GapReport ess_gap(const CoxeterDatum& d, const SigmaClass& c1, const SigmaClass& c2) {
  GapReport r;
  r.length = length(d, c1, c2);

  Vec diff = Vec(c2.nu - c1.nu);
  Rat pairing = dot(diff, d.rd.two_rho);
  if (!is_integer(pairing))
    throw std::logic_error("ess_gap: two-rho pairing is not an integer");
  r.two_rho_pairing = rat_num(pairing);

  // Orbits where the two classes sit at the same height contribute to
  // neither boundary count.
  std::set<int> common;
  for (int o = 0; o < d.n_orbits(); ++o)
    if (dot(diff, d.omega_orbit.col(o)) == 0) common.insert(o);

  r.b1 = 0;
  for (int o : lattice_orbits(d, c1))
    if (!common.count(o)) ++r.b1;
  r.b2 = 0;
  for (int o : lattice_orbits(d, c2))
    if (!common.count(o)) ++r.b2;

  r.i = r.length - r.b2;
  r.ess_gap = r.two_rho_pairing - r.length;
  if (r.ess_gap != r.i + r.b1)
    throw std::logic_error("ess_gap: decomposition identity failed");
  if (r.i < 0)
    throw std::logic_error("ess_gap: negative interior count");
  if (r.ess_gap < 0)
    throw std::logic_error("ess_gap: negative gap");
  return r;
}

GapReport gap_to_max(const CoxeterDatum& d, const BGMuPoset& poset, const SigmaClass& c) {
  if (poset.index_of(c.nu) < 0)
    throw std::invalid_argument("gap_to_max: class is not in the poset");
  return ess_gap(d, c, poset.max());
}

}  // namespace bgmu
