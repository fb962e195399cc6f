#include "bgmu/bg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "bgmu/weyl.hpp"

namespace bgmu {

namespace {

// Orthogonal projection onto the complement of the coroot span. The
// coefficient of each simple coroot in v is its pairing with the matching
// fundamental weight.
Vec central_project(const RootDatum& rd, const Vec& v) {
  Vec out = v;
  for (int j = 0; j < rd.rank; ++j) {
    Rat cj = dot(v, rd.weights.col(j));
    out -= cj * Vec(rd.simple_coroots.col(j));
  }
  return out;
}

// Central part shared by the Newton vector of every element of B(G,{mu}):
// the central part of the averaged reference cocharacter, shifted back by
// the identity drift.
Vec central_anchor(const CoxeterDatum& d) {
  return Vec(central_project(d.rd, d.diamond(d.lambda_ref())) - d.nu_tau);
}

// For each free orbit o, the unique sigma0-invariant vector in the coroot
// span that vanishes on every wall root, pairs to 1 with the weight of o and
// to 0 with the weight of every other free orbit. Wall pairings on wall
// orbits are left unconstrained; the vector is still unique because the
// orbit-summed simple roots are linearly independent.
std::vector<Vec> orbit_basis(const CoxeterDatum& d,
                             const std::vector<int>& wall_nodes,
                             const std::vector<int>& free_orbits) {
  const RootDatum& rd = d.rd;
  const int nw = static_cast<int>(wall_nodes.size());
  const int nf = static_cast<int>(free_orbits.size());
  const int n_rows = nw + rd.dim + nf;
  Mat a = Mat::Zero(n_rows, rd.rank);
  int r = 0;
  for (int j : wall_nodes)
    a.row(r++) = rd.simple_roots.col(j).transpose() * rd.simple_coroots;
  Mat ident = Mat::Identity(rd.dim, rd.dim);
  a.middleRows(r, rd.dim) = (d.sigma0_mat - ident) * rd.simple_coroots;
  r += rd.dim;
  for (int oi : free_orbits)
    a.row(r++) = d.omega_orbit.col(oi).transpose() * rd.simple_coroots;

  if (mat_kernel(a).cols() != 0)
    throw std::logic_error("orbit_basis: breakpoint heights do not determine the vector");

  std::vector<Vec> basis;
  basis.reserve(nf);
  for (int k = 0; k < nf; ++k) {
    Vec rhs = Vec::Zero(n_rows);
    rhs(nw + rd.dim + k) = 1;
    Vec c;
    try {
      c = mat_solve(a, rhs);
    } catch (const std::invalid_argument&) {
      throw std::logic_error("orbit_basis: no invariant vector with the requested walls");
    }
    basis.push_back(Vec(rd.simple_coroots * c));
  }
  return basis;
}

// Shared poset assembly: sort, locate the distinguished elements, and check
// the structural invariants that both enumeration routes must satisfy.
BGMuPoset build_poset(const CoxeterDatum& d, std::vector<SigmaClass> classes) {
  const RootDatum& rd = d.rd;
  if (classes.empty())
    throw std::logic_error("build_poset: the class set is empty");
  for (const SigmaClass& c : classes)
    if (!(c.kappa == classes.front().kappa))
      throw std::logic_error("build_poset: mixed kappa classes");

  std::sort(classes.begin(), classes.end(),
            [&](const SigmaClass& a, const SigmaClass& b) {
              Rat pa = dot(a.nu, rd.two_rho);
              Rat pb = dot(b.nu, rd.two_rho);
              if (pa != pb) return pa > pb;
              return vec_less(a.nu, b.nu);
            });

  BGMuPoset poset;
  poset.elements = std::move(classes);
  poset.max_index = 0;
  for (int i = 1; i < poset.size(); ++i)
    if (!dominance_leq(rd, poset.elements[i].nu, poset.elements[0].nu))
      throw std::logic_error("build_poset: no unique maximal element");

  for (int i = 0; i < poset.size(); ++i) {
    if (static_cast<int>(wall_set(rd, poset.elements[i].nu).size()) == rd.rank) {
      if (poset.basic_index >= 0)
        throw std::logic_error("build_poset: two central elements");
      poset.basic_index = i;
    }
  }
  if (poset.basic_index < 0)
    throw std::logic_error("build_poset: basic element missing");
  for (int i = 0; i < poset.size(); ++i)
    if (!dominance_leq(rd, poset.elements[poset.basic_index].nu,
                       poset.elements[i].nu))
      throw std::logic_error("build_poset: basic element is not the minimum");

  std::vector<int> all_nodes(rd.rank);
  for (int j = 0; j < rd.rank; ++j) all_nodes[j] = j;
  std::vector<int> indec;
  for (int i = 0; i < poset.size(); ++i)
    if (minimal_levi_support(d, poset.elements[i]) == all_nodes)
      indec.push_back(i);
  if (indec.empty())
    throw std::logic_error("build_poset: no indecomposable element");
  for (int i : indec) {
    bool top = true;
    for (int j : indec)
      if (!dominance_leq(rd, poset.elements[j].nu, poset.elements[i].nu)) {
        top = false;
        break;
      }
    if (top) {
      poset.indec_index = i;
      break;
    }
  }
  if (poset.indec_index < 0)
    throw std::logic_error("build_poset: no maximal indecomposable element");
  return poset;
}

}  // namespace

int BGMuPoset::index_of(const Vec& nu) const {
  for (int i = 0; i < size(); ++i)
    if (vec_eq(elements[i].nu, nu)) return i;
  return -1;
}

KappaValue kappa_target(const CoxeterDatum& d) {
  return d.kappa_of(Vec(d.mu + d.tau.a.t));
}

SigmaClass newton_point(const CoxeterDatum& d, const Aff& w) {
  const RootDatum& rd = d.rd;
  Aff step = aff_mul(w, d.sigma_aff());
  Aff power = step;
  int n = 1;
  Mat ident = Mat::Identity(rd.dim, rd.dim);
  while (!mat_eq(power.m, ident)) {
    power = aff_mul(step, power);
    ++n;
    if (n > 10000)
      throw std::logic_error("newton_point: linear part does not close up");
  }
  Rat inv_n = make_rat(1, n);
  Vec avg = inv_n * power.t;
  Vec nu = Vec(dominantize(rd, avg).v - d.nu_tau);
  if (!vec_eq(Vec(d.sigma0_mat * nu), nu))
    throw std::logic_error("newton_point: Newton vector is not twist-invariant");
  return SigmaClass{nu, d.kappa_of(Vec(w.t + d.tau.a.t))};
}

SigmaClass newton_point(const CoxeterDatum& d, const AffineWeylElement& w) {
  return newton_point(d, w.aff());
}

std::vector<AffineWeylElement> admissible_set(const CoxeterDatum& d) {
  const RootDatum& rd = d.rd;
  OmegaElement om;
  if (rd.gl_mode) {
    Rat s = 0;
    for (int i = 0; i < rd.dim; ++i) s += d.mu(i);
    if (!is_integer(s))
      throw std::logic_error("admissible_set: non-integral coordinate sum");
    om = omega_rotate(d, static_cast<int>(rat_num(s).get_si()));
  } else {
    std::vector<Int> target = d.pq.class_of(lattice_coords(rd, d.mu));
    bool found = false;
    for (const OmegaElement& cand : enumerate_omega(d)) {
      if (cand.coset == target) {
        om = cand;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("admissible_set: no length-zero element in the coset of mu");
  }
  Aff om_inv = aff_inv(om.a);
  if (!in_affine_weyl(rd, d.pq, aff_mul(aff_translation(d.mu), om_inv)))
    throw std::logic_error("admissible_set: translation does not split through the length-zero element");

  AffineSystem sys = affine_system(rd);
  BruhatExplorer explorer(sys);
  std::set<std::string> keys;
  for (const Vec& x : weyl_orbit(rd, d.mu)) {
    const std::set<std::string>& low = explorer.lower(aff_mul(aff_translation(x), om_inv));
    keys.insert(low.begin(), low.end());
  }
  std::vector<AffineWeylElement> out;
  out.reserve(keys.size());
  for (const std::string& k : keys) {
    Aff a = aff_mul(explorer.element(k), om.a);
    out.push_back(AffineWeylElement{a.t, a.m, om});
  }
  return out;
}

BGMuPoset enumerate_bg_mu(const CoxeterDatum& d) {
  const RootDatum& rd = d.rd;
  const int no = d.n_orbits();
  const Vec lam = d.lambda_ref();
  const Vec xc = central_anchor(d);
  const KappaValue target = kappa_target(d);

  std::vector<SigmaClass> found;
  std::set<std::string> seen;
  for (int mask = 0; mask < (1 << no); ++mask) {
    std::vector<int> wall_nodes;
    std::vector<int> free_orbits;
    for (int o = 0; o < no; ++o) {
      if (mask & (1 << o))
        wall_nodes.insert(wall_nodes.end(), d.orbits[o].begin(), d.orbits[o].end());
      else
        free_orbits.push_back(o);
    }
    std::sort(wall_nodes.begin(), wall_nodes.end());
    const int nf = static_cast<int>(free_orbits.size());
    std::vector<Vec> basis = orbit_basis(d, wall_nodes, free_orbits);

    // Admissible breakpoint heights per free orbit: congruent to the
    // reference pairing mod Z, strictly positive (a zero height would force
    // the orbit onto the wall set), and at most the pairing of mu-diamond.
    std::vector<std::vector<Rat>> choices(nf);
    bool feasible = true;
    for (int i = 0; i < nf; ++i) {
      Rat base = dot(lam, d.omega_orbit.col(free_orbits[i]));
      Rat top = dot(d.mu_diamond, d.omega_orbit.col(free_orbits[i]));
      Rat h = frac_part(base);
      if (h == 0) h = 1;
      for (; h <= top; h += 1) choices[i].push_back(h);
      if (choices[i].empty()) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;

    std::vector<std::size_t> idx(nf, 0);
    while (true) {
      Vec x = xc;
      for (int i = 0; i < nf; ++i) x += choices[i][idx[i]] * basis[i];
      bool ok = true;
      for (int j = 0; j < rd.rank && ok; ++j) {
        if (std::binary_search(wall_nodes.begin(), wall_nodes.end(), j)) continue;
        if (dot(x, rd.simple_roots.col(j)) <= 0) ok = false;
      }
      if (ok && dominance_leq(rd, x, d.mu_diamond)) {
        if (!seen.insert(vec_str(x)).second)
          throw std::logic_error("enumerate_bg_mu: duplicate candidate");
        found.push_back(SigmaClass{x, target});
      }
      int p = 0;
      while (p < nf && ++idx[p] == choices[p].size()) idx[p++] = 0;
      if (p == nf) break;
    }
  }
  return build_poset(d, std::move(found));
}

BGMuPoset oracle_bg_mu(const CoxeterDatum& d) {
  const KappaValue target = kappa_target(d);
  std::map<std::string, SigmaClass> classes;
  for (const AffineWeylElement& w : admissible_set(d)) {
    SigmaClass c = newton_point(d, w);
    if (!(c.kappa == target))
      throw std::logic_error("oracle_bg_mu: admissible element with stray kappa");
    classes.emplace(vec_str(c.nu), c);
  }
  std::vector<SigmaClass> out;
  out.reserve(classes.size());
  for (auto& kv : classes) out.push_back(kv.second);
  return build_poset(d, std::move(out));
}

SigmaClass make_class(const CoxeterDatum& d, const Vec& nu) {
  const RootDatum& rd = d.rd;
  if (nu.size() != rd.dim)
    throw std::invalid_argument("make_class: wrong dimension");
  if (!vec_eq(Vec(d.sigma0_mat * nu), nu))
    throw std::invalid_argument("make_class: vector is not twist-invariant");
  if (!is_dominant(rd, nu))
    throw std::invalid_argument("make_class: vector is not dominant");
  if (!vec_eq(central_project(rd, nu), central_anchor(d)))
    throw std::invalid_argument("make_class: central part does not match the kappa class of mu");
  if (!dominance_leq(rd, nu, d.mu_diamond))
    throw std::invalid_argument("make_class: vector is not below mu-diamond");
  const Vec lam = d.lambda_ref();
  std::vector<int> walls = wall_set(rd, nu);
  for (int o = 0; o < d.n_orbits(); ++o) {
    bool on_wall = true;
    for (int j : d.orbits[o])
      if (!std::binary_search(walls.begin(), walls.end(), j)) {
        on_wall = false;
        break;
      }
    if (on_wall) continue;
    if (!is_integer(Rat(dot(lam, d.omega_orbit.col(o)) - dot(nu, d.omega_orbit.col(o)))))
      throw std::invalid_argument("make_class: breakpoint height off the reference lattice");
  }
  return SigmaClass{nu, kappa_target(d)};
}

bool leq(const CoxeterDatum& d, const SigmaClass& c1, const SigmaClass& c2) {
  if (!(c1.kappa == c2.kappa)) return false;
  return dominance_leq(d.rd, c1.nu, c2.nu);
}

int defect(const CoxeterDatum& d, const SigmaClass& c) {
  const Vec lam = d.lambda_ref();
  int count = 0;
  for (int o = 0; o < d.n_orbits(); ++o)
    if (!is_integer(Rat(dot(lam, d.omega_orbit.col(o)) - dot(c.nu, d.omega_orbit.col(o)))))
      ++count;
  return count;
}

bool is_basic(const CoxeterDatum& d, const SigmaClass& c) {
  return static_cast<int>(wall_set(d.rd, c.nu).size()) == d.rd.rank;
}

bool is_superbasic(const CoxeterDatum& d, const SigmaClass& c) {
  return defect(d, c) == d.n_orbits();
}

Vec best_integral_approx(const CoxeterDatum& d, const SigmaClass& c) {
  const Vec lam = d.lambda_ref();
  std::vector<int> free_orbits(d.n_orbits());
  for (int o = 0; o < d.n_orbits(); ++o) free_orbits[o] = o;
  std::vector<Vec> basis = orbit_basis(d, {}, free_orbits);
  Vec v = central_project(d.rd, c.nu);
  for (int o = 0; o < d.n_orbits(); ++o) {
    Rat base = dot(lam, d.omega_orbit.col(o));
    Rat h = base + Rat(rat_floor(Rat(dot(c.nu, d.omega_orbit.col(o)) - base)));
    v += h * basis[o];
  }
  return v;
}

std::vector<int> lattice_orbits(const CoxeterDatum& d, const SigmaClass& c) {
  const Vec lam = d.lambda_ref();
  std::vector<int> out;
  for (int o = 0; o < d.n_orbits(); ++o)
    if (is_integer(Rat(dot(lam, d.omega_orbit.col(o)) - dot(c.nu, d.omega_orbit.col(o)))))
      out.push_back(o);
  return out;
}

Int length(const CoxeterDatum& d, const SigmaClass& c1, const SigmaClass& c2) {
  if (!leq(d, c1, c2))
    throw std::invalid_argument("length: classes are not comparable");
  const Vec lam = d.lambda_ref();
  if (!dominance_leq(d.rd, Vec(c2.nu + d.nu_tau), d.diamond(lam)))
    throw std::logic_error("length: reference cocharacter below the upper class");
  Int len = 0;
  for (int o = 0; o < d.n_orbits(); ++o) {
    Rat base = dot(lam, d.omega_orbit.col(o));
    len += rat_ceil(Rat(base - dot(c1.nu, d.omega_orbit.col(o)))) -
           rat_ceil(Rat(base - dot(c2.nu, d.omega_orbit.col(o))));
  }
  Rat half = make_rat(1, 2);
  Rat closed = half * dot(Vec(c2.nu - c1.nu), d.rd.two_rho) +
               half * Rat(defect(d, c1) - defect(d, c2));
  if (!is_integer(closed) || rat_num(closed) != len)
    throw std::logic_error("length: ceiling formula and closed formula disagree");
  if (len < 0)
    throw std::logic_error("length: negative distance");
  return len;
}

std::vector<int> minimal_levi_support(const CoxeterDatum& d, const SigmaClass& c) {
  const RootDatum& rd = d.rd;
  std::set<int> nodes;
  for (int j : wall_set(rd, c.nu)) nodes.insert(j);
  Vec gap = Vec(d.mu_diamond - c.nu);
  for (int j = 0; j < rd.rank; ++j)
    if (dot(gap, rd.weights.col(j)) != 0) nodes.insert(j);
  for (int j : nodes)
    if (!nodes.count(d.sigma0[j]))
      throw std::logic_error("minimal_levi_support: node set is not twist-stable");
  return std::vector<int>(nodes.begin(), nodes.end());
}

}  // namespace bgmu
