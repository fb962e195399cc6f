#include "bgmu/datum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bgmu {

namespace {

Vec ivec_to_vec(const IVec& x) {
  Vec v(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) v[i] = Rat(x[i]);
  return v;
}

void check_perm_cartan(const RootDatum& rd, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != rd.rank)
    throw std::invalid_argument("sigma0: permutation size mismatch");
  std::vector<bool> hit(static_cast<size_t>(rd.rank), false);
  for (int i : p) {
    if (i < 0 || i >= rd.rank || hit[static_cast<size_t>(i)])
      throw std::invalid_argument("sigma0: not a permutation");
    hit[static_cast<size_t>(i)] = true;
  }
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j)
      if (rd.cartan(i, j) !=
          rd.cartan(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]))
        throw std::invalid_argument("sigma0: permutation does not preserve the diagram");
}

bool is_reversal_perm(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    if (p[static_cast<size_t>(i)] != n - 1 - i) return false;
  return true;
}

Mat sigma0_matrix_from_perm(const RootDatum& rd, const std::vector<int>& p) {
  if (rd.gl_mode) {
    if (is_reversal_perm(p) && rd.rank > 1) {
      // Minus-reversal: the unique lattice automorphism of Z^n inducing the
      // diagram flip.
      Mat m = Mat::Zero(rd.dim, rd.dim);
      for (int j = 0; j < rd.dim; ++j) m(rd.dim - 1 - j, j) = -1;
      return m;
    }
    bool ident = true;
    for (int i = 0; i < rd.rank; ++i)
      if (p[static_cast<size_t>(i)] != i) ident = false;
    if (ident) return Mat::Identity(rd.dim, rd.dim);
    throw std::invalid_argument("sigma0: GL mode supports only identity or flip");
  }
  // Send coroot_i to coroot_{p(i)} on the root span, identity on the
  // orthogonal complement.
  Mat complement = mat_kernel(Mat(rd.simple_roots.transpose()));
  Eigen::Index extra = complement.cols();
  if (rd.rank + extra != rd.dim)
    throw std::logic_error("sigma0: degenerate root span");
  Mat basis(rd.dim, rd.dim);
  Mat images(rd.dim, rd.dim);
  basis.leftCols(rd.rank) = rd.simple_coroots;
  images.leftCols(rd.rank) = Mat::Zero(rd.dim, rd.rank);
  for (int i = 0; i < rd.rank; ++i)
    images.col(i) = rd.simple_coroots.col(p[static_cast<size_t>(i)]);
  basis.rightCols(extra) = complement;
  images.rightCols(extra) = complement;
  return images * mat_inverse(basis);
}

std::vector<int> perm_from_matrix(const RootDatum& rd, const Mat& m) {
  std::vector<int> p(static_cast<size_t>(rd.rank), -1);
  for (int i = 0; i < rd.rank; ++i) {
    Vec img = m * rd.simple_roots.col(i);
    int found = -1;
    for (int j = 0; j < rd.rank; ++j)
      if (vec_eq(img, rd.simple_roots.col(j))) found = j;
    if (found < 0)
      throw std::invalid_argument("sigma0: matrix does not permute the simple roots");
    p[static_cast<size_t>(i)] = found;
  }
  return p;
}

int matrix_order(const Mat& m) {
  Mat ident = Mat::Identity(m.rows(), m.cols());
  Mat p = m;
  for (int k = 1; k <= 100; ++k) {
    if (mat_eq(p, ident)) return k;
    p = m * p;
  }
  throw std::invalid_argument("sigma0: matrix order exceeds 100");
}

Aff tau_node_aff(const RootDatum& rd, int node0) {
  int comp = rd.comp_of[static_cast<size_t>(node0)];
  const Component& c = rd.components[static_cast<size_t>(comp)];
  if (dot(rd.coweights.col(node0), rd.theta[static_cast<size_t>(comp)]) != 1)
    throw std::invalid_argument("tau: node is not minuscule");
  std::vector<int> rest;
  for (int i : c.nodes)
    if (i != node0) rest.push_back(i);
  WeylElement w0 = longest_element(rd, c.nodes);
  WeylElement w0j = longest_element(rd, rest);
  Aff a;
  a.t = rd.coweights.col(node0);
  a.m = w0j.w * w0.w;
  return a;
}

Mat gl_rotation(int n) {
  // x -> (x_n + 1, x_1, ..., x_{n-1}); the linear part sends e_j to e_{j+1}.
  Mat m = Mat::Zero(n, n);
  for (int j = 0; j + 1 < n; ++j) m(j + 1, j) = 1;
  m(0, n - 1) = 1;
  return m;
}

Aff gl_rotate_aff(int n, int power) {
  Aff rot{Vec::Zero(n), gl_rotation(n)};
  rot.t[0] = 1;
  Aff acc = aff_identity(n);
  Aff step = power >= 0 ? rot : aff_inv(rot);
  int reps = power >= 0 ? power : -power;
  for (int k = 0; k < reps; ++k) acc = aff_mul(step, acc);
  return acc;
}

void check_root_permuting(const RootDatum& rd, const Mat& m, const char* what) {
  for (int i = 0; i < rd.rank; ++i) {
    Vec img = m * rd.simple_roots.col(i);
    int idx = 0, sign = 0;
    if (!rd.root_lookup(img, &idx, &sign))
      throw std::invalid_argument(std::string(what) + ": linear part does not permute roots");
  }
}

void check_lattice_preserving(const RootDatum& rd, const Mat& m, const char* what) {
  for (Eigen::Index c = 0; c < rd.lattice.cols(); ++c) {
    Vec img = m * rd.lattice.col(c);
    if (!lattice_member(rd, img))
      throw std::invalid_argument(std::string(what) + ": lattice not preserved");
  }
}

AbelianQuotient lattice_quotient(const RootDatum& rd, const Mat& sigma0_mat,
                                 bool include_twist) {
  int lrank = static_cast<int>(rd.lattice.cols());
  int ncols = rd.rank + (include_twist ? lrank : 0);
  IMat gens(lrank, ncols);
  for (int i = 0; i < rd.rank; ++i)
    gens.col(i) = lattice_coords(rd, rd.simple_coroots.col(i));
  if (include_twist)
    for (int c = 0; c < lrank; ++c) {
      Vec moved = sigma0_mat * rd.lattice.col(c) - rd.lattice.col(c);
      gens.col(rd.rank + c) = lattice_coords(rd, moved);
    }
  return make_quotient(lrank, gens);
}

CoxeterDatum finish_datum(RootDatum rd, std::vector<int> perm, Mat sigma0_mat,
                          const TauSpec& tau_spec, Vec mu) {
  CoxeterDatum d;
  d.rd = std::move(rd);
  d.sigma0 = std::move(perm);
  d.sigma0_mat = std::move(sigma0_mat);

  for (int i = 0; i < d.rd.rank; ++i) {
    Vec img = d.sigma0_mat * d.rd.simple_roots.col(i);
    if (!vec_eq(img, d.rd.simple_roots.col(d.sigma0[static_cast<size_t>(i)])))
      throw std::invalid_argument("sigma0: matrix disagrees with permutation");
  }
  check_lattice_preserving(d.rd, d.sigma0_mat, "sigma0");
  d.sigma0_order = matrix_order(d.sigma0_mat);

  // sigma0 orbits on nodes, listed by smallest member.
  std::vector<bool> seen(static_cast<size_t>(d.rd.rank), false);
  d.orbit_of.assign(static_cast<size_t>(d.rd.rank), -1);
  for (int i = 0; i < d.rd.rank; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::vector<int> orbit;
    int cur = i;
    while (!seen[static_cast<size_t>(cur)]) {
      seen[static_cast<size_t>(cur)] = true;
      orbit.push_back(cur);
      cur = d.sigma0[static_cast<size_t>(cur)];
    }
    std::sort(orbit.begin(), orbit.end());
    for (int k : orbit) d.orbit_of[static_cast<size_t>(k)] = static_cast<int>(d.orbits.size());
    d.orbits.push_back(orbit);
  }
  d.omega_orbit = Mat::Zero(d.rd.dim, static_cast<Eigen::Index>(d.orbits.size()));
  for (size_t o = 0; o < d.orbits.size(); ++o)
    for (int i : d.orbits[o])
      d.omega_orbit.col(static_cast<Eigen::Index>(o)) += d.rd.weights.col(i);

  d.pq = lattice_quotient(d.rd, d.sigma0_mat, false);
  d.kq = lattice_quotient(d.rd, d.sigma0_mat, true);

  switch (tau_spec.kind) {
    case TauSpec::Identity:
      d.tau.a = aff_identity(d.rd.dim);
      d.tau.name = "id";
      break;
    case TauSpec::Node: {
      if (tau_spec.index < 1 || tau_spec.index > d.rd.rank)
        throw std::invalid_argument("tau: node index out of range");
      d.tau.a = tau_node_aff(d.rd, tau_spec.index - 1);
      std::ostringstream os;
      os << "tau[" << tau_spec.index << "]";
      d.tau.name = os.str();
      break;
    }
    case TauSpec::Rotate: {
      if (!d.rd.gl_mode) throw std::invalid_argument("tau: rotate needs GL mode");
      d.tau.a = gl_rotate_aff(d.rd.dim, tau_spec.index);
      std::ostringstream os;
      os << "rot(" << tau_spec.index << ")";
      d.tau.name = os.str();
      break;
    }
    case TauSpec::Explicit:
      d.tau.a = tau_spec.aff;
      d.tau.name = "omega";
      break;
  }
  if (!lattice_member(d.rd, d.tau.a.t))
    throw std::invalid_argument("tau: translation not in the lattice");
  check_root_permuting(d.rd, d.tau.a.m, "tau");
  if (aff_length(d.rd, d.tau.a) != 0)
    throw std::invalid_argument("tau: element does not have length zero");
  d.tau.coset = d.pq.class_of(lattice_coords(d.rd, d.tau.a.t));

  if (mu.size() != d.rd.dim) throw std::invalid_argument("mu: dimension mismatch");
  if (!lattice_member(d.rd, mu))
    throw std::invalid_argument("mu: not in the coweight lattice: " + vec_str(mu));
  if (!is_dominant(d.rd, mu))
    throw std::invalid_argument("mu: not dominant: " + vec_str(mu));
  d.mu = std::move(mu);
  d.mu_diamond = d.diamond(d.mu);

  // The twisted affine action must normalize the base alcove: conjugation
  // permutes the affine simple reflections.
  AffineSystem sys = affine_system(d.rd);
  Aff psi = d.sigma_aff();
  Aff psi_inv = aff_inv(psi);
  std::set<std::string> simple_keys;
  for (const Aff& s : sys.simples) simple_keys.insert(aff_key(s));
  for (const Aff& s : sys.simples) {
    Aff conj = aff_mul(aff_mul(psi, s), psi_inv);
    if (!simple_keys.count(aff_key(conj)))
      throw std::invalid_argument("tau/sigma0: twist does not normalize the base alcove");
  }

  // Newton drift of the identity element: iterate the twisted action until
  // its linear part closes up, then average the translation.
  Aff p = psi;
  int n = 1;
  Mat ident = Mat::Identity(d.rd.dim, d.rd.dim);
  while (!mat_eq(p.m, ident)) {
    p = aff_mul(psi, p);
    ++n;
    if (n > 10000) throw std::logic_error("identity drift does not close up");
  }
  Rat inv_n = make_rat(1, n);
  d.nu_tau = inv_n * p.t;
  for (int i = 0; i < d.rd.rank; ++i)
    if (dot(d.nu_tau, d.rd.simple_roots.col(i)) != 0)
      throw std::logic_error("identity drift is not central");
  if (!vec_eq(Vec(d.sigma0_mat * d.nu_tau), d.nu_tau))
    throw std::logic_error("identity drift is not twist-invariant");

  d.label = datum_type_label(d.rd);
  return d;
}

}  // namespace

Vec CoxeterDatum::diamond(const Vec& v) const {
  Vec acc = v;
  Vec cur = v;
  for (int k = 1; k < sigma0_order; ++k) {
    cur = sigma0_mat * cur;
    acc += cur;
  }
  Rat f = make_rat(1, sigma0_order);
  return f * acc;
}

KappaValue CoxeterDatum::kappa_of(const Vec& lattice_vec) const {
  return KappaValue{kq.class_of(lattice_coords(rd, lattice_vec))};
}

Vec CoxeterDatum::kappa_rep(const KappaValue& k) const {
  return rd.lattice * ivec_to_vec(kq.representative(k.v));
}

Vec CoxeterDatum::lambda_ref() const {
  Vec sum = mu + tau.a.t;
  return dominantize(rd, sum).v;
}

bool CoxeterDatum::is_quasi_split() const {
  return kq.is_zero(kappa_of(tau.a.t).v);
}

std::vector<int> identity_perm(const RootDatum& rd) {
  std::vector<int> p(static_cast<size_t>(rd.rank));
  for (int i = 0; i < rd.rank; ++i) p[static_cast<size_t>(i)] = i;
  return p;
}

std::vector<int> flip_perm(const RootDatum& rd) {
  std::vector<int> p = identity_perm(rd);
  for (const Component& c : rd.components) {
    int r = c.rank;
    switch (c.type) {
      case 'A':
        for (int i = 0; i < r; ++i)
          p[static_cast<size_t>(c.nodes[static_cast<size_t>(i)])] =
              c.nodes[static_cast<size_t>(r - 1 - i)];
        break;
      case 'D': {
        int a = c.nodes[static_cast<size_t>(r - 2)];
        int b = c.nodes[static_cast<size_t>(r - 1)];
        p[static_cast<size_t>(a)] = b;
        p[static_cast<size_t>(b)] = a;
        break;
      }
      case 'E':
        if (r == 6) {
          auto swap_pair = [&](int x, int y) {
            p[static_cast<size_t>(c.nodes[static_cast<size_t>(x)])] =
                c.nodes[static_cast<size_t>(y)];
            p[static_cast<size_t>(c.nodes[static_cast<size_t>(y)])] =
                c.nodes[static_cast<size_t>(x)];
          };
          swap_pair(0, 5);
          swap_pair(2, 4);
        }
        break;
      default:
        break;
    }
  }
  return p;
}

CoxeterDatum make_coxeter_datum(const RootDatum& rd, const std::vector<int>& sigma0_perm,
                                const TauSpec& tau, const Vec& mu) {
  check_perm_cartan(rd, sigma0_perm);
  Mat m = sigma0_matrix_from_perm(rd, sigma0_perm);
  return finish_datum(rd, sigma0_perm, std::move(m), tau, mu);
}

CoxeterDatum make_coxeter_datum_mat(const RootDatum& rd, const Mat& sigma0_mat,
                                    const TauSpec& tau, const Vec& mu) {
  std::vector<int> perm = perm_from_matrix(rd, sigma0_mat);
  check_perm_cartan(rd, perm);
  return finish_datum(rd, std::move(perm), sigma0_mat, tau, mu);
}

OmegaElement omega_identity(const CoxeterDatum& d) {
  OmegaElement o;
  o.a = aff_identity(d.rd.dim);
  o.coset = d.pq.zero_class();
  o.name = "id";
  return o;
}

OmegaElement omega_from_node(const CoxeterDatum& d, int node_1based) {
  OmegaElement o;
  o.a = tau_node_aff(d.rd, node_1based - 1);
  if (aff_length(d.rd, o.a) != 0) throw std::logic_error("omega_from_node: nonzero length");
  o.coset = d.pq.class_of(lattice_coords(d.rd, o.a.t));
  std::ostringstream os;
  os << "tau[" << node_1based << "]";
  o.name = os.str();
  return o;
}

OmegaElement omega_rotate(const CoxeterDatum& d, int power) {
  if (!d.rd.gl_mode) throw std::invalid_argument("omega_rotate: needs GL mode");
  OmegaElement o;
  o.a = gl_rotate_aff(d.rd.dim, power);
  o.coset = d.pq.class_of(lattice_coords(d.rd, o.a.t));
  std::ostringstream os;
  os << "rot(" << power << ")";
  o.name = os.str();
  return o;
}

OmegaElement omega_mul(const CoxeterDatum& d, const OmegaElement& x, const OmegaElement& y) {
  OmegaElement o;
  o.a = aff_mul(x.a, y.a);
  o.coset = d.pq.add(x.coset, y.coset);
  if (x.name == "id")
    o.name = y.name;
  else if (y.name == "id")
    o.name = x.name;
  else
    o.name = x.name + "*" + y.name;
  return o;
}

std::vector<OmegaElement> enumerate_omega(const CoxeterDatum& d) {
  if (d.rd.gl_mode)
    throw std::invalid_argument("enumerate_omega: infinite in GL mode");
  std::vector<OmegaElement> gens;
  for (size_t ci = 0; ci < d.rd.components.size(); ++ci)
    for (int k : d.rd.components[ci].nodes)
      if (dot(d.rd.coweights.col(k), d.rd.theta[ci]) == 1)
        gens.push_back(omega_from_node(d, k + 1));
  std::vector<OmegaElement> out{omega_identity(d)};
  std::set<std::string> seen{aff_key(out[0].a)};
  for (size_t head = 0; head < out.size(); ++head) {
    OmegaElement cur = out[head];
    for (const OmegaElement& g : gens) {
      OmegaElement nx = omega_mul(d, cur, g);
      if (seen.insert(aff_key(nx.a)).second) out.push_back(nx);
    }
  }
  return out;
}

CoxeterDatum with_tau(const CoxeterDatum& d, const OmegaElement& tau) {
  CoxeterDatum nd = finish_datum(d.rd, d.sigma0, d.sigma0_mat,
                                 TauSpec::explicit_aff(tau.a), d.mu);
  nd.tau.name = tau.name;
  return nd;
}

CoxeterDatum with_mu(const CoxeterDatum& d, const Vec& mu) {
  CoxeterDatum nd = finish_datum(d.rd, d.sigma0, d.sigma0_mat,
                                 TauSpec::explicit_aff(d.tau.a), mu);
  nd.tau.name = d.tau.name;
  return nd;
}

namespace {

void automorphism_search(const RootDatum& rd, std::vector<int>& perm,
                         std::vector<bool>& used, int i,
                         std::vector<std::vector<int>>& out) {
  if (i == rd.rank) {
    out.push_back(perm);
    return;
  }
  for (int j = 0; j < rd.rank; ++j) {
    if (used[static_cast<size_t>(j)]) continue;
    bool ok = rd.cartan(i, i) == rd.cartan(j, j);
    for (int a = 0; a < i && ok; ++a) {
      int pa = perm[static_cast<size_t>(a)];
      if (rd.cartan(i, a) != rd.cartan(j, pa) || rd.cartan(a, i) != rd.cartan(pa, j))
        ok = false;
    }
    if (!ok) continue;
    perm[static_cast<size_t>(i)] = j;
    used[static_cast<size_t>(j)] = true;
    automorphism_search(rd, perm, used, i + 1, out);
    used[static_cast<size_t>(j)] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> diagram_automorphisms(const RootDatum& rd) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<size_t>(rd.rank), -1);
  std::vector<bool> used(static_cast<size_t>(rd.rank), false);
  automorphism_search(rd, perm, used, 0, out);
  return out;
}

}  // namespace bgmu
