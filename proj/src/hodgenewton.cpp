#include "bgmu/hodgenewton.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bgmu {

namespace {

std::string mat_key(const Mat& m) {
  std::ostringstream os;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) os << rat_str(m(i, j)) << ",";
  return os.str();
}

void require_twist_stable(const CoxeterDatum& d, const std::vector<int>& J) {
  if (!std::is_sorted(J.begin(), J.end())) throw std::invalid_argument("J: nodes must be sorted");
  std::set<int> in(J.begin(), J.end());
  if (in.size() != J.size()) throw std::invalid_argument("J: duplicate node");
  for (int j : J) {
    if (j < 0 || j >= d.rd.rank) throw std::invalid_argument("J: node out of range");
    for (int k : d.orbits[static_cast<std::size_t>(d.orbit_of[static_cast<std::size_t>(j)])])
      if (!in.count(k)) throw std::invalid_argument("J: not stable under the diagram twist");
  }
}

// Regular dominant point of the subsystem spanned by the given coweight
// columns.
Vec coweight_sum(const RootDatum& rd, const std::vector<int>& nodes) {
  Vec v = Vec::Zero(rd.dim);
  for (int i : nodes) v += rd.coweights.col(i);
  return v;
}

}  // namespace

CoxeterDatum make_twisted_sub_datum(const RootDatum& sub_rd, const Aff& psi, const Vec& mu) {
  std::vector<int> all(static_cast<std::size_t>(sub_rd.rank));
  for (int i = 0; i < sub_rd.rank; ++i) all[static_cast<std::size_t>(i)] = i;
  Vec v_reg = coweight_sum(sub_rd, all);
  Dominantized dom = dominantize(sub_rd, Vec(psi.m * v_reg));
  Mat delta = Mat(dom.w * psi.m);
  for (int i = 0; i < sub_rd.rank; ++i)
    if (dot(Vec(delta * v_reg), sub_rd.simple_roots.col(i)) <= 0)
      throw std::logic_error("sub twist: corrected linear part is not chamber regular");
  Aff tau_datum = aff_mul(psi, aff_linear(mat_inverse(delta)));
  return make_coxeter_datum_mat(sub_rd, delta, TauSpec::explicit_aff(tau_datum), mu);
}

bool is_hn_decomposable(const CoxeterDatum& d, const SigmaClass& c, const std::vector<int>& J) {
  require_twist_stable(d, J);
  std::set<int> in(J.begin(), J.end());
  for (int w : wall_set(d.rd, c.nu))
    if (!in.count(w)) return false;
  Mat cols(d.rd.dim, static_cast<Eigen::Index>(J.size()));
  for (std::size_t k = 0; k < J.size(); ++k) cols.col(static_cast<Eigen::Index>(k)) = d.rd.simple_coroots.col(J[k]);
  Vec diff = Vec(d.mu_diamond - c.nu);
  Vec coef;
  try {
    coef = mat_solve(cols, diff);
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (Eigen::Index k = 0; k < coef.size(); ++k)
    if (coef(k) < 0) return false;
  return true;
}

std::vector<int> minimal_J(const CoxeterDatum& d, const SigmaClass& c) {
  std::vector<int> J = minimal_levi_support(d, c);
  std::set<int> in(J.begin(), J.end());
  for (int j : J)
    for (int k : d.orbits[static_cast<std::size_t>(d.orbit_of[static_cast<std::size_t>(j)])])
      if (!in.count(k)) throw std::logic_error("minimal Levi support is not twist stable");
  if (!is_hn_decomposable(d, c, J)) throw std::logic_error("class does not decompose into its minimal Levi");
  return J;
}

SigmaClass indec_max(const CoxeterDatum& d, const BGMuPoset& poset) {
  std::vector<int> all(static_cast<std::size_t>(d.rd.rank));
  for (int i = 0; i < d.rd.rank; ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<int> hits;
  for (int k = 0; k < poset.size(); ++k)
    if (minimal_levi_support(d, poset.elements[static_cast<std::size_t>(k)]) == all) hits.push_back(k);
  if (hits.empty()) throw std::logic_error("no indecomposable class");
  int best = hits[0];
  for (int k : hits)
    if (leq(d, poset.elements[static_cast<std::size_t>(best)], poset.elements[static_cast<std::size_t>(k)])) best = k;
  for (int k : hits)
    if (!leq(d, poset.elements[static_cast<std::size_t>(k)], poset.elements[static_cast<std::size_t>(best)]))
      throw std::logic_error("indecomposable classes have no unique maximum");
  if (best != poset.indec_index) throw std::logic_error("recomputed indecomposable maximum disagrees with the poset");
  return poset.elements[static_cast<std::size_t>(best)];
}

LeviDatum build_levi_datum(const CoxeterDatum& d, const std::vector<int>& J) {
  require_twist_stable(d, J);
  std::vector<int> complement;
  for (int i = 0; i < d.rd.rank; ++i)
    if (!std::binary_search(J.begin(), J.end(), i)) complement.push_back(i);
  Vec v_J = coweight_sum(d.rd, complement);
  Mat lin = Mat(d.tau.a.m * d.sigma0_mat);

  // Reflection matrices for right multiplication.
  std::vector<Mat> refl(static_cast<std::size_t>(d.rd.rank));
  for (int i = 0; i < d.rd.rank; ++i) {
    Mat r(d.rd.dim, d.rd.dim);
    for (Eigen::Index k = 0; k < d.rd.dim; ++k) {
      Vec e = Vec::Zero(d.rd.dim);
      e(k) = 1;
      r.col(k) = reflect_simple(d.rd, i, e);
    }
    refl[static_cast<std::size_t>(i)] = r;
  }

  WeylElement z;
  z.w = Mat::Identity(d.rd.dim, d.rd.dim);
  bool found = false;
  std::deque<WeylElement> queue{z};
  std::set<std::string> seen{mat_key(z.w)};
  auto min_rep = [&](const Mat& w) {
    // Minimal length in its coset modulo the Levi's Weyl group: every
    // J-simple maps to a positive root. This keeps the parent base alcove
    // inside the Levi's base alcove after transport, which makes the
    // leftover part of the conjugated twist length zero.
    for (int j : J) {
      int idx = 0, sign = 0;
      if (!d.rd.root_lookup(Vec(w * d.rd.simple_roots.col(j)), &idx, &sign))
        throw std::logic_error("transporter image of a simple root is not a root");
      if (sign < 0) return false;
    }
    return true;
  };
  while (!queue.empty()) {
    WeylElement cur = queue.front();
    queue.pop_front();
    Vec image = Vec(cur.w * v_J);
    if (vec_eq(Vec(lin * image), image) && min_rep(cur.w)) {
      z = cur;
      found = true;
      break;
    }
    for (int i = 0; i < d.rd.rank; ++i) {
      WeylElement nxt;
      nxt.w = Mat(cur.w * refl[static_cast<std::size_t>(i)]);
      std::string key = mat_key(nxt.w);
      if (seen.count(key)) continue;
      seen.insert(key);
      nxt.word = cur.word;
      nxt.word.push_back(i);
      queue.push_back(nxt);
    }
  }
  if (!found) throw std::logic_error("no transporter makes the twist fix the Levi's central point");

  Mat zinv = mat_inverse(z.w);
  Aff psi_m = aff_mul(aff_linear(zinv), aff_mul(d.sigma_aff(), aff_linear(z.w)));
  SubDatum sub = make_sub_datum(d.rd, J);
  LeviDatum out;
  out.J = J;
  out.z = z;
  out.tau_J = aff_mul(psi_m, aff_linear(mat_inverse(d.sigma0_mat)));
  out.mu_P = Vec(z.w * d.mu);
  out.inner = make_twisted_sub_datum(sub.rd, psi_m, d.mu);
  out.nodes = sub.nodes;
  if (!vec_eq(out.inner.mu_diamond, d.mu_diamond))
    throw std::logic_error("Levi datum disagrees with the parent on mu_diamond");
  return out;
}

SigmaClass restrict_class(const CoxeterDatum& d, const LeviDatum& levi, const SigmaClass& c) {
  if (!is_hn_decomposable(d, c, levi.J))
    throw std::invalid_argument("class does not decompose into this Levi");
  BGMuPoset pos = enumerate_bg_mu(levi.inner);
  int idx = pos.index_of(c.nu);
  if (idx < 0) throw std::logic_error("restricted class missing from the Levi poset");
  return pos.elements[static_cast<std::size_t>(idx)];
}

}  // namespace bgmu
