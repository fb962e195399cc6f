#include "bgmu/weyl.hpp"

#include <algorithm>

namespace bgmu {

Aff aff_identity(int dim) {
  return Aff{Vec::Zero(dim), Mat::Identity(dim, dim)};
}

Aff aff_translation(const Vec& lambda) {
  return Aff{lambda, Mat::Identity(lambda.size(), lambda.size())};
}

Aff aff_linear(const Mat& m) {
  return Aff{Vec::Zero(m.rows()), m};
}

Aff aff_mul(const Aff& a, const Aff& b) {
  return Aff{a.t + a.m * b.t, a.m * b.m};
}

Aff aff_inv(const Aff& a) {
  Mat mi = mat_inverse(a.m);
  return Aff{-(mi * a.t), mi};
}

Vec aff_apply(const Aff& a, const Vec& v) { return a.t + a.m * v; }

bool aff_eq(const Aff& a, const Aff& b) {
  return vec_eq(a.t, b.t) && mat_eq(a.m, b.m);
}

std::string aff_key(const Aff& a) {
  std::string key = vec_str(a.t) + "|";
  for (Eigen::Index j = 0; j < a.m.cols(); ++j) key += vec_str(a.m.col(j));
  return key;
}

AffineSystem affine_system(const RootDatum& rd) {
  AffineSystem sys;
  sys.rd = &rd;
  for (int i = 0; i < rd.rank; ++i)
    sys.simples.push_back(aff_linear(reflect_root_matrix(rd.dim, rd.simple_roots.col(i))));
  sys.n_finite = rd.rank;
  for (size_t c = 0; c < rd.components.size(); ++c) {
    Aff s0;
    s0.t = rd.theta_coroot[c];
    s0.m = reflect_root_matrix(rd.dim, rd.theta[c]);
    sys.simples.push_back(s0);
  }
  return sys;
}

Int aff_length(const RootDatum& rd, const Aff& a) {
  Mat mi = mat_inverse(a.m);
  Int len = 0;
  for (int k = 0; k < rd.npos(); ++k) {
    Rat c = dot(a.t, rd.pos_roots.col(k));
    if (!is_integer(c))
      throw std::invalid_argument("aff_length: non-integral translation pairing");
    Vec back = mi * rd.pos_roots.col(k);
    int idx = 0, sign = 0;
    if (!rd.root_lookup(back, &idx, &sign))
      throw std::invalid_argument("aff_length: linear part does not permute roots");
    Int term = rat_num(c);
    if (sign < 0) term -= 1;
    if (term < 0) term = -term;
    len += term;
  }
  return len;
}

std::vector<int> reduced_word(const AffineSystem& sys, Aff a) {
  const RootDatum& rd = *sys.rd;
  std::vector<int> word;
  Int len = aff_length(rd, a);
  while (len > 0) {
    bool found = false;
    for (size_t i = 0; i < sys.simples.size(); ++i) {
      Aff next = aff_mul(sys.simples[i], a);
      Int nl = aff_length(rd, next);
      if (nl < len) {
        word.push_back(static_cast<int>(i));
        a = next;
        len = nl;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("reduced_word: no descent at positive length");
  }
  if (!aff_eq(a, aff_identity(rd.dim)))
    throw std::invalid_argument("reduced_word: element not in the affine Weyl group");
  return word;
}

Int BruhatExplorer::length_of(const Aff& a) {
  std::string key = aff_key(a);
  auto it = lengths_.find(key);
  if (it != lengths_.end()) return it->second;
  Int len = aff_length(*sys_->rd, a);
  lengths_.emplace(key, len);
  return len;
}

const std::set<std::string>& BruhatExplorer::lower(const Aff& a) {
  std::string key = aff_key(a);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  registry_.emplace(key, a);
  Int len = length_of(a);
  std::set<std::string> result;
  if (len == 0) {
    result.insert(key);
  } else {
    // Peel one left descent: the lower cone of s*a' is the lower cone of a'
    // together with its left translates by s (subword property).
    for (size_t i = 0; i < sys_->simples.size(); ++i) {
      Aff prev = aff_mul(sys_->simples[i], a);
      if (length_of(prev) < len) {
        const std::set<std::string> base = lower(prev);
        result = base;
        for (const std::string& bk : base) {
          Aff moved = aff_mul(sys_->simples[i], registry_.at(bk));
          std::string mk = aff_key(moved);
          registry_.emplace(mk, moved);
          result.insert(mk);
        }
        break;
      }
    }
    if (result.empty())
      throw std::invalid_argument("bruhat lower: no descent at positive length");
  }
  auto [pos, inserted] = memo_.emplace(key, std::move(result));
  (void)inserted;
  return pos->second;
}

bool in_affine_weyl(const RootDatum& rd, const AbelianQuotient& pq, const Aff& a) {
  IVec c = lattice_coords(rd, a.t);
  return pq.is_zero(pq.class_of(c));
}

}  // namespace bgmu
