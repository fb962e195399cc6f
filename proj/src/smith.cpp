#include "bgmu/smith.hpp"

#include <sstream>

namespace bgmu {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division so that remainders land in [0, |b|).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int pos_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += int_abs(m);
  return r;
}

}  // namespace

Smith smith_normal_form(IMat a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  IMat u = IMat::Identity(rows, rows);
  IMat v = IMat::Identity(cols, cols);

  auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
  };
  auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
  };
  auto add_row = [&](Eigen::Index dst, Eigen::Index src, const Int& f) {
    a.row(dst) += f * a.row(src);
    u.row(dst) += f * u.row(src);
  };
  auto add_col = [&](Eigen::Index dst, Eigen::Index src, const Int& f) {
    a.col(dst) += f * a.col(src);
    v.col(dst) += f * v.col(src);
  };

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    // Locate the smallest nonzero entry in the trailing block.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (a(i, j) != 0 &&
            (pi < 0 || int_abs(a(i, j)) < int_abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) swap_rows(t, pi);
    if (pj != t) swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q = floor_div(a(i, t), a(t, t));
        add_row(i, t, -q);
        if (a(i, t) != 0) {
          swap_rows(t, i);
          dirty = true;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q = floor_div(a(t, j), a(t, t));
        add_col(j, t, -q);
        if (a(t, j) != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide every remaining entry; if not, fold the offending
      // row in and reduce again.
      for (Eigen::Index i = t + 1; i < rows && !dirty; ++i)
        for (Eigen::Index j = t + 1; j < cols && !dirty; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(t, i, 1);
            dirty = true;
          }
    }
    if (a(t, t) < 0) {
      a.row(t) *= Int(-1);
      u.row(t) *= Int(-1);
    }
  }
  return Smith{u, v, a};
}

std::vector<Int> AbelianQuotient::class_of(const IVec& x) const {
  if (x.size() != rank) throw std::invalid_argument("class_of: size mismatch");
  IVec y = u * x;
  std::vector<Int> cls(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    const Int& d = diag[static_cast<size_t>(i)];
    cls[static_cast<size_t>(i)] = (d == 0) ? y[i] : pos_mod(y[i], d);
  }
  return cls;
}

IVec AbelianQuotient::representative(const std::vector<Int>& cls) const {
  IVec y(rank);
  for (int i = 0; i < rank; ++i) y[i] = cls[static_cast<size_t>(i)];
  return u_inv * y;
}

std::vector<Int> AbelianQuotient::zero_class() const {
  return std::vector<Int>(static_cast<size_t>(rank), Int(0));
}

std::vector<Int> AbelianQuotient::add(const std::vector<Int>& a,
                                      const std::vector<Int>& b) const {
  std::vector<Int> c(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    size_t k = static_cast<size_t>(i);
    c[k] = a[k] + b[k];
    if (diag[k] != 0) c[k] = pos_mod(c[k], diag[k]);
  }
  return c;
}

std::vector<Int> AbelianQuotient::neg(const std::vector<Int>& a) const {
  std::vector<Int> c(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    size_t k = static_cast<size_t>(i);
    c[k] = -a[k];
    if (diag[k] != 0) c[k] = pos_mod(c[k], diag[k]);
  }
  return c;
}

bool AbelianQuotient::is_zero(const std::vector<Int>& a) const {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

Int AbelianQuotient::order_of(const std::vector<Int>& a) const {
  Int ord = 1;
  for (int i = 0; i < rank; ++i) {
    size_t k = static_cast<size_t>(i);
    if (a[k] == 0) continue;
    if (diag[k] == 0) throw std::invalid_argument("order_of: infinite order");
    Int d = diag[k];
    Int o = d / int_gcd(a[k], d);
    ord = ord / int_gcd(ord, o) * o;
  }
  return ord;
}

std::string AbelianQuotient::group_str() const {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < rank; ++i) {
    const Int& d = diag[static_cast<size_t>(i)];
    if (d == 1) continue;
    if (any) os << " x ";
    if (d == 0)
      os << "Z";
    else
      os << "Z/" << d;
    any = true;
  }
  return any ? os.str() : "0";
}

std::string AbelianQuotient::class_str(const std::vector<Int>& cls) const {
  std::ostringstream os;
  os << "[";
  bool any = false;
  for (int i = 0; i < rank; ++i) {
    if (diag[static_cast<size_t>(i)] == 1) continue;
    if (any) os << ",";
    os << cls[static_cast<size_t>(i)];
    any = true;
  }
  os << "]";
  return os.str();
}

AbelianQuotient make_quotient(int rank, const IMat& gens) {
  IMat g = gens;
  if (g.rows() != rank) throw std::invalid_argument("make_quotient: row mismatch");
  if (g.cols() == 0) g = IMat::Zero(rank, 1);
  Smith s = smith_normal_form(g);
  AbelianQuotient q;
  q.rank = rank;
  q.u = s.u;
  q.diag.assign(static_cast<size_t>(rank), Int(0));
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(rank, s.d.cols()); ++i)
    q.diag[static_cast<size_t>(i)] = s.d(i, i);
  // Invert the unimodular transform exactly via rational LU.
  Mat ur(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) ur(i, j) = Rat(q.u(i, j));
  Mat inv = mat_inverse(ur);
  q.u_inv.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (!is_integer(inv(i, j)))
        throw std::logic_error("make_quotient: non-integral inverse");
      q.u_inv(i, j) = rat_num(inv(i, j));
    }
  return q;
}

}  // namespace bgmu
