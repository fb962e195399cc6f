#pragma once

// Exact scalar layer shared by every module: GMP integers and rationals
// wired into Eigen dense types. Nothing downstream touches floating point.
// Dense decompositions are done by hand (Gauss elimination) because only
// storage and ring arithmetic are needed.

#include <gmpxx.h>

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace bgmu {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Canonicalized fraction; the raw two-argument mpq_class constructor does
// not reduce.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(Rat(-q)); }

inline Rat frac_part(const Rat& q) { return q - Rat(rat_floor(q)); }

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// "3", "-2/3"; denominators of 1 are suppressed.
std::string rat_str(const Rat& q);

// Accepts optional sign, integer or numerator/denominator form.
Rat rat_parse(const std::string& s);

// "(1/2,0,0,-1/2)"
std::string vec_str(const Vec& v);

// Comma or whitespace separated rationals, with or without parentheses.
Vec vec_parse(const std::string& s);

inline bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline bool vec_is_zero(const Vec& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

inline bool mat_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Exact inverse by Gauss-Jordan elimination; throws on a singular matrix.
Mat mat_inverse(const Mat& m);

// Exact solution of m*x = rhs, m of any shape; free variables are set to
// zero. Throws std::invalid_argument if the system is inconsistent.
Vec mat_solve(const Mat& m, const Vec& rhs);

// Basis of the right kernel of m, one column per free variable.
Mat mat_kernel(const Mat& m);

int mat_rank(const Mat& m);

// Least-significant lex key for deterministic ordering of exact vectors.
bool vec_less(const Vec& a, const Vec& b);

}  // namespace bgmu
