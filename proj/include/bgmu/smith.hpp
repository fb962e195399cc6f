#pragma once

// Smith normal form over arbitrary-precision integers, and the finitely
// generated abelian quotient Z^r / <columns> built on top of it. The
// quotient is what fundamental-group and component-group computations
// reduce to; classes are stored in a canonical residue form so they can
// be compared and hashed directly.

#include "bgmu/rational.hpp"

namespace bgmu {

// U * A * V = D with U, V unimodular and D diagonal, each diagonal entry
// dividing the next.
struct Smith {
  IMat u;
  IMat v;
  IMat d;
};

Smith smith_normal_form(IMat a);

struct AbelianQuotient {
  int rank = 0;            // ambient rank r
  IMat u;                  // unimodular row transform from the SNF
  IMat u_inv;
  std::vector<Int> diag;   // r entries; 0 marks a free coordinate

  // Canonical class of an ambient vector: coordinates of u*x, reduced
  // modulo diag[i] wherever diag[i] is nonzero.
  std::vector<Int> class_of(const IVec& x) const;
  IVec representative(const std::vector<Int>& cls) const;

  std::vector<Int> zero_class() const;
  std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> neg(const std::vector<Int>& a) const;
  bool is_zero(const std::vector<Int>& a) const;

  // Order of the class in the torsion part; throws if the class has a free
  // coordinate set (infinite order).
  Int order_of(const std::vector<Int>& a) const;

  // "Z/4", "Z/2 x Z/2 x Z", "0"
  std::string group_str() const;
  std::string class_str(const std::vector<Int>& cls) const;
};

// Quotient of Z^rank by the column span of gens (rank x k matrix).
AbelianQuotient make_quotient(int rank, const IMat& gens);

}  // namespace bgmu
