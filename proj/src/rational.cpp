#include "bgmu/rational.hpp"

#include <sstream>

namespace bgmu {

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << rat_num(q);
  if (rat_den(q) != 1) os << "/" << rat_den(q);
  return os.str();
}

Rat rat_parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("rat_parse: empty token");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(t));
    Int num(t.substr(0, slash));
    Int den(t.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  }
}

std::string vec_str(const Vec& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  out += ")";
  return out;
}

Vec vec_parse(const std::string& s) {
  std::string t;
  for (char c : s) {
    if (c == '(' || c == ')' || c == '[' || c == ']') continue;
    t += (c == ',') ? ' ' : c;
  }
  std::istringstream is(t);
  std::vector<Rat> vals;
  std::string tok;
  while (is >> tok) vals.push_back(rat_parse(tok));
  Vec v(static_cast<Eigen::Index>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
  return v;
}

namespace {

// Reduced row echelon form on the leading `main_cols` columns; trailing
// columns ride along as an augmented block. Returns the pivot column of
// each pivot row.
std::vector<int> rref(Mat& a, Eigen::Index main_cols) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < main_cols && row < a.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = row; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row) a.row(sel).swap(a.row(row));
    Rat inv_pivot = Rat(1) / a(row, col);
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(row, j) *= inv_pivot;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

Mat mat_inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("mat_inverse: not square");
  const Eigen::Index n = m.rows();
  Mat a(n, 2 * n);
  a.leftCols(n) = m;
  a.rightCols(n) = Mat::Identity(n, n);
  std::vector<int> pivots = rref(a, n);
  if (static_cast<Eigen::Index>(pivots.size()) != n)
    throw std::invalid_argument("mat_inverse: singular matrix");
  return a.rightCols(n);
}

Vec mat_solve(const Mat& m, const Vec& rhs) {
  if (m.rows() != rhs.size()) throw std::invalid_argument("mat_solve: size mismatch");
  Mat a(m.rows(), m.cols() + 1);
  a.leftCols(m.cols()) = m;
  a.col(m.cols()) = rhs;
  std::vector<int> pivots = rref(a, m.cols());
  Vec x = Vec::Zero(m.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = a(static_cast<Eigen::Index>(r), m.cols());
  for (Eigen::Index i = static_cast<Eigen::Index>(pivots.size()); i < a.rows(); ++i)
    if (a(i, m.cols()) != 0)
      throw std::invalid_argument("mat_solve: inconsistent system");
  return x;
}

Mat mat_kernel(const Mat& m) {
  Mat a = m;
  std::vector<int> pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<int> free_cols;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(static_cast<int>(c));
  Mat k = Mat::Zero(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    Eigen::Index f = free_cols[fi];
    k(f, static_cast<Eigen::Index>(fi)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      k(pivots[r], static_cast<Eigen::Index>(fi)) = -a(static_cast<Eigen::Index>(r), f);
  }
  return k;
}

int mat_rank(const Mat& m) {
  Mat a = m;
  return static_cast<int>(rref(a, m.cols()).size());
}

bool vec_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace bgmu
