#include "toric/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <utility>

#include "toric/error.hpp"

namespace toric {

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::kInvalidInput, "ragged matrix literal");
    }
    for (long v : r) data_.emplace_back(v);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(std::span<const IntVec> rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorKind::kInvalidInput, "row length mismatch");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_columns(std::span<const IntVec> columns, std::size_t rows) {
  IntMat m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_col(j, columns[j]);
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMat::col(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<IntVec> IntMat::row_list() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<IntVec> IntMat::column_list() const {
  std::vector<IntVec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

void IntMat::set_col(std::size_t j, const IntVec& v) {
  if (v.size() != rows_) {
    throw Error(ErrorKind::kInvalidInput, "column length mismatch");
  }
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return sgn(x) == 0; });
}

bool IntMat::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return sgn(x) >= 0; });
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMat::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMat::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMat::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kInvalidInput, "matrix product shape mismatch");
  }
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMat& a, const IntVec& x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorKind::kInvalidInput, "matrix-vector shape mismatch");
  }
  IntVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  return y;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kInvalidInput, "matrix difference shape mismatch");
  }
  IntMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

IntMat hstack(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorKind::kInvalidInput, "hstack row mismatch");
  }
  IntMat c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).get_str();
    }
    os << ']';
  }
  return os << ']';
}

IntVec make_vec(std::initializer_list<long> values) {
  IntVec v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntVec zeros(std::size_t n) { return IntVec(n); }

IntVec unit_vector(std::size_t n, std::size_t i) {
  IntVec v(n);
  v[i] = 1;
  return v;
}

IntVec add(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVec scale(const IntVec& a, const Int& s) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
  return c;
}

Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int norm1(const IntVec& v) {
  Int s;
  for (const auto& x : v) s += abs(x);
  return s;
}

std::size_t support_size(const IntVec& v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](const Int& x) { return sgn(x) != 0; }));
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

bool is_nonnegative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) >= 0; });
}

bool is_strictly_positive(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) > 0; });
}

bool leq(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntVec positive_part(const IntVec& v) {
  IntVec p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) > 0) p[i] = v[i];
  return p;
}

IntVec negative_part(const IntVec& v) {
  IntVec p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) < 0) p[i] = -v[i];
  return p;
}

IntVec primitive(const IntVec& v) {
  Int g;
  for (const auto& x : v) g = gcd(g, x);
  if (sgn(g) == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

bool graded_lex_less(const IntVec& a, const IntVec& b) {
  Int da, db;
  for (const auto& x : a) da += x;
  for (const auto& x : b) db += x;
  if (da != db) return da < db;
  return a < b;
}

bool generator_less(const IntVec& a, const IntVec& b) {
  const Int na = norm1(a), nb = norm1(b);
  if (na != nb) return na < nb;
  const auto sa = support_size(a), sb = support_size(b);
  if (sa != sb) return sa < sb;
  return b < a;
}

bool norm_lex_less(const IntVec& a, const IntVec& b) {
  const Int na = norm1(a), nb = norm1(b);
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace toric
