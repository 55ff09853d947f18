#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Int>;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Matrices with zero rows or zero columns are legal and carry their shape,
/// so an n x 0 kernel basis still knows n.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(std::span<const IntVec> rows, std::size_t cols);
  static IntMat from_columns(std::span<const IntVec> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  std::vector<IntVec> row_list() const;
  std::vector<IntVec> column_list() const;
  void set_col(std::size_t j, const IntVec& v);

  IntMat transpose() const;
  bool is_zero() const;
  bool is_nonnegative() const;

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMat& a, const IntMat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntMat& a, const IntVec& x);
IntMat operator-(const IntMat& a, const IntMat& b);
IntMat hstack(const IntMat& a, const IntMat& b);

std::ostream& operator<<(std::ostream& os, const IntMat& m);

// Vector helpers.
IntVec make_vec(std::initializer_list<long> values);
IntVec zeros(std::size_t n);
IntVec unit_vector(std::size_t n, std::size_t i);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Int& s);
Int dot(const IntVec& a, const IntVec& b);
Int norm1(const IntVec& v);
std::size_t support_size(const IntVec& v);
bool is_zero(const IntVec& v);
bool is_nonnegative(const IntVec& v);
bool is_strictly_positive(const IntVec& v);
/// Componentwise a <= b.
bool leq(const IntVec& a, const IntVec& b);
IntVec positive_part(const IntVec& v);
IntVec negative_part(const IntVec& v);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);
std::string to_string(const IntVec& v);

/// Total degree, then lexicographic. Used for fibers and tie-breaking.
bool graded_lex_less(const IntVec& a, const IntVec& b);

/// Order for generator lists (Hilbert basis columns, cone and semigroup
/// generators): 1-norm, then support size, then reverse lexicographic.
bool generator_less(const IntVec& a, const IntVec& b);

/// 1-norm then lexicographic, for kernel bases.
bool norm_lex_less(const IntVec& a, const IntVec& b);

}  // namespace toric
