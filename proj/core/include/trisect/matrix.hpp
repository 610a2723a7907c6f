#ifndef TRISECT_MATRIX_HPP
#define TRISECT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace trisect {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over Z with exact arbitrary-precision entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntegerMatrix multiply(const IntegerMatrix& other) const;

  /// Exact determinant (square matrices), via fraction-free elimination.
  BigInt determinant() const;

  bool operator==(const IntegerMatrix&) const = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithNormalForm {
  IntegerMatrix d;  // diagonal, nonnegative, d_i | d_(i+1)
  IntegerMatrix u;  // unimodular, rows x rows
  IntegerMatrix v;  // unimodular, cols x cols
};

/// Diagonalizes A by unimodular row and column operations: u * A * v = d
/// with the divisibility chain on the diagonal. Pivot choice: smallest
/// nonzero absolute value, ties broken row-major.
SmithNormalForm smith_normal_form(const IntegerMatrix& a);

}  // namespace trisect

#endif  // TRISECT_MATRIX_HPP
