#pragma once

#include <string>
#include <vector>

#include "coinv/polynomial.hpp"

namespace coinv {

/// Dense matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

  void set_column(int c, const std::vector<Rational>& v);
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  bool is_zero() const;

  int rank() const;
  /// Throws NoSolution when singular or not square.
  Matrix inverse() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace coinv
