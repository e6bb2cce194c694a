#include "coinv/matrix.hpp"

#include "coinv/errors.hpp"

namespace coinv {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) m.at(j, j) = 1;
  return m;
}

void Matrix::set_column(int c, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != rows_) throw InvalidInput("column has the wrong length");
  for (int r = 0; r < rows_; ++r) at(r, c) = v[static_cast<std::size_t>(r)];
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidInput("vector has the wrong length");
  std::vector<Rational> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (at(r, c) != 0 && v[static_cast<std::size_t>(c)] != 0) out[static_cast<std::size_t>(r)] += at(r, c) * v[static_cast<std::size_t>(c)];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const Rational& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

int Matrix::rank() const {
  Matrix a = *this;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = r;
    while (p < rows_ && a.at(p, c) == 0) ++p;
    if (p == rows_) continue;
    for (int j = 0; j < cols_; ++j) std::swap(a.at(p, j), a.at(r, j));
    for (int q = r + 1; q < rows_; ++q) {
      if (a.at(q, c) == 0) continue;
      Rational f = a.at(q, c) / a.at(r, c);
      for (int j = c; j < cols_; ++j) a.at(q, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw NoSolution("cannot invert a " + std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  int n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) throw NoSolution("singular matrix");
    if (p != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(p, j), a.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    }
    Rational s = 1 / a.at(c, c);
    for (int j = 0; j < n; ++j) {
      a.at(c, j) *= s;
      inv.at(c, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a.at(r, c) == 0) continue;
      Rational t = a.at(r, c);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= t * a.at(c, j);
        inv.at(r, j) -= t * inv.at(c, j);
      }
    }
  }
  return inv;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix shapes do not match");
  Matrix m(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < b.cols_; ++c) {
        if (b.at(k, c) != 0) m.at(r, c) += x * b.at(k, c);
      }
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix shapes do not match");
  Matrix m = a;
  for (std::size_t j = 0; j < m.a_.size(); ++j) m.a_[j] += b.a_[j];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix m = a;
  for (Rational& x : m.a_) x *= c;
  return m;
}

}  // namespace coinv
