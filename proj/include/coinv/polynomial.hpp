#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coinv {

using Rational = mpq_class;

// Exponents are packed one byte per variable, x_1 in the most significant
// byte, so that comparing the packed words compares lexicographically.
constexpr int kMaxVars = 8;
constexpr int kMaxDegree = 255;

struct Monomial {
  std::uint64_t bits = 0;
  int deg = 0;

  static Monomial from_exponents(const std::vector<int>& exps);
  static Monomial variable(int j, int power = 1);

  // exponent of x_j, j 1-based
  int exp(int j) const {
    return static_cast<int>((bits >> (8 * (kMaxVars - j))) & 0xffu);
  }
  std::vector<int> exponents(int n) const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.bits == b.bits; }
};

// graded lexicographic: total degree first, then lex with x_1 > x_2 > ...
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  return a.deg != b.deg ? a.deg < b.deg : a.bits < b.bits;
}

struct Term {
  Monomial m;
  Rational c;
};

/// Sparse polynomial in x_1..x_n over Q. Terms are kept sorted by decreasing
/// graded-lex order with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  explicit Polynomial(int n = 0);
  Polynomial(int n, std::vector<Term> terms);  // any order, duplicates allowed

  static Polynomial constant(int n, const Rational& c);
  static Polynomial variable(int n, int j);
  static Polynomial monomial(int n, const Monomial& m, const Rational& c = 1);

  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest exponent sum among terms; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int d) const;
  /// Exponent sums occurring, ascending.
  std::vector<int> degrees() const;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  /// this += c * m * g, the inner step of division and reduction.
  void add_scaled(const Rational& c, const Monomial& m, const Polynomial& g);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// "x1^2*x3 - 1/2*x2 + 3"
  std::string to_string() const;

 private:
  void check_same_ring(const Polynomial& o) const;

  int n_ = 0;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, int e);

/// Substitute x_j -> x_{w(j)}; w is one-line notation, w[j-1] = w(j).
Polynomial apply_permutation(const std::vector<int>& w, const Polynomial& f);

/// f / g, throwing NotDivisible if g does not divide f exactly.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace coinv
