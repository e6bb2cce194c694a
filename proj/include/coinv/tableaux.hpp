#pragma once

#include <string>
#include <vector>

#include "coinv/shapes.hpp"

namespace coinv {

/// Rows listed top to bottom, entries left to right. Columns strictly
/// increase from top to bottom (the usual English convention; reading a
/// column upwards instead gives the bottom-to-top convention).
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  bool column_strict() const;
  bool rows_weakly_increasing() const;
  /// Rows from bottom to top, each read left to right.
  std::vector<int> reading_word() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Polynomial in t with integer coefficients, constant term first, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long> coeffs);

  const std::vector<long>& coeffs() const { return coeffs_; }
  long coeff(int r) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long at_one() const;
  void add_term(int r, long c);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  std::string to_string() const;

 private:
  void trim();
  std::vector<long> coeffs_;
};

/// Fillings of lam with exactly nu_i entries equal to i, strictly increasing
/// down every column, no condition on rows.
long count_column_strict(const Partition& lam, const Composition& nu);
/// The same fillings, in lexicographic order of their row-major entry sequences.
std::vector<Tableau> enumerate_column_strict(const Partition& lam, const Composition& nu);

/// Semistandard tableaux of shape lam with content nu, same order.
std::vector<Tableau> enumerate_semistandard(const Partition& lam, const Composition& nu);
long kostka(const Partition& lam, const Composition& nu);

/// Lascoux-Schutzenberger charge of a word with partition content.
int charge_word(const std::vector<int>& word);
int charge(const Tableau& t);

/// sum over semistandard tableaux T of shape tau and content mu^+ of t^charge(T).
IntPolynomial kostka_foulkes(const Partition& tau, const Composition& mu);

}  // namespace coinv
