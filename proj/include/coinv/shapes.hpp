#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coinv {

class Partition;

/// A finitely supported function Z -> N, stored as a run of parts starting at
/// index lo(). Leading and trailing zeros are trimmed on construction, so two
/// compositions compare equal exactly when they agree as functions; the
/// absolute position of the support is significant.
class Composition {
 public:
  Composition() = default;
  Composition(int lo, std::vector<int> parts);

  /// Parts of a partition laid out from index lo upwards.
  static Composition from_partition(const Partition& p, int lo = 1);
  /// (1,1,...,1) of length n starting at lo.
  static Composition regular(int n, int lo = 1);

  int lo() const { return lo_; }
  /// Last index of the support; lo() - 1 when empty.
  int hi() const { return lo_ + static_cast<int>(parts_.size()) - 1; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int total() const { return total_; }

  /// nu_i for any integer i (zero outside the support).
  int operator[](int i) const;
  /// sum_{h <= i} nu_h
  int prefix_sum(int i) const;
  /// Non-zero parts in index order; determines the block structure of P_nu.
  std::vector<int> nonzero_parts() const;
  /// Indices i with nu_i > 0, ascending.
  std::vector<int> support() const;
  bool is_regular() const;

  /// Copy with nu_i += delta (the result must stay non-negative).
  Composition adjusted(int i, int delta) const;

  /// "1,2,1@1" style; the empty composition prints as "@0".
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  int lo_ = 0;
  std::vector<int> parts_;
  int total_ = 0;
};

/// Weakly decreasing sequence of positive integers (zeros dropped).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// lambda_j, 1-based; zero beyond the length.
  int part(int j) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// lambda_j = #{i : mu_i >= j}
Partition transpose(const Composition& mu);
Partition transpose(const Partition& lam);

/// nu^+: the parts of nu sorted decreasingly, zeros dropped.
Partition sort_to_partition(const Composition& nu);

/// Dominance order; throws InvalidInput when the totals differ.
bool dominates(const Partition& lam, const Partition& kap);

/// n(n-1) - sum_i nu_i(nu_i - 1), in the doubled grading.
int d_nu(const Composition& nu);

/// Top degree (doubled grading) of the algebra attached to (mu, nu);
/// nullopt when transpose(mu) does not dominate nu^+ (the algebra is zero).
std::optional<int> d_mu_nu(const Composition& mu, const Composition& nu);

/// All compositions of n supported in [lo, hi], descending lexicographic order
/// on the window vector: (2,0), (1,1), (0,2).
std::vector<Composition> compositions_of(int n, int lo, int hi);

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

std::uint64_t factorial(int n);

/// Moving one unit of weight from index i to i+1: nu' = nu - delta_i + delta_{i+1}.
/// a = nu_i - 1, b = nu_{i+1}, k = sum_{j <= i} nu_j, so x_k is the last
/// variable of block i for nu and the first of block i+1 for nu'.
struct KeySituation {
  int i = 0;
  Composition nu;
  Composition nu_prime;
  int a = 0;
  int b = 0;
  int k = 0;
  /// Block sizes of the intersection S_nu and S_nu' (zeros dropped, offset 1).
  Composition rho;

  /// Throws InvalidInput unless nu_i > 0.
  static KeySituation at(const Composition& nu, int i);
  /// The key situation relating nu to nu', if there is one.
  static std::optional<KeySituation> between(const Composition& nu, const Composition& nu_prime);
};

}  // namespace coinv
