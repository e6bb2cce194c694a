#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coinv/matrix.hpp"
#include "coinv/quotient.hpp"
#include "coinv/report.hpp"
#include "coinv/shapes.hpp"

namespace coinv {

/// C_nu when mu is absent, otherwise C^mu_nu (block-elementary generators).
QuotientPresentation::Ptr algebra_for(const std::optional<Composition>& mu, const Composition& nu);

// ---------------------------------------------------------------- the pair algebra

/// C^{S_nu cap S_nu'}: the algebra that is free over C_nu with basis
/// 1, x_k, .., x_k^a and over C_nu' with basis 1, x_k, .., x_k^b.
QuotientPresentation::Ptr pair_algebra(const KeySituation& ks);
/// Image of an element of C_nu or C_nu' (or of an invariant polynomial) in the pair algebra.
QuotientElement to_pair(const KeySituation& ks, const QuotientElement& z);
QuotientElement to_pair(const KeySituation& ks, const Polynomial& f);
/// x_k^r in the pair algebra.
QuotientElement xk_power(const KeySituation& ks, int r);

enum class Side { nu, nu_prime };

/// Coefficients z_0..z_a in C_nu (side nu) or z_0..z_b in C_nu' (side nu')
/// with f = sum_r z_r x_k^r in the pair algebra. The polynomial overload
/// throws NoSolution when f is not invariant under S_nu cap S_nu'.
std::vector<QuotientElement> decompose_over(const KeySituation& ks, const QuotientElement& f, Side side);
std::vector<QuotientElement> decompose_over(const KeySituation& ks, const Polynomial& f, Side side);
/// sum_r z_r x_k^r in the pair algebra.
QuotientElement recompose(const KeySituation& ks, const std::vector<QuotientElement>& coeffs);

// ---------------------------------------------------------------- operators

/// F_i at the level of invariant polynomials: P_nu -> P_nu'.
Polynomial apply_F_poly(const KeySituation& ks, const Polynomial& f);
/// E_i at the level of invariant polynomials: P_nu' -> P_nu.
Polynomial apply_E_poly(const KeySituation& ks, const Polynomial& f);

/// F_i and E_i on quotients through the polynomial formulas: the stored
/// representative is pushed through and reduced in the target, which is
/// C_nu' (resp. C_nu) or C^mu_nu' (resp. C^mu_nu) matching the source.
QuotientElement apply_F(const KeySituation& ks, const QuotientElement& z);
QuotientElement apply_E(const KeySituation& ks, const QuotientElement& z);

/// The same maps on C_nu computed from the free-module description:
/// F(x_k^r) = (-1)^a sum_s (-1)^s e_s(nu';i) h_{r-s+a-b}(nu';i+1) over C_nu',
/// E(x_k^r) = (-1)^a sum_s (-1)^s e_s(nu;i+1) h_{r-s+b-a}(nu;i) over C_nu.
QuotientElement apply_F_oracle(const KeySituation& ks, const QuotientElement& z);
QuotientElement apply_E_oracle(const KeySituation& ks, const QuotientElement& z);

/// C_nu-linear push-forward p_*(x_k^r) = (-1)^a h_{r-a}(nu;i).
QuotientElement push_p(const KeySituation& ks, const QuotientElement& f);
/// C_nu'-linear push-forward p'_*(x_k^r) = h_{r-b}(nu';i+1).
QuotientElement push_p_prime(const KeySituation& ks, const QuotientElement& f);
/// The same maps realized as (1/eps) * antisymmetrization of eps_{nu,nu'} f.
QuotientElement push_p_antisym(const KeySituation& ks, const Polynomial& f);
QuotientElement push_p_prime_antisym(const KeySituation& ks, const Polynomial& f);

/// Multiplication by nu_i.
QuotientElement apply_D(int i, const Composition& nu, const QuotientElement& z);

// ---------------------------------------------------------------- families

enum class OpKind { D, E, F };

struct Operator {
  OpKind kind;
  int i;
  std::string to_string() const;
  friend bool operator==(const Operator&, const Operator&) = default;
};

/// "F_2 F_1 E_2" (also accepts commas); throws InvalidInput.
std::vector<Operator> parse_word(const std::string& text);

/// Element of the direct sum over weights nu supported in [lo, hi].
struct WeightFamily {
  int n = 0;
  int lo = 1;
  int hi = 0;
  std::optional<Composition> mu;
  std::map<Composition, QuotientElement> components;  // absent means zero

  static WeightFamily single(const QuotientElement& z, int lo, int hi);
  bool is_zero() const;
};

/// Applies the word right to left (the rightmost operator acts first).
/// Throws WindowOverflow when an operator index leaves the window.
WeightFamily apply_operator_family(const std::vector<Operator>& word, const WeightFamily& wf);

/// Matrix of an operator from the algebra at `source` to the one at
/// `target` (set on return), against the basis() of each; nullopt when the
/// operator is zero on that weight. Polynomial route, cached.
std::optional<Matrix> operator_matrix(const Operator& op, const Composition& source,
                                      const std::optional<Composition>& mu, Composition& target);
/// Same with the free-module formulas (regular mu only, E and F only).
std::optional<Matrix> oracle_matrix(const Operator& op, const Composition& source, Composition& target);

// ---------------------------------------------------------------- reports

/// Every key situation (nu, i) with nu a composition of n in [lo, hi] and i, i+1 in the window.
std::vector<KeySituation> key_situations(int n, int lo, int hi);

/// Commutator relations and Serre relations on every basis vector of every weight space.
Report relation_report(int n, int lo, int hi, const std::optional<Composition>& mu);

/// Polynomial-level operators agree with the free-module formulas; degree
/// shifts; agreement of the two push-forward realizations.
Report oracle_report(int n, int lo, int hi);

/// Images of generator multiples of the h-form ideal stay in the ideal of the
/// target, for F and E; images are independent of the chosen lift.
Report ideal_invariance_check(const Composition& mu, int lo, int hi);

/// dim C^mu_nu against column-strict fillings; vanishing against dominance;
/// top degree and its dimension against d^mu_nu and Kostka numbers;
/// highest-weight vectors.
Report weight_dim_report(const Composition& mu, int lo, int hi);

/// Graded dimensions of C^mu_nu against t^{d} sum K_{kappa,nu} K_{tau,mu}(t^-2).
/// Both sides as coefficient lists in t (doubled grading); true when equal.
struct HilbertSides {
  std::vector<long> left;
  std::vector<long> right;
  bool negative_powers = false;  // the right side is not a polynomial
};
HilbertSides hilbert_identity_sides(const Composition& mu, const Composition& nu);
bool hilbert_identity_check(const Composition& mu, const Composition& nu);

}  // namespace coinv
