#pragma once

#include <vector>

#include "coinv/glaction.hpp"
#include "coinv/quotient.hpp"
#include "coinv/report.hpp"
#include "coinv/shapes.hpp"

namespace coinv {

/// Which tensor product of the two bimodule views of the pair algebra.
enum class TensorShape {
  /// C_{nu',nu} (x)_{C_nu} C_{nu,nu'}: terms x_k^r (x) x_k^s c with r <= a,
  /// s <= b and c in C_nu' acting on the right factor.
  over_nu,
  /// C_{nu,nu'} (x)_{C_nu'} C_{nu',nu}: terms x_k^s (x) x_k^r c with s <= b,
  /// r <= a and c in C_nu.
  over_nu_prime,
};

/// Canonical form of a tensor: coeffs[p][q] multiplies x_k^p (x) x_k^q.
struct PowerBasisTensor {
  KeySituation ks;
  TensorShape shape;
  std::vector<std::vector<QuotientElement>> coeffs;

  static PowerBasisTensor zero(const KeySituation& ks, TensorShape shape);
  /// Canonical form of u (x) v for u, v in the pair algebra.
  static PowerBasisTensor pure(const KeySituation& ks, TensorShape shape, const QuotientElement& u,
                               const QuotientElement& v);

  PowerBasisTensor& operator+=(const PowerBasisTensor& o);
  friend PowerBasisTensor operator*(const Rational& c, PowerBasisTensor t);
  friend bool operator==(const PowerBasisTensor& a, const PowerBasisTensor& b);

  /// Multiplication by z from the middle ring, applied to the right end of
  /// the left factor or to the left end of the right factor.
  PowerBasisTensor times_middle_on_left(const QuotientElement& z) const;
  PowerBasisTensor times_middle_on_right(const QuotientElement& z) const;
};

/// Whether a homomorphism is Hom_{C_nu}(C_{nu,nu'}, C_nu) (values on
/// x_k^0..x_k^a) or Hom_{C_nu'}(C_{nu',nu}, C_nu') (values on x_k^0..x_k^b).
enum class HomSpace { over_nu, over_nu_prime };

struct ModuleHom {
  KeySituation ks;
  HomSpace space;
  std::vector<QuotientElement> values;

  /// Value on an arbitrary element of the pair algebra (extended linearly over the base ring).
  QuotientElement operator()(const QuotientElement& f) const;
  friend bool operator==(const ModuleHom& a, const ModuleHom& b);
};

/// delta(x_k^r)(x_k^s) = (-1)^a h_{r+s-a}(nu;i), extended bilinearly.
ModuleHom delta(const KeySituation& ks, const QuotientElement& g);
/// f -> (-1)^a sum_r (-1)^r e_r(nu';i) f(x_k^{a-r}).
QuotientElement delta_inv(const ModuleHom& f);
/// delta'(x_k^r)(x_k^s) = h_{r+s-b}(nu';i+1).
ModuleHom delta_prime(const KeySituation& ks, const QuotientElement& g);
/// f -> sum_r (-1)^r e_r(nu;i+1) f(x_k^{b-r}).
QuotientElement delta_prime_inv(const ModuleHom& f);

/// Unit of the first adjunction on the regular module:
/// 1 -> (-1)^a sum_r (-1)^r e_r(nu';i) (x) x_k^{a-r}.
PowerBasisTensor unit_iota_prime(const KeySituation& ks);
/// Counit of the first adjunction: x_k^r (x) x_k^s -> (-1)^a h_{r+s-a}(nu;i).
QuotientElement counit_eps(const PowerBasisTensor& t);
/// Unit of the second adjunction: 1 -> sum_r (-1)^r e_r(nu;i+1) (x) x_k^{b-r}.
PowerBasisTensor unit_iota(const KeySituation& ks);
/// Counit of the second adjunction: x_k^r (x) x_k^s -> h_{r+s-b}(nu';i+1).
QuotientElement counit_eps_prime(const PowerBasisTensor& t);

/// Counit value tables on pairs of basis powers (rows: first factor).
std::vector<std::vector<QuotientElement>> counit_table(const KeySituation& ks, TensorShape shape);

/// eps' o (z in the middle) o iota' applied to 1; z in C_nu, result in C_nu'.
QuotientElement trace_F(const KeySituation& ks, const QuotientElement& z, bool middle_on_left = false);
/// eps o (z' in the middle) o iota applied to 1; z' in C_nu', result in C_nu.
QuotientElement trace_E(const KeySituation& ks, const QuotientElement& z, bool middle_on_left = false);

/// Both triangle identities for both adjunctions, on every basis element of the pair algebra.
bool triangle_identity_check(const KeySituation& ks, Check* check = nullptr);

/// trace_F and trace_E against the free-module formulas for the operators.
Report trace_operator_check(int n, int lo, int hi);

/// delta is a bimodule isomorphism with the stated inverse; the induced
/// tensor-hom isomorphism is natural and balanced; triangle identities;
/// trace maps do not depend on the side of the middle multiplication.
Report adjunction_report(int n, int lo, int hi);

}  // namespace coinv
