#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coinv/polynomial.hpp"
#include "coinv/shapes.hpp"

namespace coinv {

using SparseVec = std::vector<std::pair<int, Rational>>;  // sorted by column

/// The ring P_nu of S_nu-invariants, described by its block sizes. In each
/// exponent degree d it has the orbit-sum basis indexed by the lex-smallest
/// monomial of each orbit (exponents weakly increasing inside every block).
/// Column 0 is the lex-smallest such monomial.
class BlockRing {
 public:
  explicit BlockRing(std::vector<int> blocks);

  int nvars() const { return n_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int max_block() const { return max_block_; }
  /// Variables of the b-th block (0-based block number).
  std::vector<int> block_variables(int b) const;

  struct Degree {
    std::vector<Monomial> reps;
    std::unordered_map<std::uint64_t, int> index;
  };
  const Degree& degree(int d) const;
  int dim(int d) const { return static_cast<int>(degree(d).reps.size()); }

  Monomial orbit_rep(const Monomial& m) const;
  Polynomial orbit_sum(const Monomial& rep) const;
  long orbit_size(const Monomial& m) const;

  /// Coordinates of a homogeneous invariant; throws NotInvariant otherwise.
  SparseVec coordinates(const Polynomial& f, int d) const;
  Polynomial to_polynomial(const SparseVec& v, int d) const;

  /// Row c: orbit_sum(rep_c of degree d) * e_s(block b), in degree d + s.
  const std::vector<SparseVec>& multiplication_table(int d, int b, int s) const;

 private:
  int n_ = 0;
  std::vector<int> blocks_;
  std::vector<int> starts_;
  int max_block_ = 1;
  mutable std::recursive_mutex mu_;
  mutable std::unordered_map<int, std::unique_ptr<Degree>> degrees_;
  mutable std::unordered_map<long, std::unique_ptr<std::vector<SparseVec>>> tables_;
};

std::shared_ptr<const BlockRing> block_ring(const std::vector<int>& blocks);

/// A homogeneous ideal of P_nu, computed one exponent degree at a time as a
/// fully reduced echelon basis. The pivot of a row is its smallest column.
class IdealCore {
 public:
  IdealCore(std::shared_ptr<const BlockRing> ring, std::vector<Polynomial> generators);

  const BlockRing& ring() const { return *ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  struct Degree {
    int dim_p = 0;
    std::vector<int> pivot_row;   // per column: row index or -1
    std::vector<SparseVec> rows;  // pivot entry is 1
    std::vector<int> complement;  // non-pivot columns, ascending
    int quotient_dim() const { return static_cast<int>(complement.size()); }
  };
  const Degree& degree(int d) const;

  /// Reduce coordinates of degree d onto the complement columns.
  SparseVec reduce(const SparseVec& v, int d) const;

 private:
  std::shared_ptr<const BlockRing> ring_;
  std::vector<Polynomial> gens_;
  std::vector<std::vector<SparseVec>> gen_coords_;  // by degree
  mutable std::recursive_mutex mu_;
  mutable std::vector<std::unique_ptr<Degree>> degrees_;
};

enum class IdealForm { h, e };

class QuotientElement;

/// P_nu modulo a homogeneous ideal. Degrees in this interface follow the
/// doubled grading (each x_j has degree 2) unless a name says otherwise.
class QuotientPresentation : public std::enable_shared_from_this<QuotientPresentation> {
 public:
  using Ptr = std::shared_ptr<const QuotientPresentation>;

  /// C_nu = P_nu / (e_1..e_n). Cached per nu.
  static Ptr coinvariant(const Composition& nu);
  /// C^mu_nu with the chosen generating set. Cached per (mu, nu, form).
  static Ptr tanisaki(const Composition& mu, const Composition& nu, IdealForm form = IdealForm::e);
  /// Arbitrary homogeneous invariant generators; no vanishing degree is known.
  static Ptr from_generators(const Composition& nu, std::vector<Polynomial> generators);

  const Composition& nu() const { return nu_; }
  const std::optional<Composition>& mu() const { return mu_; }
  int nvars() const { return nu_.total(); }
  const std::vector<Polynomial>& generators() const { return core_->generators(); }
  const IdealCore& core() const { return *core_; }
  bool same_algebra(const QuotientPresentation& o) const { return core_ == o.core_ && nu_ == o.nu_; }

  /// Expected top degree (d_nu or d^mu_nu); nullopt for zero algebras and
  /// for presentations built from arbitrary generators.
  std::optional<int> top_degree() const { return top_; }
  bool is_zero_algebra() const;

  /// Graded dimensions in even degrees 0, 2, .., top: coefficient list in t
  /// (odd entries are zero). Verifies vanishing above the top degree first.
  std::vector<long> hilbert() const;
  long dim() const;
  long dim_in_degree(int d) const;

  std::vector<QuotientElement> graded_basis(int d) const;
  /// Basis of all degrees, ascending degree, in graded_basis order.
  std::vector<QuotientElement> basis() const;
  /// Coordinates of a normal-form element against basis().
  std::vector<Rational> coordinates(const QuotientElement& z) const;
  /// Coordinates of the degree-d component against graded_basis(d).
  std::vector<Rational> graded_coordinates(const QuotientElement& z, int d) const;
  /// Inverse of coordinates().
  QuotientElement from_coordinates(const std::vector<Rational>& coords) const;

  QuotientElement normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  QuotientElement one() const;
  QuotientElement zero() const;

  /// The degree cap used for the h-form generating set (doubled grading).
  int generator_cap() const { return cap_; }

 private:
  QuotientPresentation() = default;
  void ensure_terminated() const;
  // normal form of coordinates in exponent degree d
  SparseVec reduce_degree(const Polynomial& homogeneous, int d) const;

  Composition nu_;
  std::optional<Composition> mu_;
  std::shared_ptr<IdealCore> core_;
  std::optional<int> top_;  // doubled grading
  int cap_ = 0;
  bool bounded_ = false;   // vanishing beyond top_ (or everywhere) is expected
  mutable std::once_flag terminated_;
  mutable std::vector<long> hilbert_;  // exponent-degree dims
};

/// An element of a quotient, stored as its normal form.
class QuotientElement {
 public:
  QuotientElement() = default;

  const Polynomial& rep() const { return rep_; }
  const QuotientPresentation& presentation() const { return *pres_; }
  const QuotientPresentation::Ptr& presentation_ptr() const { return pres_; }
  bool is_zero() const { return rep_.is_zero(); }
  /// Homogeneous component of doubled degree d.
  QuotientElement component(int d) const;

  QuotientElement operator-() const;
  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator*(const Rational& c, const QuotientElement& a);
  friend bool operator==(const QuotientElement& a, const QuotientElement& b);

  std::string to_string() const { return rep_.to_string(); }

 private:
  friend class QuotientPresentation;
  QuotientElement(QuotientPresentation::Ptr pres, Polynomial rep) : pres_(std::move(pres)), rep_(std::move(rep)) {}

  QuotientPresentation::Ptr pres_;
  Polynomial rep_;
};

/// e_1..e_n in all variables.
std::vector<Polynomial> coinvariant_generators(const Composition& nu);

/// The block-complete generators h_r(nu; S) with r above the dominance bound,
/// r capped at cap_degree (doubled grading). Subsets range over non-zero
/// blocks, plus any indices listed in extra_indices.
std::vector<Polynomial> tanisaki_generators_h(const Composition& mu, const Composition& nu, int cap_degree,
                                              const std::vector<int>& extra_indices = {});
/// The block-elementary generators e_r(nu; S); finite without a cap.
std::vector<Polynomial> tanisaki_generators_e(const Composition& mu, const Composition& nu);

/// Default h-form cap: top degree plus the vanishing window, at least 2n.
int default_generator_cap(const Composition& mu, const Composition& nu);

/// True iff every generator of each list lies in the ideal generated by the other.
bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const Composition& nu);

/// transpose(mu) dominates nu^+
bool is_nonzero(const Composition& mu, const Composition& nu);

/// g / eps_nu for an S_nu-anti-invariant g.
Polynomial antiinv_divide(const Polynomial& g, const Composition& nu);

}  // namespace coinv
