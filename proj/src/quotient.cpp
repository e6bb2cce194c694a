#include "coinv/quotient.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

#include "coinv/errors.hpp"
#include "coinv/symmetric.hpp"

namespace coinv {

namespace {

// Dense accumulator over the columns of one degree, remembering which
// entries were touched so that collecting and clearing stay sparse.
class Scratch {
 public:
  explicit Scratch(int size) : dense_(static_cast<std::size_t>(size)), touched_(static_cast<std::size_t>(size), 0) {}

  Rational& at(int c) {
    auto u = static_cast<std::size_t>(c);
    if (!touched_[u]) {
      touched_[u] = 1;
      list_.push_back(c);
    }
    return dense_[u];
  }
  void add(const SparseVec& v, const Rational& scale) {
    for (const auto& [c, x] : v) at(c) += scale * x;
  }
  // Move out the non-zero entries, sorted, and reset.
  SparseVec collect() {
    std::sort(list_.begin(), list_.end());
    SparseVec out;
    for (int c : list_) {
      auto u = static_cast<std::size_t>(c);
      if (dense_[u] != 0) out.emplace_back(c, dense_[u]);
      dense_[u] = 0;
      touched_[u] = 0;
    }
    list_.clear();
    return out;
  }

 private:
  std::vector<Rational> dense_;
  std::vector<char> touched_;
  std::vector<int> list_;
};

// a -= t * b, both sorted
void subtract_scaled(SparseVec& a, const Rational& t, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t x = 0;
  std::size_t y = 0;
  while (x < a.size() || y < b.size()) {
    if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
      out.push_back(std::move(a[x++]));
    } else if (x == a.size() || b[y].first < a[x].first) {
      out.emplace_back(b[y].first, -t * b[y].second);
      ++y;
    } else {
      Rational v = a[x].second - t * b[y].second;
      if (v != 0) out.emplace_back(a[x].first, std::move(v));
      ++x;
      ++y;
    }
  }
  a = std::move(out);
}

const Rational* entry_at(const SparseVec& v, int c) {
  auto it = std::lower_bound(v.begin(), v.end(), c, [](const auto& e, int col) { return e.first < col; });
  return it != v.end() && it->first == c ? &it->second : nullptr;
}

}  // namespace

// ---------------------------------------------------------------- BlockRing

BlockRing::BlockRing(std::vector<int> blocks) {
  for (int b : blocks) {
    if (b < 0) throw InvalidInput("negative block size");
    if (b > 0) blocks_.push_back(b);
  }
  int start = 1;
  for (int b : blocks_) {
    starts_.push_back(start);
    start += b;
    max_block_ = std::max(max_block_, b);
  }
  n_ = start - 1;
  if (n_ > kMaxVars) throw InvalidInput("n exceeds the supported maximum of " + std::to_string(kMaxVars));
}

std::vector<int> BlockRing::block_variables(int b) const {
  std::vector<int> out(static_cast<std::size_t>(blocks_[static_cast<std::size_t>(b)]));
  std::iota(out.begin(), out.end(), starts_[static_cast<std::size_t>(b)]);
  return out;
}

const BlockRing::Degree& BlockRing::degree(int d) const {
  if (d < 0) throw InvalidInput("negative degree");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = degrees_.find(d);
  if (it != degrees_.end()) return *it->second;

  auto deg = std::make_unique<Degree>();
  std::vector<int> exps(static_cast<std::size_t>(n_), 0);
  std::vector<int> block_end(static_cast<std::size_t>(n_));
  std::vector<bool> block_start(static_cast<std::size_t>(n_), false);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    block_start[static_cast<std::size_t>(starts_[b] - 1)] = true;
    for (int j = 0; j < blocks_[b]; ++j) block_end[static_cast<std::size_t>(starts_[b] - 1 + j)] = starts_[b] - 1 + blocks_[b];
  }
  // exponents weakly increase inside each block
  std::function<void(int, int, int)> rec = [&](int pos, int lo, int left) {
    if (pos == n_) {
      if (left == 0) deg->reps.push_back(Monomial::from_exponents(exps));
      return;
    }
    auto u = static_cast<std::size_t>(pos);
    if (block_start[u]) lo = 0;
    int slots = block_end[u] - pos;
    for (int e = lo; e * slots <= left; ++e) {
      exps[u] = e;
      rec(pos + 1, e, left - e);
    }
    exps[u] = 0;
  };
  rec(0, 0, d);
  std::sort(deg->reps.begin(), deg->reps.end(), [](const Monomial& a, const Monomial& b) { return a.bits < b.bits; });
  for (std::size_t c = 0; c < deg->reps.size(); ++c) deg->index.emplace(deg->reps[c].bits, static_cast<int>(c));
  return *degrees_.emplace(d, std::move(deg)).first->second;
}

Monomial BlockRing::orbit_rep(const Monomial& m) const {
  std::vector<int> exps = m.exponents(n_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto first = exps.begin() + (starts_[b] - 1);
    std::sort(first, first + blocks_[b]);
  }
  return Monomial::from_exponents(exps);
}

Polynomial BlockRing::orbit_sum(const Monomial& rep) const {
  std::unordered_set<std::uint64_t> seen;
  std::vector<Term> terms;
  for (const SignedPermutation& w : young_subgroup(blocks_)) {
    Monomial m = permute(w, rep, n_);
    if (seen.insert(m.bits).second) terms.push_back({m, 1});
  }
  return Polynomial(n_, std::move(terms));
}

long BlockRing::orbit_size(const Monomial& m) const {
  std::vector<int> exps = m.exponents(n_);
  long size = 1;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto first = exps.begin() + (starts_[b] - 1);
    std::sort(first, first + blocks_[b]);
    // multinomial: block size! / prod multiplicity!
    long run = 0;
    for (int j = 0; j < blocks_[b]; ++j) {
      run = (j > 0 && first[j] == first[j - 1]) ? run + 1 : 1;
      size = size * (j + 1) / run;
    }
  }
  return size;
}

SparseVec BlockRing::coordinates(const Polynomial& f, int d) const {
  if (f.nvars() != n_) throw InvalidInput("polynomial has the wrong number of variables");
  const Degree& deg = degree(d);
  SparseVec out;
  long covered = 0;
  for (const Term& t : f.terms()) {
    if (t.m.deg != d) throw InvalidInput("expected a homogeneous polynomial of degree " + std::to_string(d));
    Monomial rep = orbit_rep(t.m);
    if (f.coefficient(rep) != t.c) {
      throw NotInvariant("polynomial is not invariant under the block permutations: " + f.to_string());
    }
    if (rep == t.m) {
      out.emplace_back(deg.index.at(rep.bits), t.c);
      covered += orbit_size(rep);
    }
  }
  // every term shares its representative's coefficient; a missing orbit member shows up in the count
  if (covered != static_cast<long>(f.terms().size())) {
    throw NotInvariant("polynomial is not invariant under the block permutations: " + f.to_string());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Polynomial BlockRing::to_polynomial(const SparseVec& v, int d) const {
  const Degree& deg = degree(d);
  Polynomial p(n_);
  for (const auto& [c, x] : v) p.add_scaled(x, Monomial{}, orbit_sum(deg.reps[static_cast<std::size_t>(c)]));
  return p;
}

const std::vector<SparseVec>& BlockRing::multiplication_table(int d, int b, int s) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  long key = (static_cast<long>(d) * 64 + b) * 64 + s;
  auto it = tables_.find(key);
  if (it != tables_.end()) return *it->second;

  const Degree& src = degree(d);
  const Degree& dst = degree(d + s);
  Polynomial e = e_sym(n_, block_variables(b), s);
  auto table = std::make_unique<std::vector<SparseVec>>();
  table->reserve(src.reps.size());
  const auto& group = young_subgroup(blocks_);
  for (const Monomial& rep : src.reps) {
    std::unordered_set<std::uint64_t> orbit;
    for (const SignedPermutation& w : group) orbit.insert(permute(w, rep, n_).bits);
    std::map<int, long> acc;
    for (std::uint64_t bits : orbit) {
      Monomial u{bits, d};
      for (const Term& t : e.terms()) {
        Monomial m = u * t.m;
        auto hit = dst.index.find(m.bits);
        if (hit != dst.index.end()) acc[hit->second] += 1;
      }
    }
    SparseVec row;
    for (const auto& [c, x] : acc) row.emplace_back(c, Rational(x));
    table->push_back(std::move(row));
  }
  return *tables_.emplace(key, std::move(table)).first->second;
}

std::shared_ptr<const BlockRing> block_ring(const std::vector<int>& blocks) {
  std::vector<int> key;
  for (int b : blocks) {
    if (b > 0) key.push_back(b);
  }
  static std::mutex mu;
  static std::map<std::vector<int>, std::shared_ptr<const BlockRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ring = std::make_shared<const BlockRing>(key);
  cache.emplace(key, ring);
  return ring;
}

// ---------------------------------------------------------------- IdealCore

IdealCore::IdealCore(std::shared_ptr<const BlockRing> ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  for (Polynomial& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw InvalidInput("ideal generators must be homogeneous");
    int d = g.degree();
    SparseVec v = ring_->coordinates(g, d);
    if (gen_coords_.size() <= static_cast<std::size_t>(d)) gen_coords_.resize(static_cast<std::size_t>(d) + 1);
    gen_coords_[static_cast<std::size_t>(d)].push_back(std::move(v));
    gens_.push_back(std::move(g));
  }
}

const IdealCore::Degree& IdealCore::degree(int d) const {
  if (d < 0) throw InvalidInput("negative degree");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  while (degrees_.size() <= static_cast<std::size_t>(d)) {
    int cur = static_cast<int>(degrees_.size());
    const BlockRing::Degree& rd = ring_->degree(cur);
    int size = static_cast<int>(rd.reps.size());

    // Every element of the ideal in degree cur is a combination of the
    // generators of that degree and of lower ideal pieces multiplied by the
    // algebra generators e_s(block) of P_nu.
    std::vector<SparseVec> candidates;
    if (static_cast<std::size_t>(cur) < gen_coords_.size()) {
      candidates = gen_coords_[static_cast<std::size_t>(cur)];
    }
    Scratch scratch(size);
    for (int b = 0; b < static_cast<int>(ring_->blocks().size()); ++b) {
      for (int s = 1; s <= ring_->blocks()[static_cast<std::size_t>(b)] && s <= cur; ++s) {
        const Degree& lower = *degrees_[static_cast<std::size_t>(cur - s)];
        if (lower.rows.empty()) continue;
        const auto& table = ring_->multiplication_table(cur - s, b, s);
        for (const SparseVec& row : lower.rows) {
          for (const auto& [c, x] : row) scratch.add(table[static_cast<std::size_t>(c)], x);
          SparseVec v = scratch.collect();
          if (!v.empty()) candidates.push_back(std::move(v));
        }
      }
    }
    // Largest leading column first keeps back-substitution rare.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const SparseVec& x, const SparseVec& y) { return x.front().first > y.front().first; });

    auto deg = std::make_unique<Degree>();
    deg->dim_p = size;
    deg->pivot_row.assign(static_cast<std::size_t>(size), -1);
    for (const SparseVec& v : candidates) {
      if (static_cast<int>(deg->rows.size()) == size) break;
      // Rows are fully reduced, so one pass over the pivots met in v suffices.
      scratch.add(v, 1);
      for (const auto& [c, x] : v) {
        int r = deg->pivot_row[static_cast<std::size_t>(c)];
        if (r >= 0) scratch.add(deg->rows[static_cast<std::size_t>(r)], -x);
      }
      SparseVec w = scratch.collect();
      if (w.empty()) continue;
      int p = w.front().first;
      Rational inv = 1 / w.front().second;
      for (auto& e : w) e.second *= inv;
      for (SparseVec& row : deg->rows) {
        if (const Rational* t = entry_at(row, p)) {
          Rational tt = *t;
          subtract_scaled(row, tt, w);
        }
      }
      deg->pivot_row[static_cast<std::size_t>(p)] = static_cast<int>(deg->rows.size());
      deg->rows.push_back(std::move(w));
    }
    for (int c = 0; c < size; ++c) {
      if (deg->pivot_row[static_cast<std::size_t>(c)] < 0) deg->complement.push_back(c);
    }
    degrees_.push_back(std::move(deg));
  }
  return *degrees_[static_cast<std::size_t>(d)];
}

SparseVec IdealCore::reduce(const SparseVec& v, int d) const {
  const Degree& deg = degree(d);
  if (v.empty()) return {};
  Scratch scratch(deg.dim_p);
  scratch.add(v, 1);
  for (const auto& [c, x] : v) {
    int r = deg.pivot_row[static_cast<std::size_t>(c)];
    if (r >= 0) scratch.add(deg.rows[static_cast<std::size_t>(r)], -x);
  }
  return scratch.collect();
}

// ---------------------------------------------------------------- generators

namespace {

std::vector<Polynomial> tidy(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (std::find(out.begin(), out.end(), g) != out.end()) continue;
    out.push_back(std::move(g));
  }
  std::stable_sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  return out;
}

void check_same_total(const Composition& mu, const Composition& nu) {
  if (mu.total() != nu.total()) {
    throw InvalidInput("mu and nu must be compositions of the same n (got " + std::to_string(mu.total()) + " and " +
                       std::to_string(nu.total()) + ")");
  }
}

// Non-empty subsets of `items`, in order of their bitmask.
template <typename F>
void for_each_subset(const std::vector<int>& items, F&& f) {
  std::size_t count = items.size();
  for (unsigned long mask = 1; mask < (1ul << count); ++mask) {
    std::vector<int> subset;
    for (std::size_t j = 0; j < count; ++j) {
      if (mask & (1ul << j)) subset.push_back(items[j]);
    }
    f(subset);
  }
}

int max_part(const Composition& nu) {
  int w = 1;
  for (int p : nu.parts()) w = std::max(w, p);
  return w;
}

}  // namespace

std::vector<Polynomial> coinvariant_generators(const Composition& nu) {
  std::vector<Polynomial> out;
  for (int r = 1; r <= nu.total(); ++r) out.push_back(e_all(nu.total(), r));
  return out;
}

std::vector<Polynomial> tanisaki_generators_h(const Composition& mu, const Composition& nu, int cap_degree,
                                              const std::vector<int>& extra_indices) {
  check_same_total(mu, nu);
  Partition lam = transpose(mu);
  std::vector<int> indices = nu.support();
  for (int i : extra_indices) {
    if (nu[i] == 0 && std::find(indices.begin(), indices.end(), i) == indices.end()) indices.push_back(i);
  }
  int cap = cap_degree / 2;
  std::vector<Polynomial> gens;
  for_each_subset(indices, [&](const std::vector<int>& subset) {
    int m = static_cast<int>(subset.size());
    int bound = 0;
    for (int j = 1; j <= m; ++j) bound += lam.part(j);
    for (int i : subset) bound -= nu[i];
    for (int r = std::max(bound + 1, 0); r <= cap; ++r) gens.push_back(h_block(nu, subset, r));
  });
  return tidy(std::move(gens));
}

std::vector<Polynomial> tanisaki_generators_e(const Composition& mu, const Composition& nu) {
  check_same_total(mu, nu);
  Partition lam = transpose(mu);
  std::vector<int> support = nu.support();
  std::vector<Polynomial> gens;
  for_each_subset(support, [&](const std::vector<int>& subset) {
    int l = static_cast<int>(support.size() - subset.size());
    int total = 0;
    for (int i : subset) total += nu[i];
    int bound = total;
    for (int j = l + 1; j <= lam.length(); ++j) bound -= lam.part(j);
    for (int r = std::max(bound + 1, 0); r <= total; ++r) gens.push_back(e_block(nu, subset, r));
  });
  // Index sets may also contain empty blocks. Those never change e_r, except
  // that a set of empty blocks alone contributes e_0 = 1 whenever lambda has
  // more rows than nu has non-zero parts.
  if (lam.length() > static_cast<int>(support.size())) gens.push_back(Polynomial::constant(nu.total(), 1));
  return tidy(std::move(gens));
}

int default_generator_cap(const Composition& mu, const Composition& nu) {
  int n = nu.total();
  auto top = d_mu_nu(mu, nu);
  int cap = 2 * n;
  if (top) cap = std::max(cap, *top + 2 * max_part(nu));
  return cap;
}

bool is_nonzero(const Composition& mu, const Composition& nu) {
  check_same_total(mu, nu);
  return dominates(transpose(mu), sort_to_partition(nu));
}

bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const Composition& nu) {
  auto pa = QuotientPresentation::from_generators(nu, a);
  auto pb = QuotientPresentation::from_generators(nu, b);
  for (const Polynomial& g : pa->generators()) {
    if (!pb->contains(g)) return false;
  }
  for (const Polynomial& g : pb->generators()) {
    if (!pa->contains(g)) return false;
  }
  return true;
}

Polynomial antiinv_divide(const Polynomial& g, const Composition& nu) {
  if (antisymmetrize(g, nu) != g) throw NotAntiInvariant("polynomial is not anti-invariant: " + g.to_string());
  return exact_divide(g, eps_nu(nu));
}

// ---------------------------------------------------------------- presentations

QuotientPresentation::Ptr QuotientPresentation::coinvariant(const Composition& nu) {
  static std::mutex mu;
  static std::map<Composition, Ptr> cache;
  static std::map<std::vector<int>, std::shared_ptr<IdealCore>> cores;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(nu); it != cache.end()) return it->second;

  auto blocks = nu.nonzero_parts();
  auto& core = cores[blocks];
  if (!core) core = std::make_shared<IdealCore>(block_ring(blocks), coinvariant_generators(nu));
  std::shared_ptr<QuotientPresentation> p(new QuotientPresentation());
  p->nu_ = nu;
  p->core_ = core;
  p->top_ = d_nu(nu);
  p->bounded_ = true;
  p->cap_ = 2 * nu.total();
  cache.emplace(nu, p);
  return p;
}

QuotientPresentation::Ptr QuotientPresentation::tanisaki(const Composition& mu, const Composition& nu, IdealForm form) {
  check_same_total(mu, nu);
  Partition lam = transpose(mu);
  using Key = std::tuple<Composition, Composition, int>;
  using CoreKey = std::tuple<std::vector<int>, std::vector<int>, int>;
  static std::mutex m;
  static std::map<Key, Ptr> cache;
  static std::map<CoreKey, std::shared_ptr<IdealCore>> cores;
  std::lock_guard<std::mutex> lock(m);
  Key key{mu, nu, static_cast<int>(form)};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // The ideal depends on nu only through its block sizes and on mu only
  // through lambda, so the expensive part is shared.
  int cap = default_generator_cap(mu, nu);
  auto blocks = nu.nonzero_parts();
  auto& core = cores[CoreKey{blocks, lam.parts(), static_cast<int>(form)}];
  if (!core) {
    auto gens = form == IdealForm::h ? tanisaki_generators_h(mu, nu, cap) : tanisaki_generators_e(mu, nu);
    core = std::make_shared<IdealCore>(block_ring(blocks), std::move(gens));
  }
  std::shared_ptr<QuotientPresentation> p(new QuotientPresentation());
  p->nu_ = nu;
  p->mu_ = mu;
  p->core_ = core;
  p->top_ = d_mu_nu(mu, nu);
  p->bounded_ = true;
  p->cap_ = cap;
  cache.emplace(key, p);
  return p;
}

QuotientPresentation::Ptr QuotientPresentation::from_generators(const Composition& nu, std::vector<Polynomial> generators) {
  for (const Polynomial& g : generators) {
    if (g.nvars() != nu.total()) throw InvalidInput("generator has the wrong number of variables");
  }
  std::shared_ptr<QuotientPresentation> p(new QuotientPresentation());
  p->nu_ = nu;
  p->core_ = std::make_shared<IdealCore>(block_ring(nu.nonzero_parts()), std::move(generators));
  int cap = 0;
  for (const Polynomial& g : p->core_->generators()) cap = std::max(cap, 2 * g.degree());
  p->cap_ = cap;
  return p;
}

void QuotientPresentation::ensure_terminated() const {
  if (!bounded_) {
    throw InvalidInput("no vanishing degree is known for a presentation given by arbitrary generators");
  }
  std::call_once(terminated_, [this] {
    const IdealCore& core = *core_;
    int window = core.ring().max_block();
    std::vector<long> dims;
    int last;
    if (top_) {
      last = *top_ / 2;
      for (int d = 0; d <= last; ++d) dims.push_back(core.degree(d).quotient_dim());
    } else {
      last = -1;
    }
    // The algebra is generated in degrees <= window, so a run of `window`
    // vanishing degrees forces vanishing from there on.
    for (int d = last + 1; d <= last + window; ++d) {
      if (core.degree(d).quotient_dim() != 0) {
        throw NonTerminating("quotient for nu=" + nu_.to_string() + " does not vanish in degree " +
                             std::to_string(2 * d) + " above the expected top degree");
      }
    }
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    hilbert_ = std::move(dims);
  });
}

bool QuotientPresentation::is_zero_algebra() const {
  if (bounded_) {
    ensure_terminated();
    return hilbert_.empty();
  }
  return core_->degree(0).quotient_dim() == 0;
}

std::vector<long> QuotientPresentation::hilbert() const {
  ensure_terminated();
  std::vector<long> out;
  for (std::size_t d = 0; d < hilbert_.size(); ++d) {
    if (d) out.push_back(0);
    out.push_back(hilbert_[d]);
  }
  return out;
}

long QuotientPresentation::dim() const {
  ensure_terminated();
  return std::accumulate(hilbert_.begin(), hilbert_.end(), 0L);
}

long QuotientPresentation::dim_in_degree(int d) const {
  if (d < 0 || d % 2) return 0;
  if (!bounded_) return core_->degree(d / 2).quotient_dim();
  ensure_terminated();
  auto e = static_cast<std::size_t>(d / 2);
  return e < hilbert_.size() ? hilbert_[e] : 0;
}

std::vector<QuotientElement> QuotientPresentation::graded_basis(int d) const {
  if (d < 0) throw InvalidInput("negative degree");
  std::vector<QuotientElement> out;
  if (d % 2 || dim_in_degree(d) == 0) return out;
  const auto& deg = core_->degree(d / 2);
  const auto& reps = core_->ring().degree(d / 2).reps;
  for (auto it = deg.complement.rbegin(); it != deg.complement.rend(); ++it) {
    out.push_back(QuotientElement(shared_from_this(), core_->ring().orbit_sum(reps[static_cast<std::size_t>(*it)])));
  }
  return out;
}

std::vector<QuotientElement> QuotientPresentation::basis() const {
  ensure_terminated();
  std::vector<QuotientElement> out;
  for (std::size_t d = 0; d < hilbert_.size(); ++d) {
    auto part = graded_basis(2 * static_cast<int>(d));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Rational> QuotientPresentation::coordinates(const QuotientElement& z) const {
  if (!z.pres_ || !same_algebra(*z.pres_)) throw InvalidInput("element belongs to a different algebra");
  ensure_terminated();
  std::vector<Rational> out;
  for (std::size_t d = 0; d < hilbert_.size(); ++d) {
    int e = static_cast<int>(d);
    const auto& deg = core_->degree(e);
    SparseVec v = core_->ring().coordinates(z.rep_.homogeneous_part(e), e);
    for (auto it = deg.complement.rbegin(); it != deg.complement.rend(); ++it) {
      const Rational* x = entry_at(v, *it);
      out.push_back(x ? *x : Rational(0));
    }
  }
  return out;
}

std::vector<Rational> QuotientPresentation::graded_coordinates(const QuotientElement& z, int d) const {
  if (!z.pres_ || !same_algebra(*z.pres_)) throw InvalidInput("element belongs to a different algebra");
  std::vector<Rational> out;
  if (d < 0 || d % 2 || dim_in_degree(d) == 0) return out;
  int e = d / 2;
  const auto& deg = core_->degree(e);
  SparseVec v = core_->ring().coordinates(z.rep_.homogeneous_part(e), e);
  for (auto it = deg.complement.rbegin(); it != deg.complement.rend(); ++it) {
    const Rational* x = entry_at(v, *it);
    out.push_back(x ? *x : Rational(0));
  }
  return out;
}

QuotientElement QuotientPresentation::from_coordinates(const std::vector<Rational>& coords) const {
  auto b = basis();
  if (coords.size() != b.size()) throw InvalidInput("coordinate vector has the wrong length");
  Polynomial rep(nvars());
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (coords[j] != 0) rep += b[j].rep_ * coords[j];
  }
  return QuotientElement(shared_from_this(), std::move(rep));
}

SparseVec QuotientPresentation::reduce_degree(const Polynomial& homogeneous, int d) const {
  SparseVec v = core_->ring().coordinates(homogeneous, d);
  if (bounded_) {
    ensure_terminated();
    if (static_cast<std::size_t>(d) >= hilbert_.size()) return {};
  }
  return core_->reduce(v, d);
}

QuotientElement QuotientPresentation::normal_form(const Polynomial& f) const {
  if (f.nvars() != nvars()) throw InvalidInput("polynomial has the wrong number of variables");
  Polynomial rep(nvars());
  for (int d : f.degrees()) {
    rep += core_->ring().to_polynomial(reduce_degree(f.homogeneous_part(d), d), d);
  }
  return QuotientElement(shared_from_this(), std::move(rep));
}

bool QuotientPresentation::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

QuotientElement QuotientPresentation::one() const { return normal_form(Polynomial::constant(nvars(), 1)); }

QuotientElement QuotientPresentation::zero() const { return QuotientElement(shared_from_this(), Polynomial(nvars())); }

// ---------------------------------------------------------------- elements

namespace {

void check_compatible(const QuotientElement& a, const QuotientElement& b) {
  if (!a.presentation_ptr() || !b.presentation_ptr() || !a.presentation().same_algebra(b.presentation())) {
    throw InvalidInput("elements belong to different algebras");
  }
}

}  // namespace

QuotientElement QuotientElement::component(int d) const {
  if (d % 2) return QuotientElement(pres_, Polynomial(rep_.nvars()));
  return QuotientElement(pres_, rep_.homogeneous_part(d / 2));
}

QuotientElement QuotientElement::operator-() const { return QuotientElement(pres_, -rep_); }

QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
  check_compatible(a, b);
  return QuotientElement(a.pres_, a.rep_ + b.rep_);
}

QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
  check_compatible(a, b);
  return QuotientElement(a.pres_, a.rep_ - b.rep_);
}

QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
  check_compatible(a, b);
  return a.pres_->normal_form(a.rep_ * b.rep_);
}

QuotientElement operator*(const Rational& c, const QuotientElement& a) { return QuotientElement(a.pres_, a.rep_ * c); }

bool operator==(const QuotientElement& a, const QuotientElement& b) {
  check_compatible(a, b);
  return a.rep_ == b.rep_;
}

}  // namespace coinv
