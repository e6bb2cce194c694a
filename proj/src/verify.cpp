#include "coinv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "coinv/errors.hpp"
#include "coinv/glaction.hpp"
#include "coinv/quotient.hpp"
#include "coinv/shapes.hpp"
#include "coinv/symmetric.hpp"
#include "coinv/tableaux.hpp"
#include "coinv/traces.hpp"

namespace coinv {

namespace {

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<int> mask_vars(unsigned mask, int n) {
  std::vector<int> v;
  for (int j = 1; j <= n; ++j) {
    if (mask & (1u << (j - 1))) v.push_back(j);
  }
  return v;
}

std::string vars_string(unsigned mask, int n) {
  std::string s = "{";
  for (int j : mask_vars(mask, n)) s += (s.size() > 1 ? "," : "") + std::to_string(j);
  return s + "}";
}

// e_r and h_r of every subset of the variables, built on demand.
class SymmetricTable {
 public:
  explicit SymmetricTable(int n) : n_(n) {}
  const Polynomial& e(unsigned mask, int r) { return get(mask, r, true); }
  const Polynomial& h(unsigned mask, int r) { return get(mask, r, false); }

 private:
  const Polynomial& get(unsigned mask, int r, bool elementary) {
    auto key = std::make_tuple(mask, r, elementary);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      auto vars = mask_vars(mask, n_);
      it = cache_.emplace(key, elementary ? e_sym(n_, vars, r) : h_sym(n_, vars, r)).first;
    }
    return it->second;
  }
  int n_;
  std::map<std::tuple<unsigned, int, bool>, Polynomial> cache_;
};

Rational sign(int s) { return s % 2 == 0 ? 1 : -1; }

// Compositions of m with positive parts, laid out from index 1: every block
// structure of P_nu up to zero blocks.
std::vector<Composition> block_structures(int m) {
  std::vector<Composition> out;
  for (const Composition& c : compositions_of(m, 1, m)) {
    auto parts = c.parts();
    if (c.lo() == 1 && std::find(parts.begin(), parts.end(), 0) == parts.end()) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& items) {
  std::vector<std::vector<int>> out;
  for (unsigned m = 0; m < (1u << items.size()); ++m) {
    std::vector<int> s;
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (m & (1u << j)) s.push_back(items[j]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string list_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
  return s + "}";
}

void finish(Report& rep, std::vector<Check*> checks, Clock::time_point t0) {
  double secs = since(t0);
  for (Check* c : checks) {
    c->seconds = secs / static_cast<double>(checks.size());
    rep.checks.push_back(*c);
  }
}

// Sum the checks with equal names, so a sweep over n reports one line per statement.
Report consolidate(const Report& in) {
  Report out;
  out.suite = in.suite;
  out.tables = in.tables;
  std::map<std::string, std::size_t> at;
  for (const Check& c : in.checks) {
    auto it = at.find(c.name());
    if (it == at.end()) {
      at.emplace(c.name(), out.checks.size());
      out.checks.push_back(c);
    } else {
      out.checks[it->second].merge(c);
    }
  }
  return out;
}

std::vector<Composition> partitions_as_mu(int n, int lo) {
  std::vector<Composition> out;
  for (const Partition& p : partitions_of(n)) out.push_back(Composition::from_partition(p, lo));
  return out;
}

}  // namespace

SuiteOptions default_options(int n) {
  SuiteOptions o;
  o.n = n;
  o.lo = 1;
  o.hi = std::max(n, 4);
  o.r_max = 2 * n;
  return o;
}

// ------------------------------------------------------------------ identities

Report identity_suite(int n, int r_max) {
  if (r_max < 0) r_max = 2 * n;
  Report rep;
  rep.suite = "identities";
  Check basic("sum_s (-1)^s e_s h_{r-s} = 0 for r >= 1", "basic e/h identity");
  Check h_union("h_r(X,Y) = sum_s h_s(X) h_{r-s}(Y)", "complete symmetric functions of a union");
  Check e_union("e_r(X,Y) = sum_s e_s(X) e_{r-s}(Y)", "elementary symmetric functions of a union");
  Check h_remove("h_r(Y) = sum_s (-1)^s e_s(X) h_{r-s}(X,Y)", "removing variables from complete symmetric functions");
  Check e_remove("e_r(Y) = sum_s (-1)^s h_s(X) e_{r-s}(X,Y)", "removing variables from elementary symmetric functions");
  Check root_first("u^{n+r} expansion through e_{s+t} h_{r-t}", "powers of a root of prod (u - x_i)");
  Check root_second("u^{n+r} expansion through e_{s-t} h_{r+t}", "powers of a root of prod (u - x_i), second form");
  Check complement("h_r(nu;I) = (-1)^r e_r(nu;J) in C_nu for complementary I, J", "complementary block identity in C_nu");
  Check block_basic("sum_s (-1)^s e_s(nu;I) h_{r-s}(nu;I) = 0 in C_nu", "block form of the basic e/h identity");
  Check chevalley("antisymmetric polynomials are divisible by eps_nu", "divisibility by eps_nu");
  Check conv("block e/h equal their convolution definitions", "block symmetric functions");
  auto t0 = Clock::now();

  SymmetricTable sym(n);
  const unsigned full = (1u << n) - 1;

  for (unsigned s = 0; s <= full; ++s) {
    for (int r = 1; r <= r_max; ++r) {
      Polynomial sum(n);
      for (int j = 0; j <= r; ++j) sum += sign(j) * (sym.e(s, j) * sym.h(s, r - j));
      basic.expect(sum.is_zero(), "S=" + vars_string(s, n) + " r=" + std::to_string(r));
    }
  }

  // Ordered pairs of disjoint subsets: each variable goes to X, Y or neither.
  int splits = 1;
  for (int j = 0; j < n; ++j) splits *= 3;
  for (int code = 0; code < splits; ++code) {
    unsigned x = 0, y = 0;
    for (int j = 0, c = code; j < n; ++j, c /= 3) {
      if (c % 3 == 1) x |= 1u << j;
      if (c % 3 == 2) y |= 1u << j;
    }
    unsigned xy = x | y;
    std::string where = "X=" + vars_string(x, n) + " Y=" + vars_string(y, n);
    for (int r = 0; r <= r_max; ++r) {
      Polynomial hh(n), ee(n), hy(n), ey(n);
      for (int s = 0; s <= r; ++s) {
        hh += sym.h(x, s) * sym.h(y, r - s);
        ee += sym.e(x, s) * sym.e(y, r - s);
        hy += sign(s) * (sym.e(x, s) * sym.h(xy, r - s));
        ey += sign(s) * (sym.h(x, s) * sym.e(xy, r - s));
      }
      std::string at = where + " r=" + std::to_string(r);
      h_union.expect(hh == sym.h(xy, r), at);
      e_union.expect(ee == sym.e(xy, r), at);
      h_remove.expect(hy == sym.h(y, r), at);
      e_remove.expect(ey == sym.e(y, r), at);
    }
  }

  // u = x_j with j in S satisfies prod_{i in S} (u - x_i) = 0.
  for (unsigned s = 1; s <= full; ++s) {
    auto vars = mask_vars(s, n);
    int m = static_cast<int>(vars.size());
    for (int j : vars) {
      Polynomial u = Polynomial::variable(n, j);
      for (int r = 0; r <= r_max; ++r) {
        Polynomial lhs = pow(u, m + r);
        Polynomial first(n), second(n);
        for (int a = 1; a <= m; ++a) {
          Polynomial ua = pow(u, m - a);
          for (int t = 0; t <= r && a + t <= m; ++t) {
            first += sign(a + t - 1) * (sym.e(s, a + t) * sym.h(s, r - t) * ua);
          }
          for (int t = 1; t <= a; ++t) second += sign(a - t) * (sym.e(s, a - t) * sym.h(s, r + t) * ua);
        }
        std::string at = "S=" + vars_string(s, n) + " u=x" + std::to_string(j) + " r=" + std::to_string(r);
        root_first.expect(first == lhs, at);
        root_second.expect(second == lhs, at);
      }
    }
  }

  for (int m = 1; m <= n; ++m) {
    for (const Composition& nu : block_structures(m)) {
      auto c = QuotientPresentation::coinvariant(nu);
      auto support = nu.support();
      for (const auto& in : subsets_of(support)) {
        std::vector<int> out;
        std::set_difference(support.begin(), support.end(), in.begin(), in.end(), std::back_inserter(out));
        std::string where = "nu=" + nu.to_string() + " I=" + list_string(in);
        for (int r = 1; r <= r_max; ++r) {
          Polynomial f = h_block(nu, in, r) - sign(r) * e_block(nu, out, r);
          complement.expect(c->contains(f), where + " r=" + std::to_string(r));
          Polynomial g(m);
          for (int s = 0; s <= r; ++s) g += sign(s) * (e_block(nu, in, s) * h_block(nu, in, r - s));
          block_basic.expect(c->contains(g), where + " r=" + std::to_string(r));
        }
      }

      // staircase within each block times every monomial of degree <= 2
      std::vector<int> stair;
      for (int p : nu.nonzero_parts()) {
        for (int e = p - 1; e >= 0; --e) stair.push_back(e);
      }
      Polynomial base = Polynomial::monomial(m, Monomial::from_exponents(stair));
      Polynomial eps = eps_nu(nu);
      std::vector<Polynomial> cofactors{Polynomial::constant(m, 1)};
      for (int i = 1; i <= m; ++i) {
        cofactors.push_back(Polynomial::variable(m, i));
        for (int j = i; j <= m; ++j) cofactors.push_back(Polynomial::variable(m, i) * Polynomial::variable(m, j));
      }
      for (const Polynomial& p : cofactors) {
        for (const Polynomial& f : {p, base * p}) {
          std::string where = "nu=" + nu.to_string() + " f=" + f.to_string();
          try {
            Polynomial q = exact_divide(antisymmetrize(f, nu), eps);
            chevalley.expect(symmetrize(q, nu) == q, where + ": quotient not invariant");
          } catch (const NotDivisible&) {
            chevalley.fail(where + ": not divisible");
          }
        }
      }
    }

    for (const Composition& nu : compositions_of(m, 1, m)) {
      std::vector<int> indices;
      for (int i = 1; i <= m; ++i) indices.push_back(i);
      for (const auto& set : subsets_of(indices)) {
        for (int r = 0; r <= m; ++r) {
          std::string at = "nu=" + nu.to_string() + " I=" + list_string(set) + " r=" + std::to_string(r);
          conv.expect(e_block(nu, set, r) == e_block_convolution(nu, set, r), "e " + at);
          conv.expect(h_block(nu, set, r) == h_block_convolution(nu, set, r), "h " + at);
        }
      }
    }
  }
  finish(rep, {&basic, &h_union, &e_union, &h_remove, &e_remove, &root_first, &root_second, &complement, &block_basic, &chevalley, &conv}, t0);
  return rep;
}

// ------------------------------------------------------------------ ideals

Report ideals_equal_suite(const SuiteOptions& opt) {
  Report rep;
  rep.suite = "ideals-equal";
  Check forms("h-form and e-form generate the same ideal", "two generating sets of the Tanisaki ideal");
  Check regular("regular mu gives the coinvariant ideal", "Tanisaki ideal for regular mu");
  Check zeros("zero blocks add nothing to the h-form", "index sets over non-zero blocks suffice");
  auto t0 = Clock::now();
  for (int n = 1; n <= opt.n; ++n) {
    for (const Composition& mu : partitions_as_mu(n, opt.lo)) {
      for (const Composition& nu : compositions_of(n, opt.lo, opt.hi)) {
        std::string where = "mu=" + mu.to_string() + " nu=" + nu.to_string();
        int cap = default_generator_cap(mu, nu);
        auto h = tanisaki_generators_h(mu, nu, cap);
        auto e = tanisaki_generators_e(mu, nu);
        forms.expect(ideals_equal(h, e, nu), where);
        if (transpose(mu).part(1) == n) regular.expect(ideals_equal(coinvariant_generators(nu), e, nu), where);
        for (int z = opt.lo; z <= opt.hi; ++z) {
          if (nu[z] != 0) continue;
          zeros.expect(ideals_equal(h, tanisaki_generators_h(mu, nu, cap, {z}), nu),
                       where + " extra index " + std::to_string(z));
          break;
        }
      }
    }
  }
  finish(rep, {&forms, &regular, &zeros}, t0);
  return rep;
}

// ------------------------------------------------------------------ dimensions

Report dims_suite(const SuiteOptions& opt) {
  Report rep;
  rep.suite = "dims";
  Check full("dim C = n!", "dimension of the coinvariant algebra");
  Check partial("dim C_nu = |S_n/S_nu|", "dimension of partial coinvariant algebras");
  Check poincare("dim C_nu(d) = dim C_nu(d_nu - d)", "Poincare duality for C_nu");
  Check tableau_dim("dim C^mu_nu = column-strict lambda-tableaux of type nu", "dimension of C^mu_nu");
  Check vanish("C^mu_nu = 0 exactly when lambda does not dominate nu+", "vanishing criterion");
  Check top("top degree d^mu_nu with dimension K_{lambda,nu}", "top degree of C^mu_nu");
  Check rearrange("dim C^mu_nu depends only on mu+ and nu+", "weight-space symmetry");
  auto t0 = Clock::now();
  for (int n = 1; n <= opt.n; ++n) {
    full.expect(QuotientPresentation::coinvariant(Composition::regular(n))->dim() == static_cast<long>(factorial(n)),
                "n=" + std::to_string(n));
    auto window = compositions_of(n, opt.lo, opt.hi);
    for (const Composition& nu : window) {
      auto c = QuotientPresentation::coinvariant(nu);
      std::uint64_t orbit = factorial(n);
      for (int p : nu.parts()) orbit /= factorial(p);
      auto h = c->hilbert();
      partial.expect(c->dim() == static_cast<long>(orbit), "nu=" + nu.to_string());
      bool sym = static_cast<int>(h.size()) - 1 == d_nu(nu);
      for (std::size_t d = 0; sym && d < h.size(); ++d) sym = h[d] == h[h.size() - 1 - d];
      poincare.expect(sym, "nu=" + nu.to_string());
    }
    for (const Composition& mu : window) {
      Partition lam = transpose(mu);
      Composition mu_sorted = Composition::from_partition(sort_to_partition(mu), opt.lo);
      for (const Composition& nu : window) {
        std::string where = "mu=" + mu.to_string() + " nu=" + nu.to_string();
        auto alg = algebra_for(mu, nu);
        long dim = alg->dim();
        tableau_dim.expect(dim == count_column_strict(lam, nu), where);
        bool nonzero = dominates(lam, sort_to_partition(nu));
        vanish.expect(nonzero == (dim > 0) && nonzero == is_nonzero(mu, nu), where);
        if (nonzero) {
          auto h = alg->hilbert();
          auto d = d_mu_nu(mu, nu);
          top.expect(d && static_cast<int>(h.size()) - 1 == *d && h.back() == kostka(lam, nu), where);
        }
        Composition nu_sorted = Composition::from_partition(sort_to_partition(nu), opt.lo);
        rearrange.expect(algebra_for(mu_sorted, nu_sorted)->hilbert() == alg->hilbert(), where);
      }
    }
  }
  finish(rep, {&full, &partial, &poincare, &tableau_dim, &vanish, &top, &rearrange}, t0);
  return rep;
}

// ------------------------------------------------------------------ operators

Report relations_suite(const SuiteOptions& opt) {
  Report rep;
  rep.suite = "relations";
  for (int n = 1; n <= opt.n; ++n) {
    rep.append(oracle_report(n, opt.lo, opt.hi));
    rep.append(relation_report(n, opt.lo, opt.hi, std::nullopt));
    for (const Composition& mu : partitions_as_mu(n, opt.lo)) rep.append(relation_report(n, opt.lo, opt.hi, mu));
  }
  rep.suite = "relations";
  return consolidate(rep);
}

Report ideal_invariance_suite(const SuiteOptions& opt) {
  Report rep;
  for (int n = 1; n <= opt.n; ++n) {
    for (const Composition& mu : partitions_as_mu(n, opt.lo)) rep.append(ideal_invariance_check(mu, opt.lo, opt.hi));
  }
  rep.suite = "ideal-invariance";
  return consolidate(rep);
}

Report weights_suite(const SuiteOptions& opt) {
  Report rep;
  for (int n = 1; n <= opt.n; ++n) {
    for (const Composition& mu : partitions_as_mu(n, opt.lo)) rep.append(weight_dim_report(mu, opt.lo, opt.hi));
  }
  rep.suite = "weights";
  return consolidate(rep);
}

Report hilbert_suite(const SuiteOptions& opt) {
  Report rep;
  rep.suite = "hilbert";
  Check identity("graded dimensions = t^d sum_kappa K_{kappa,nu} K_{kappa',mu}(t^-2)",
                 "Hilbert polynomial of C^mu_nu through Kostka-Foulkes polynomials");
  Check at_one("K_{tau,mu}(1) = K_{tau,mu+}", "Kostka-Foulkes polynomials specialize to Kostka numbers");
  Check flag("Hilbert series of C is prod_j (1 + t^2 + .. + t^{2(j-1)})", "Poincare polynomial of the flag variety");
  auto t0 = Clock::now();
  for (int n = 1; n <= opt.n; ++n) {
    auto window = compositions_of(n, opt.lo, opt.hi);
    for (const Composition& mu : window) {
      for (const Composition& nu : window) {
        auto s = hilbert_identity_sides(mu, nu);
        identity.expect(!s.negative_powers && s.left == s.right, "mu=" + mu.to_string() + " nu=" + nu.to_string());
      }
    }
    for (const Partition& tau : partitions_of(n)) {
      for (const Composition& mu : window) {
        at_one.expect(kostka_foulkes(tau, mu).at_one() == kostka(tau, Composition::from_partition(sort_to_partition(mu))),
                      "tau=" + tau.to_string() + " mu=" + mu.to_string());
      }
    }
    std::vector<long> product{1};
    for (int j = 1; j <= n; ++j) {
      std::vector<long> next(product.size() + 2 * static_cast<std::size_t>(j - 1), 0);
      for (std::size_t a = 0; a < product.size(); ++a) {
        for (int b = 0; b < j; ++b) next[a + 2 * static_cast<std::size_t>(b)] += product[a];
      }
      product = std::move(next);
    }
    flag.expect(QuotientPresentation::coinvariant(Composition::regular(n))->hilbert() == product, "n=" + std::to_string(n));
  }
  finish(rep, {&identity, &at_one, &flag}, t0);
  return rep;
}

Report traces_suite(const SuiteOptions& opt) {
  Report rep;
  for (int n = 1; n <= opt.n; ++n) {
    rep.append(trace_operator_check(n, opt.lo, opt.hi));
    rep.append(adjunction_report(n, opt.lo, opt.hi));
  }
  rep.suite = "traces";
  return consolidate(rep);
}

Table center_dimension_table(const SuiteOptions& opt) {
  Table t;
  t.title = "center dimension: dim C^mu_nu against column-strict lambda-tableaux of type nu";
  t.header = {"mu", "lambda", "nu", "dim C^mu_nu", "tableaux", "match"};
  for (int n = 1; n <= opt.n; ++n) {
    for (const Composition& mu : partitions_as_mu(n, opt.lo)) {
      Partition lam = transpose(mu);
      for (const Composition& nu : compositions_of(n, opt.lo, opt.hi)) {
        long dim = algebra_for(mu, nu)->dim();
        long count = count_column_strict(lam, nu);
        t.rows.push_back({mu.to_string(), lam.to_string(), nu.to_string(), std::to_string(dim), std::to_string(count),
                          dim == count ? "yes" : "NO"});
      }
    }
  }
  return t;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "ideals-equal", "dims",   "relations", "ideal-invariance",
                                              "weights",    "hilbert",      "traces", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "identities") return identity_suite(opt.n, opt.r_max);
  if (name == "ideals-equal") return ideals_equal_suite(opt);
  if (name == "dims") return dims_suite(opt);
  if (name == "relations") return relations_suite(opt);
  if (name == "ideal-invariance") return ideal_invariance_suite(opt);
  if (name == "weights") return weights_suite(opt);
  if (name == "hilbert") return hilbert_suite(opt);
  if (name == "traces") return traces_suite(opt);
  if (name == "all") {
    Report all;
    for (const std::string& s : suite_names()) {
      if (s != "all") all.append(run_suite(s, opt));
    }
    all.suite = "all";
    Table t = center_dimension_table(opt);
    Check center("center dimension table: computed dimension equals tableau count",
                 "dimension of the center of the category O block");
    for (const auto& row : t.rows) center.expect(row.back() == "yes", "mu=" + row[0] + " nu=" + row[2]);
    all.checks.push_back(center);
    all.tables.push_back(std::move(t));
    return all;
  }
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace coinv
