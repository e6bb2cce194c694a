// Runs the fourteen acceptance criteria. One PASS/FAIL line per criterion on
// stdout; failure details on stderr. Exit code 0 iff everything passed.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coinv/glaction.hpp"
#include "coinv/matrix.hpp"
#include "coinv/quotient.hpp"
#include "coinv/symmetric.hpp"
#include "coinv/tableaux.hpp"
#include "coinv/traces.hpp"
#include "coinv/verify.hpp"

using namespace coinv;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  long checks = 0;
  long failures = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (++failures <= 10) std::cerr << "    " << what << "\n";
  }
  void take(const Report& r) {
    for (const Check& c : r.checks) {
      checks += c.checks();
      failures += c.failures();
      for (const std::string& d : c.details()) std::cerr << "    " << c.name() << ": " << d << "\n";
    }
  }
};

Composition C(std::vector<int> parts, int lo = 1) { return Composition(lo, std::move(parts)); }

// All compositions of n = 1..max_n in the window [1, 4].
std::vector<Composition> sweep(int max_n) {
  std::vector<Composition> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const Composition& c : compositions_of(n, 1, 4)) out.push_back(c);
  }
  return out;
}

// (mu, nu) with equal totals, both in the width-4 window.
void for_pairs(int max_n, const std::function<void(const Composition&, const Composition&)>& fn) {
  for (int n = 1; n <= max_n; ++n) {
    auto all = compositions_of(n, 1, 4);
    for (const Composition& mu : all) {
      for (const Composition& nu : all) fn(mu, nu);
    }
  }
}

std::string pair_name(const Composition& mu, const Composition& nu) {
  return "mu=" + mu.to_string() + " nu=" + nu.to_string();
}

long multinomial(const Composition& nu) {
  long out = static_cast<long>(factorial(nu.total()));
  for (int p : nu.parts()) out /= static_cast<long>(factorial(p));
  return out;
}

Outcome worked_example() {
  Outcome o;
  auto alg = QuotientPresentation::tanisaki(C({1, 2, 1}), C({1, 2, 1}));
  auto x = [](int j) { return Polynomial::variable(4, j); };
  o.expect(alg->dim() == 5, "dimension is not 5");
  o.expect(alg->hilbert() == std::vector<long>{1, 0, 2, 0, 2}, "Hilbert series is not 1 + 2t^2 + 2t^4");
  o.expect(alg->contains(pow(x(1), 3)), "x1^3 does not reduce to 0");
  o.expect(alg->contains(pow(x(4), 3)), "x4^3 does not reduce to 0");
  o.expect(alg->contains(x(1) * x(4)), "x1*x4 does not reduce to 0");
  std::vector<Polynomial> listed{Polynomial::constant(4, 1), x(1), pow(x(1), 2), x(4), pow(x(4), 2)};
  Matrix m(static_cast<int>(alg->dim()), static_cast<int>(listed.size()));
  for (std::size_t c = 0; c < listed.size(); ++c) {
    m.set_column(static_cast<int>(c), alg->coordinates(alg->normal_form(listed[c])));
  }
  o.expect(m.rank() == 5, "1, x1, x1^2, x4, x4^2 are dependent");
  return o;
}

Outcome coinvariant_dims() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    o.expect(QuotientPresentation::coinvariant(Composition::regular(n))->dim() == static_cast<long>(factorial(n)),
             "dim C != n! for n=" + std::to_string(n));
    for (const Composition& nu : compositions_of(n, 1, n)) {
      auto h = QuotientPresentation::coinvariant(nu)->hilbert();
      long dim = 0;
      for (long v : h) dim += v;
      o.expect(dim == multinomial(nu), "dim C_nu != |S_n/S_nu| for nu=" + nu.to_string());
      bool symmetric = true;
      for (std::size_t d = 0; d < h.size(); ++d) symmetric = symmetric && h[d] == h[h.size() - 1 - d];
      o.expect(symmetric, "graded dimensions of C_nu not palindromic for nu=" + nu.to_string());
    }
  }
  return o;
}

Outcome dims_against_tableaux() {
  Outcome o;
  auto one = [&](const Composition& mu, const Composition& nu) {
    long dim = QuotientPresentation::tanisaki(mu, nu)->dim();
    o.expect(dim == count_column_strict(transpose(mu), nu), "dimension mismatch at " + pair_name(mu, nu));
  };
  for_pairs(4, one);
  // n = 5: every pair on the window [1, 5]
  auto five = compositions_of(5, 1, 5);
  for (const Composition& mu : five) {
    for (const Composition& nu : five) one(mu, nu);
  }
  return o;
}

Outcome vanishing() {
  Outcome o;
  auto one = [&](const Composition& mu, const Composition& nu) {
    bool nonzero = QuotientPresentation::tanisaki(mu, nu)->dim() > 0;
    o.expect(nonzero == dominates(transpose(mu), sort_to_partition(nu)), "vanishing mismatch at " + pair_name(mu, nu));
    o.expect(nonzero == is_nonzero(mu, nu), "is_nonzero mismatch at " + pair_name(mu, nu));
  };
  for_pairs(4, one);
  auto five = compositions_of(5, 1, 5);
  for (const Composition& mu : five) {
    for (const Composition& nu : five) one(mu, nu);
  }
  return o;
}

Outcome two_generating_sets() {
  Outcome o;
  for_pairs(4, [&](const Composition& mu, const Composition& nu) {
    auto h = tanisaki_generators_h(mu, nu, default_generator_cap(mu, nu));
    o.expect(ideals_equal(h, tanisaki_generators_e(mu, nu), nu), "ideals differ at " + pair_name(mu, nu));
  });
  return o;
}

Outcome top_degree() {
  Outcome o;
  for_pairs(4, [&](const Composition& mu, const Composition& nu) {
    auto alg = QuotientPresentation::tanisaki(mu, nu);
    auto d = d_mu_nu(mu, nu);
    if (alg->dim() == 0) {
      o.expect(!d.has_value(), "zero algebra with a top degree at " + pair_name(mu, nu));
      return;
    }
    auto h = alg->hilbert();
    o.expect(d && static_cast<int>(h.size()) - 1 == *d, "top degree differs from d^mu_nu at " + pair_name(mu, nu));
    o.expect(h.back() == kostka(transpose(mu), nu), "top dimension differs from Kostka at " + pair_name(mu, nu));
  });
  return o;
}

Outcome hilbert_identity() {
  Outcome o;
  for_pairs(4, [&](const Composition& mu, const Composition& nu) {
    auto alg = QuotientPresentation::tanisaki(mu, nu);
    if (alg->dim() == 0) return;
    auto s = hilbert_identity_sides(mu, nu);
    o.expect(s.left == alg->hilbert(), "left side is not the Hilbert series at " + pair_name(mu, nu));
    o.expect(!s.negative_powers && s.left == s.right, "Hilbert identity fails at " + pair_name(mu, nu));
  });
  return o;
}

template <class Fn>
Outcome per_n(Fn fn) {
  Outcome o;
  for (int n = 1; n <= 4; ++n) o.take(fn(n));
  return o;
}

Outcome relations() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) o.take(relation_report(n, 1, 4, std::nullopt));
  for (const Composition& mu : sweep(4)) o.take(relation_report(mu.total(), 1, 4, mu));
  return o;
}

Outcome ideal_invariance() {
  Outcome o;
  for (const Composition& mu : sweep(4)) o.take(ideal_invariance_check(mu, 1, 4));
  return o;
}

Outcome identities() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) o.take(identity_suite(n, 2 * n));
  return o;
}

Outcome center_table() {
  Outcome o;
  SuiteOptions opt = default_options(4);
  Table t = center_dimension_table(opt);
  o.expect(!t.rows.empty(), "empty table");
  for (const auto& row : t.rows) o.expect(row[3] == row[4], "row mu=" + row[0] + " nu=" + row[2]);
  // and against a direct count over every composition mu, not only partitions
  for_pairs(4, [&](const Composition& mu, const Composition& nu) {
    o.expect(algebra_for(mu, nu)->dim() == count_column_strict(transpose(mu), nu), pair_name(mu, nu));
  });
  return o;
}

struct Criterion {
  int number;
  std::string what;
  double limit;  // seconds; 0 means no bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> all{
      {1, "worked example (1,2,1): dimension, Hilbert series, relations, independence", 1, worked_example},
      {2, "coinvariant dimensions and Poincare symmetry, n <= 5", 60, coinvariant_dims},
      {3, "dim C^mu_nu equals column-strict tableau count, n <= 4 and n = 5", 600, dims_against_tableaux},
      {4, "vanishing of C^mu_nu matches dominance", 0, vanishing},
      {5, "h-form and e-form generate the same ideal, n <= 4", 600, two_generating_sets},
      {6, "top degree is d^mu_nu and top dimension is a Kostka number, n <= 4", 0, top_degree},
      {7, "graded dimensions match the Kostka-Foulkes expression, n <= 4", 600, hilbert_identity},
      {8, "polynomial E_i, F_i equal the free-module formulas, n <= 4", 600,
       [] { return per_n([](int n) { return oracle_report(n, 1, 4); }); }},
      {9, "gl relations on all weight spaces, every mu, n <= 4", 900, relations},
      {10, "E_i, F_i preserve the Tanisaki ideals, n <= 4", 0, ideal_invariance},
      {11, "delta isomorphism and triangle identities, n <= 4", 300,
       [] { return per_n([](int n) { return adjunction_report(n, 1, 4); }); }},
      {12, "trace maps equal the Chevalley operators, n <= 4", 600,
       [] { return per_n([](int n) { return trace_operator_check(n, 1, 4); }); }},
      {13, "symmetric function identity suite, n <= 5, r <= 2n", 300, identities},
      {14, "center dimension table, n <= 4", 0, center_table},
  };

  int failed = 0;
  for (const Criterion& c : all) {
    std::cerr << "criterion " << c.number << ": " << c.what << "\n";
    auto t0 = Clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_time = c.limit == 0 || secs < c.limit;
    bool ok = error.empty() && o.failures == 0 && o.checks > 0 && in_time;
    if (!error.empty()) std::cerr << "    exception: " << error << "\n";
    if (!in_time) std::cerr << "    over the time bound of " << c.limit << " s\n";
    char line[256];
    std::snprintf(line, sizeof line, "%s %2d %s (%ld checks, %ld failures, %.2f s)", ok ? "PASS" : "FAIL", c.number,
                  c.what.c_str(), o.checks, o.failures, secs);
    std::cout << line << std::endl;
    failed += ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
