#include <doctest.h>

#include <random>

#include "coinv/errors.hpp"
#include "coinv/glaction.hpp"
#include "coinv/matrix.hpp"
#include "coinv/quotient.hpp"
#include "coinv/symmetric.hpp"
#include "coinv/tableaux.hpp"

using namespace coinv;

namespace {

Composition C(std::vector<int> parts, int lo = 1) { return Composition(lo, std::move(parts)); }
Polynomial x(int n, int j) { return Polynomial::variable(n, j); }

using Poly1 = std::vector<long>;

Poly1 mul(const Poly1& a, const Poly1& b) {
  Poly1 out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly1 div_exact(Poly1 a, const Poly1& b) {
  Poly1 q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  return q;
}

// [m]_{t^2}! as coefficients in t
Poly1 q_factorial(int m) {
  Poly1 out{1};
  for (int j = 1; j <= m; ++j) {
    Poly1 f(static_cast<std::size_t>(2 * j - 1), 0);
    for (int e = 0; e < j; ++e) f[static_cast<std::size_t>(2 * e)] = 1;
    out = mul(out, f);
  }
  return out;
}

// Hilbert series of C_nu: the t^2-multinomial coefficient.
Poly1 q_multinomial(const Composition& nu) {
  Poly1 num = q_factorial(nu.total());
  Poly1 den{1};
  for (int p : nu.parts()) den = mul(den, q_factorial(p));
  return div_exact(num, den);
}

// Tanisaki's original generators for nu regular: e_r(x_S) with
// r > |S| - lambda_{n-|S|+1} - .. - lambda_n.
std::vector<Polynomial> tanisaki_original(const Composition& mu) {
  int n = mu.total();
  Partition lam = transpose(mu);
  std::vector<Polynomial> gens;
  for (unsigned s = 1; s < (1u << n); ++s) {
    std::vector<int> vars;
    for (int j = 1; j <= n; ++j) {
      if (s & (1u << (j - 1))) vars.push_back(j);
    }
    int m = static_cast<int>(vars.size());
    int tail = 0;
    for (int j = n - m + 1; j <= n; ++j) tail += lam.part(j);
    for (int r = std::max(1, m - tail + 1); r <= m; ++r) gens.push_back(e_sym(n, vars, r));
  }
  return gens;
}

Polynomial random_invariant(std::mt19937& rng, const Composition& nu, int max_deg) {
  int n = nu.total();
  std::uniform_int_distribution<int> e(0, max_deg), coef(-3, 3);
  std::vector<Term> ts;
  for (int t = 0; t < 3; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (int& v : exps) v = e(rng);
    ts.push_back(Term{Monomial::from_exponents(exps), Rational(coef(rng))});
  }
  Polynomial f(n, ts);
  return symmetrize(f, nu);
}

}  // namespace

TEST_SUITE("quotients") {
  TEST_CASE("coinvariant generators") {
    auto g2 = coinvariant_generators(C({1, 1}));
    REQUIRE(g2.size() == 2);
    CHECK(g2[0] == x(2, 1) + x(2, 2));
    CHECK(g2[1] == x(2, 1) * x(2, 2));
    CHECK(coinvariant_generators(C({1})) == std::vector<Polynomial>{x(1, 1)});
    CHECK(coinvariant_generators(C({1, 1, 1})).size() == 3);
  }

  TEST_CASE("worked example: mu = nu = (1,2,1)") {
    Composition mu = C({1, 2, 1}), nu = C({1, 2, 1});
    auto e = tanisaki_generators_e(mu, nu);
    auto has = [&](const Polynomial& f) { return std::find(e.begin(), e.end(), f) != e.end(); };
    CHECK(has(x(4, 1) * x(4, 4)));
    CHECK(has(x(4, 1) * x(4, 2) * x(4, 3)));
    CHECK(has(x(4, 2) * x(4, 3) * x(4, 4)));
    for (int r = 1; r <= 4; ++r) CHECK(has(e_all(4, r)));

    auto alg = QuotientPresentation::tanisaki(mu, nu);
    CHECK(alg->dim() == 5);
    CHECK(alg->hilbert() == std::vector<long>{1, 0, 2, 0, 2});
    CHECK(alg->top_degree() == 4);
    CHECK(alg->graded_basis(4).size() == 2);
    CHECK(alg->normal_form(pow(x(4, 1), 3)).is_zero());
    CHECK(alg->normal_form(pow(x(4, 4), 3)).is_zero());
    CHECK(alg->normal_form(x(4, 1) * x(4, 4)).is_zero());
    CHECK(alg->contains(pow(x(4, 1), 3)));

    std::vector<Polynomial> listed{Polynomial::constant(4, 1), x(4, 1), pow(x(4, 1), 2), x(4, 4), pow(x(4, 4), 2)};
    Matrix m(5, 5);
    for (int c = 0; c < 5; ++c) m.set_column(c, alg->coordinates(alg->normal_form(listed[static_cast<std::size_t>(c)])));
    CHECK(m.rank() == 5);
  }

  TEST_CASE("graded bases") {
    auto c2 = QuotientPresentation::coinvariant(C({1, 1}));
    auto b = c2->graded_basis(2);
    REQUIRE(b.size() == 1);
    CHECK(b[0].rep() == x(2, 1));
    CHECK(c2->graded_basis(0).size() == 1);
    CHECK(c2->graded_basis(0)[0] == c2->one());
    CHECK(c2->graded_basis(4).empty());
  }

  TEST_CASE("dimensions") {
    CHECK(QuotientPresentation::coinvariant(C({1, 1, 1}))->dim() == 6);
    CHECK(QuotientPresentation::coinvariant(C({1, 2, 1}))->dim() == 12);
    CHECK(QuotientPresentation::tanisaki(C({2, 2}), C({4}))->dim() == 0);
    CHECK(QuotientPresentation::tanisaki(C({1, 1, 1, 1}), C({4}))->dim() == 1);
    CHECK(QuotientPresentation::tanisaki(C({4}), C({4}))->dim() == 0);
    CHECK(QuotientPresentation::coinvariant(Composition())->dim() == 1);
  }

  TEST_CASE("Hilbert series of C_nu is the t^2-multinomial coefficient") {
    for (int n = 1; n <= 5; ++n) {
      for (const Composition& nu : compositions_of(n, 1, n)) {
        INFO(nu.to_string());
        CHECK(QuotientPresentation::coinvariant(nu)->hilbert() == q_multinomial(nu));
      }
    }
  }

  TEST_CASE("normal forms") {
    auto c = QuotientPresentation::coinvariant(C({1, 2, 1}));
    CHECK(c->normal_form(e_all(4, 1)).is_zero());
    auto c2 = QuotientPresentation::coinvariant(C({1, 1}));
    CHECK(c2->normal_form(x(2, 2)).rep() == -x(2, 1));
    CHECK_THROWS_AS(c->normal_form(x(4, 2)), NotInvariant);
    // x2 is its own orbit representative, but x1 is missing
    CHECK_THROWS_AS(QuotientPresentation::coinvariant(C({2}))->normal_form(x(2, 2)), NotInvariant);
    CHECK_THROWS_AS(c->normal_form(x(4, 2) * x(4, 2) + x(4, 3) * x(4, 3) + x(4, 2)), NotInvariant);
    CHECK(c->contains(e_all(4, 3)));
    CHECK_FALSE(c->contains(Polynomial::constant(4, 1)));
  }

  TEST_CASE("normal form is an algebra map and vanishes exactly on the ideal") {
    std::mt19937 rng(17);
    for (const Composition& nu : {C({1, 1, 1}), C({2, 1}), C({1, 2, 1}), C({2, 2})}) {
      for (const Composition& mu : {Composition::regular(nu.total()), Composition::from_partition(transpose(
                                                                             sort_to_partition(nu)))}) {
        auto alg = QuotientPresentation::tanisaki(mu, nu);
        for (int t = 0; t < 8; ++t) {
          Polynomial f = random_invariant(rng, nu, 2), g = random_invariant(rng, nu, 2);
          auto nf = alg->normal_form(f), ng = alg->normal_form(g);
          CHECK(alg->normal_form(f * g) == alg->normal_form(nf.rep() * ng.rep()));
          CHECK(alg->normal_form(f + g) == nf + ng);
          CHECK(alg->normal_form(nf.rep()) == nf);
          CHECK(alg->contains(f - nf.rep()));
        }
        for (const Polynomial& gen : alg->generators()) CHECK(alg->contains(gen));
      }
    }
  }

  TEST_CASE("both generating sets and Tanisaki's original set give one ideal") {
    CHECK_FALSE(ideals_equal({x(1, 1)}, {pow(x(1, 1), 2)}, C({1})));
    for (int n = 1; n <= 4; ++n) {
      for (const Partition& p : partitions_of(n)) {
        Composition mu = Composition::from_partition(p);
        for (const Composition& nu : compositions_of(n, 1, 4)) {
          auto e = tanisaki_generators_e(mu, nu);
          int cap = default_generator_cap(mu, nu);
          CHECK(ideals_equal(tanisaki_generators_h(mu, nu, cap), e, nu));
          if (p.part(1) == 1) CHECK(ideals_equal(coinvariant_generators(nu), e, nu));
          if (nu.is_regular() && nu.lo() == 1) CHECK(ideals_equal(tanisaki_original(mu), e, nu));
        }
      }
    }
  }

  TEST_CASE("an extra zero block changes nothing") {
    Composition mu = C({2, 1}), nu = C({2, 0, 1});
    int cap = default_generator_cap(mu, nu);
    CHECK(ideals_equal(tanisaki_generators_h(mu, nu, cap), tanisaki_generators_h(mu, nu, cap, {2}), nu));
  }

  TEST_CASE("vanishing") {
    CHECK(is_nonzero(C({2}), C({1, 1})));
    CHECK(is_nonzero(C({1, 1}), C({2})));
    CHECK_FALSE(is_nonzero(C({2, 2}), C({4})));
    for (int n = 1; n <= 5; ++n) {
      for (const Composition& mu : compositions_of(n, 1, n)) {
        for (const Composition& nu : compositions_of(n, 1, n)) {
          CHECK(is_nonzero(mu, nu) == (QuotientPresentation::tanisaki(mu, nu)->dim() > 0));
        }
      }
    }
  }

  TEST_CASE("dimension, top degree and symmetry over all pairs of size up to 4") {
    for (int n = 1; n <= 4; ++n) {
      for (const Composition& mu : compositions_of(n, 1, 4)) {
        Partition lam = transpose(mu);
        for (const Composition& nu : compositions_of(n, 1, 4)) {
          auto alg = QuotientPresentation::tanisaki(mu, nu);
          CHECK(alg->dim() == count_column_strict(lam, nu));
          if (alg->dim() == 0) continue;
          auto h = alg->hilbert();
          CHECK(static_cast<int>(h.size()) - 1 == d_mu_nu(mu, nu));
          CHECK(h.back() == kostka(lam, nu));
          auto other = QuotientPresentation::tanisaki(Composition::from_partition(sort_to_partition(mu), 2),
                                                      Composition::from_partition(sort_to_partition(nu), 3));
          CHECK(other->hilbert() == h);
        }
      }
    }
  }

  TEST_CASE("Poincare duality for C_nu") {
    for (int n = 1; n <= 5; ++n) {
      for (const Composition& nu : compositions_of(n, 1, n)) {
        auto h = QuotientPresentation::coinvariant(nu)->hilbert();
        CHECK(static_cast<int>(h.size()) - 1 == d_nu(nu));
        for (std::size_t d = 0; d < h.size(); ++d) CHECK(h[d] == h[h.size() - 1 - d]);
      }
    }
  }

  TEST_CASE("division by eps_nu") {
    Composition nu = C({2, 1, 2});
    CHECK(antiinv_divide(eps_nu(nu), nu) == Polynomial::constant(5, 1));
    Polynomial g = x(3, 1) * x(3, 3) - x(3, 2);
    CHECK(antiinv_divide(g, Composition::regular(3)) == g);
    Polynomial half = Polynomial::constant(2, Rational(1, 2)) * (x(2, 1) - x(2, 2));
    CHECK(antiinv_divide(half, C({2})) == Polynomial::constant(2, 1));
    CHECK_THROWS_AS(antiinv_divide(x(2, 1), C({2})), NotAntiInvariant);
  }

  TEST_CASE("orbit sizes") {
    auto ring = block_ring({2, 3});
    for (int d = 0; d <= 4; ++d) {
      for (const Monomial& rep : ring->degree(d).reps) {
        CHECK(ring->orbit_size(rep) == static_cast<long>(ring->orbit_sum(rep).terms().size()));
      }
    }
  }

  TEST_CASE("coordinates round trip") {
    auto alg = QuotientPresentation::coinvariant(C({1, 2, 1}));
    for (const QuotientElement& z : alg->basis()) CHECK(alg->from_coordinates(alg->coordinates(z)) == z);
  }
}
