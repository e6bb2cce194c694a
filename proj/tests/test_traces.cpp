#include <doctest.h>

#include "coinv/errors.hpp"
#include "coinv/glaction.hpp"
#include "coinv/traces.hpp"

using namespace coinv;

namespace {

Composition C(std::vector<int> parts, int lo = 1) { return Composition(lo, std::move(parts)); }
Polynomial x(int n, int j) { return Polynomial::variable(n, j); }
QuotientElement one_of(const Composition& nu) { return QuotientPresentation::coinvariant(nu)->one(); }

}  // namespace

TEST_SUITE("traces") {
  TEST_CASE("delta, a = 1") {
    auto ks = KeySituation::at(C({2}), 1);
    auto d = delta(ks, xk_power(ks, 0));
    REQUIRE(d.values.size() == 2);
    CHECK(d.values[0].is_zero());
    CHECK(d.values[1] == -one_of(C({2})));
    CHECK(d(xk_power(ks, 1)) == -one_of(C({2})));
    for (int r = 0; r <= 3; ++r) CHECK(delta_inv(delta(ks, xk_power(ks, r))) == xk_power(ks, r));
  }

  TEST_CASE("delta, a = 0") {
    auto ks = KeySituation::at(C({1, 1}), 1);
    CHECK(ks.a == 0);
    auto d = delta(ks, xk_power(ks, 0));
    REQUIRE(d.values.size() == 1);
    CHECK(d.values[0] == one_of(C({1, 1})));
  }

  TEST_CASE("delta and delta' are invertible on the whole pair algebra") {
    for (const KeySituation& ks : key_situations(3, 1, 3)) {
      for (const QuotientElement& g : pair_algebra(ks)->basis()) {
        CHECK(delta_inv(delta(ks, g)) == g);
        CHECK(delta_prime_inv(delta_prime(ks, g)) == g);
      }
    }
  }

  TEST_CASE("units") {
    auto ks = KeySituation::at(C({2}), 1);
    auto t = unit_iota_prime(ks);
    auto one = to_pair(ks, Polynomial::constant(2, 1));
    auto x1 = to_pair(ks, x(2, 1));
    auto want = PowerBasisTensor::pure(ks, t.shape, one, xk_power(ks, 1));
    want += Rational(-1) * PowerBasisTensor::pure(ks, t.shape, x1, one);
    CHECK(t == Rational(-1) * want);

    auto flat = KeySituation::at(C({1, 1}), 1);
    CHECK(unit_iota_prime(flat) == PowerBasisTensor::pure(flat, TensorShape::over_nu, to_pair(flat, Polynomial::constant(2, 1)),
                                                          to_pair(flat, Polynomial::constant(2, 1))));
    // b = 1: iota(1) = 1 (x) x_k - e_1(nu; i+1) (x) 1
    auto u = unit_iota(flat);
    auto p1 = to_pair(flat, Polynomial::constant(2, 1));
    auto want2 = PowerBasisTensor::pure(flat, u.shape, p1, xk_power(flat, 1));
    want2 += Rational(-1) * PowerBasisTensor::pure(flat, u.shape, to_pair(flat, x(2, 2)), p1);
    CHECK(u == want2);
  }

  TEST_CASE("counits") {
    for (const KeySituation& ks : key_situations(3, 1, 3)) {
      auto p1 = to_pair(ks, Polynomial::constant(3, 1));
      Rational s = ks.a % 2 ? -1 : 1;
      auto e = counit_eps(PowerBasisTensor::pure(ks, TensorShape::over_nu_prime, xk_power(ks, ks.a), p1));
      CHECK(e == s * one_of(ks.nu));
      auto e2 = counit_eps_prime(PowerBasisTensor::pure(ks, TensorShape::over_nu, xk_power(ks, ks.b), p1));
      CHECK(e2 == one_of(ks.nu_prime));
    }
    auto ks = KeySituation::at(C({2}), 1);
    CHECK_THROWS_AS(counit_eps(unit_iota_prime(ks)), InvalidInput);
  }

  TEST_CASE("trace maps") {
    auto unit = KeySituation::at(C({1}), 1);
    CHECK(trace_F(unit, one_of(C({1}))) == one_of(C({1}, 2)));
    auto ks = KeySituation::at(C({2}), 1);
    CHECK(trace_F(ks, one_of(C({2}))).rep() == Polynomial::constant(2, 2) * x(2, 1));
    for (const QuotientElement& z : QuotientPresentation::coinvariant(ks.nu_prime)->basis()) {
      CHECK(trace_E(ks, z) == apply_E_oracle(ks, z));
    }
  }

  TEST_CASE("triangle identities") {
    CHECK(triangle_identity_check(KeySituation::at(C({1}), 1)));
    CHECK(triangle_identity_check(KeySituation::at(C({2}), 1)));
    for (const KeySituation& ks : key_situations(3, 1, 3)) {
      Check c("triangle", "");
      CHECK(triangle_identity_check(ks, &c));
      CHECK(c.ok());
    }
  }

  TEST_CASE("trace maps are the Chevalley operators") {
    for (int n = 1; n <= 3; ++n) {
      for (const Check& c : trace_operator_check(n, 1, 3).checks) {
        INFO(c.name());
        CHECK(c.ok());
      }
      for (const Check& c : adjunction_report(n, 1, 3).checks) {
        INFO(c.name());
        CHECK(c.ok());
      }
    }
  }
}
