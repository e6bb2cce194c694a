#include <doctest.h>

#include "coinv/errors.hpp"
#include "coinv/io.hpp"

using namespace coinv;

namespace {
Composition C(std::vector<int> parts, int lo = 1) { return Composition(lo, std::move(parts)); }
Polynomial x(int n, int j) { return Polynomial::variable(n, j); }
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parsing compositions, partitions and windows") {
    CHECK(parse_composition("1,2,1") == C({1, 2, 1}));
    CHECK(parse_composition("1,2,1@3") == C({1, 2, 1}, 3));
    CHECK(parse_composition(" 0, 2 ") == C({2}, 2));
    CHECK(parse_composition("").empty());
    CHECK(parse_composition("@4").empty());
    CHECK(composition_offset("0,2") == 1);
    CHECK(composition_offset("2@-1") == -1);
    CHECK(parse_partition("1,3,1") == Partition({3, 1, 1}));
    CHECK(parse_partition("2,0") == Partition({2}));
    CHECK(parse_window("0:5") == std::pair<int, int>{0, 5});
    for (const char* bad : {"1,,2", "1,a", "1,-1", "1,2,", "1@x", "1.5"}) {
      INFO(bad);
      CHECK_THROWS_AS(parse_composition(bad), InvalidInput);
    }
    CHECK_THROWS_AS(parse_window("3"), InvalidInput);
    CHECK_THROWS_AS(parse_window("4:3"), InvalidInput);
  }

  TEST_CASE("composition JSON round trip") {
    for (const Composition& c : {C({1, 2, 1}), C({2}, 5), Composition()}) {
      CHECK(composition_from_json(to_json(c)) == c);
    }
    CHECK(composition_from_json(Json("3,1@2")) == C({3, 1}, 2));
    CHECK(to_json(C({1, 2, 1})).dump() == R"({"lo":1,"parts":[1,2,1]})");
  }

  TEST_CASE("polynomial JSON round trip") {
    Polynomial f = Polynomial::constant(3, Rational(-7, 3)) * x(3, 1) * x(3, 3) + pow(x(3, 2), 4) +
                   Polynomial::constant(3, Rational(mpz_class("123456789012345678901234567890")));
    Json j = to_json(f);
    CHECK(polynomial_from_json(j, 3) == f);
    CHECK(j[0]["exp"] == Json::array({0, 4, 0}));
    CHECK(polynomial_from_json(Json::parse(R"([{"exp":[1,0],"num":2}])"), 2) == Polynomial::constant(2, 2) * x(2, 1));
    CHECK(polynomial_from_json(Json::parse(R"([{"exp":[1,0],"num":"2","den":"4"}])"), 2) ==
          Polynomial::constant(2, Rational(1, 2)) * x(2, 1));
    CHECK(polynomial_from_json(Json::array(), 2).is_zero());
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"exp":[1],"num":1}])"), 2), InvalidInput);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"exp":[1,0],"num":1,"den":0}])"), 2), InvalidInput);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"exp":[1,0],"num":"x"}])"), 2), InvalidInput);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"exp":[1,0]})"), 2), InvalidInput);
  }

  TEST_CASE("weight families") {
    auto alg = QuotientPresentation::coinvariant(C({1, 1}));
    WeightFamily wf = WeightFamily::single(alg->normal_form(x(2, 1)), 1, 3);
    Json j = to_json(wf);
    CHECK(j["n"] == 2);
    CHECK(j["window"] == Json::array({1, 3}));
    CHECK_FALSE(j.contains("mu"));
    WeightFamily back = family_from_json(j, 2, 1, 3, std::nullopt);
    REQUIRE(back.components.size() == 1);
    CHECK(back.components.begin()->second == wf.components.begin()->second);
    // components are reduced on the way in
    Json raw = Json::parse(R"({"components":[{"nu":"1,1","element":[{"exp":[0,1],"num":1}]}]})");
    auto red = family_from_json(raw, 2, 1, 3, std::nullopt);
    CHECK(red.components.begin()->second.rep() == -x(2, 1));
    Json noninv = Json::parse(R"({"components":[{"nu":"2","element":[{"exp":[0,1],"num":1}]}]})");
    CHECK_THROWS_AS(family_from_json(noninv, 2, 1, 3, std::nullopt), InvalidInput);
  }

  TEST_CASE("reports") {
    Report r{"demo", {}, {}};
    Check c("a check", "somewhere");
    c.pass(3);
    c.seconds = 1.5;
    r.checks.push_back(c);
    Check bad("another", "elsewhere");
    bad.fail("it broke");
    r.checks.push_back(bad);
    r.tables.push_back(Table{"t", {"x", "y"}, {{"1", "2"}}});
    Json j = to_json(r, false);
    CHECK(j["ok"] == false);
    CHECK_FALSE(j.dump().find("seconds") != std::string::npos);
    CHECK(to_json(r, true)["checks"][0]["seconds"] == 1.5);
    CHECK(j["checks"][1]["details"][0] == "it broke");
    std::string text = report_text(r, false);
    CHECK(text.find("a check") != std::string::npos);
    CHECK(text.find("it broke") != std::string::npos);
    CHECK(report_text(r, false) == text);
  }

  TEST_CASE("tableaux and integer polynomials") {
    Tableau t;
    t.shape = Partition({2, 1});
    t.rows = {{1, 2}, {3}};
    CHECK(to_json(t).dump() == "[[1,2],[3]]");
    CHECK(to_json(IntPolynomial({0, 1, 1})).dump() == "[0,1,1]");
    CHECK(to_json(Partition({3, 1})).dump() == "[3,1]");
  }
}
