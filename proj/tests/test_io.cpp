#include <doctest.h>

#include "stacky/errors.hpp"
#include "stacky/io.hpp"
#include "test_util.hpp"

using namespace stacky;
using namespace stacky::testing;

TEST_CASE("render_rational") {
  CHECK(render_rational(Rational(7, 12)) == "7/12");
  CHECK(render_rational(Rational(-5, 3)) == "-5/3");
  CHECK(render_rational(Rational(4, 2)) == "2");
  CHECK(render_rational(Rational(0)) == "0");
  CHECK(render_rational(make_ratio(5, -3)) == "-5/3");
}

TEST_CASE("integer json handling") {
  CHECK(int_to_json(Int(42)) == Json(42));
  CHECK(int_to_json(Int(-7)) == Json(-7));
  CHECK(int_from_json(Json(-7), "x") == -7);
  const Int big = Int("123456789012345678901234567890");
  const auto encoded = int_to_json(big);
  CHECK(encoded.is_string());
  CHECK(int_from_json(encoded, "x") == big);
  CHECK_THROWS_AS(int_from_json(Json(1.5), "x"), ValidationError);
}

TEST_CASE("curve json") {
  SUBCASE("parses and validates") {
    auto j = Json::parse(R"({"genus": 0,
      "points": [{"label": "p", "order": 2}, {"label": "q", "order": 3}]})");
    auto result = curve_from_json(j);
    REQUIRE(result.ok());
    CHECK(same_curve(*result.curve, *football()));
  }
  SUBCASE("violations are collected, not thrown") {
    auto j = Json::parse(R"({"genus": -1,
      "points": [{"label": "p", "order": 1}]})");
    auto result = curve_from_json(j);
    REQUIRE_FALSE(result.ok());
    CHECK(result.violations.size() == 2);
  }
  SUBCASE("round trip") {
    auto curve = football();
    auto back = curve_from_json(curve_to_json(*curve));
    REQUIRE(back.ok());
    CHECK(same_curve(*back.curve, *curve));
  }
  SUBCASE("missing genus is malformed") {
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"points": []})")),
                    ValidationError);
  }
}

TEST_CASE("curve digest") {
  CHECK(curve_digest(*football()) == curve_digest(*football()));
  CHECK(curve_digest(*football()) != curve_digest(*genus2_one_point()));
  CHECK(curve_digest(*football()) !=
        curve_digest(*make_curve(0, {{"q", 3}, {"p", 2}})));
  CHECK(curve_digest(*football()).size() == 16);
}

TEST_CASE("invariant json") {
  auto curve = football();
  SUBCASE("parses the documented format") {
    auto j = Json::parse(R"({"rank": 2, "coarse_degree": 0,
      "multiplicities": {"p": [1, 1], "q": [1, 1, 0]}})");
    auto v = invariant_from_json(curve, j);
    CHECK(v == inv(curve, 2, 0, {{1, 1}, {1, 1, 0}}));
  }
  SUBCASE("omitted labels default to the pullback pattern") {
    auto j = Json::parse(R"({"rank": 3, "coarse_degree": 1,
      "multiplicities": {"q": [1, 1, 1]}})");
    auto v = invariant_from_json(curve, j);
    CHECK(v.mult_vector(0) == std::vector<Int>{3, 0});
    CHECK(v.mult_vector(1) == std::vector<Int>{1, 1, 1});
  }
  SUBCASE("unknown labels are rejected") {
    auto j = Json::parse(R"({"rank": 1, "coarse_degree": 0,
      "multiplicities": {"z": [1, 0]}})");
    CHECK_THROWS_WITH_AS(invariant_from_json(curve, j),
                         "invariant references unknown point label z",
                         ValidationError);
  }
  SUBCASE("length and sum violations are rejected") {
    CHECK_THROWS_AS(
        invariant_from_json(curve, Json::parse(R"({"rank": 1,
          "coarse_degree": 0, "multiplicities": {"p": [1]}})")),
        ValidationError);
    CHECK_THROWS_AS(
        invariant_from_json(curve, Json::parse(R"({"rank": 1,
          "coarse_degree": 0, "multiplicities": {"p": [1, 1]}})")),
        ValidationError);
  }
  SUBCASE("round trip on random invariants") {
    Rng rng(1001);
    for (int trial = 0; trial < 100; ++trial) {
      auto c = random_curve(rng);
      auto v = random_invariant(rng, c);
      CHECK(invariant_from_json(c, invariant_to_json(v)) == v);
    }
  }
}

TEST_CASE("line class json") {
  auto curve = football();
  SUBCASE("omitted twists are zero") {
    auto j = Json::parse(R"({"coarse_degree": 4})");
    CHECK(line_class_from_json(curve, j) == make_line_class(curve, 4));
  }
  SUBCASE("twist range is enforced") {
    auto j = Json::parse(R"({"coarse_degree": 0, "twists": {"p": 2}})");
    CHECK_THROWS_AS(line_class_from_json(curve, j), ValidationError);
  }
  SUBCASE("round trip on random classes") {
    Rng rng(1002);
    for (int trial = 0; trial < 100; ++trial) {
      auto c = random_curve(rng);
      auto l = random_line(rng, c);
      CHECK(line_class_from_json(c, line_class_to_json(l)) == l);
    }
  }
}

TEST_CASE("line sum json") {
  auto curve = football();
  SUBCASE("nonempty is required") {
    CHECK_THROWS_AS(line_sum_from_json(curve, Json::parse(R"({"summands": []})")),
                    ValidationError);
  }
  SUBCASE("round trip") {
    Rng rng(1003);
    auto sum = random_line_sum(rng, curve);
    auto back = line_sum_from_json(curve, line_sum_to_json(sum));
    CHECK(back.summands() == sum.summands());
    CHECK(back.total() == sum.total());
  }
}

TEST_CASE("point sum json") {
  auto j = Json::parse(R"({"x": 1, "y": 0, "z": -2})");
  auto sum = point_sum_from_json(j);
  CHECK(sum == FormalPointSum{{{"x", 1}, {"z", -2}}});
  CHECK(point_sum_from_json(point_sum_to_json(sum)) == sum);
}
