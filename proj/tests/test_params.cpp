#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "mediagov/params.hpp"
#include "mediagov/rng.hpp"
#include "oracles.hpp"

using namespace mediagov;

TEST_CASE("defaults form the baseline profile and validate") {
  GameParams p;
  CHECK(p.b_c == 0.4);
  CHECK(p.b_u == 0.4);
  CHECK(p.c_u == 0.8);
  CHECK(p.q == 0.9);
  CHECK(p.c_i == 0.1);
  CHECK(p.c_c == 0.1);
  const GameParams v = validate_params(p);
  CHECK(v.q == p.q);
}

TEST_CASE("out-of-range and non-finite parameters are rejected") {
  GameParams p;
  p.q = 1.5;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  p.q = -0.01;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);

  p = GameParams{};
  p.c_u = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  p.c_u = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);

  p = GameParams{};
  p.b_u = -0.1;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  p = GameParams{};
  p.c_i = -1e-9;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
}

TEST_CASE("negative c_c is a legitimate regime") {
  GameParams p;
  p.c_c = -0.05;
  CHECK_NOTHROW(validate_params(p));
}

TEST_CASE("validation is idempotent") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const GameParams p = oracle::random_params(rng);
    const GameParams once = validate_params(p);
    const GameParams twice = validate_params(once);
    for (auto name : kParamNames) {
      CHECK(*param_by_name(once, name) == *param_by_name(twice, name));
    }
  }
}

TEST_CASE("c_u <= b_u warns instead of failing") {
  GameParams p;
  p.c_u = 0.3;  // below b_u = 0.4
  CHECK_NOTHROW(validate_params(p));
  CHECK(param_warnings(p).size() == 1);
  CHECK(param_warnings(GameParams{}).empty());
}

TEST_CASE("parameter name lookup covers exactly the six knobs") {
  GameParams p;
  for (auto name : kParamNames) {
    REQUIRE(param_by_name(p, name) != nullptr);
    *param_by_name(p, name) = 0.25;
  }
  CHECK(p.b_u == 0.25);
  CHECK(p.q == 0.25);
  CHECK(param_by_name(p, "bogus") == nullptr);
}

TEST_CASE("strategy enumerations have the frozen index order") {
  CHECK(static_cast<int>(UserStrategy::AllD) == 0);
  CHECK(static_cast<int>(UserStrategy::BMedia) == 1);
  CHECK(static_cast<int>(UserStrategy::GMedia) == 2);
  CHECK(static_cast<int>(UserStrategy::AllC) == 3);
  CHECK(static_cast<int>(CreatorStrategy::Unsafe) == 0);
  CHECK(static_cast<int>(CreatorStrategy::Safe) == 1);
  CHECK(kAllUserStrategies.size() == 4);
  CHECK(kAllCreatorStrategies.size() == 2);
  for (UserStrategy s : kAllUserStrategies) {
    CHECK(user_strategy_from_string(to_string(s)) == s);
  }
  for (CreatorStrategy s : kAllCreatorStrategies) {
    CHECK(creator_strategy_from_string(to_string(s)) == s);
  }
  CHECK(!user_strategy_from_string("Nope").has_value());
}
