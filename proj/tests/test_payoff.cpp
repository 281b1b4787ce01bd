#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mediagov/payoff.hpp"
#include "mediagov/rng.hpp"
#include "oracles.hpp"

using namespace mediagov;
using doctest::Approx;

TEST_CASE("all eight matrix cells match the hand-coded oracle") {
  Rng rng(202);
  for (int draw = 0; draw < 500; ++draw) {
    const GameParams p = draw == 0 ? GameParams{} : oracle::random_params(rng);
    const auto m = oracle::payoff_matrix(p);
    for (CreatorStrategy c : kAllCreatorStrategies) {
      for (UserStrategy u : kAllUserStrategies) {
        const PayoffPair pp = payoff_pair(c, u, p);
        const auto& cell = m[static_cast<int>(c)][static_cast<int>(u)];
        CHECK(std::fabs(pp.user - cell.user) <= 1e-12);
        CHECK(std::fabs(pp.creator - cell.creator) <= 1e-12);
      }
    }
  }
}

TEST_CASE("named cells") {
  GameParams p;  // defaults: q=0.9, b_u=b_c=0.4, c_u=0.8, c_i=c_c=0.1
  const PayoffPair dd = payoff_pair(CreatorStrategy::Unsafe, UserStrategy::AllD, p);
  CHECK(dd.user == 0.0);
  CHECK(dd.creator == 0.0);

  const PayoffPair sg = payoff_pair(CreatorStrategy::Safe, UserStrategy::GMedia, p);
  CHECK(sg.user == Approx(0.26).epsilon(1e-12));
  CHECK(sg.creator == Approx(0.26).epsilon(1e-12));

  const PayoffPair ub = payoff_pair(CreatorStrategy::Unsafe, UserStrategy::BMedia, p);
  CHECK(ub.user == Approx(-0.4).epsilon(1e-12));
  CHECK(ub.creator == Approx(0.2).epsilon(1e-12));
}

TEST_CASE("payoff table mirrors payoff_pair") {
  Rng rng(203);
  const GameParams p = oracle::random_params(rng);
  const PayoffTable t = make_payoff_table(p);
  for (CreatorStrategy c : kAllCreatorStrategies) {
    for (UserStrategy u : kAllUserStrategies) {
      const PayoffPair pp = payoff_pair(c, u, p);
      CHECK(t.user[static_cast<int>(c)][static_cast<int>(u)] == pp.user);
      CHECK(t.creator[static_cast<int>(c)][static_cast<int>(u)] == pp.creator);
    }
  }
}

TEST_CASE("expected user payoffs at pure creator populations") {
  GameParams p;
  PopulationState s;
  s.y = 1.0;
  auto pi = expected_user_payoffs(s, p);
  CHECK(pi[0] == 0.0);
  CHECK(pi[1] == Approx(0.2).epsilon(1e-12));
  CHECK(pi[2] == Approx(0.26).epsilon(1e-12));
  CHECK(pi[3] == Approx(0.4).epsilon(1e-12));

  s.y = 0.0;
  pi = expected_user_payoffs(s, p);
  CHECK(pi[0] == 0.0);
  CHECK(pi[1] == Approx(-0.4).epsilon(1e-12));
  CHECK(pi[2] == Approx(-0.18).epsilon(1e-12));
  CHECK(pi[3] == Approx(-0.8).epsilon(1e-12));
}

TEST_CASE("pi_AllD is identically zero") {
  Rng rng(204);
  for (int i = 0; i < 100; ++i) {
    const PopulationState s = oracle::random_state(rng);
    CHECK(expected_user_payoffs(s, oracle::random_params(rng))[0] == 0.0);
  }
}

TEST_CASE("expected creator payoffs at pure user populations") {
  GameParams p;
  PopulationState s;
  s.x = {1.0, 0.0, 0.0, 0.0};
  auto pi = expected_creator_payoffs(s, p);
  CHECK(pi[0] == 0.0);                          // pi_D
  CHECK(pi[1] == Approx(-0.1).epsilon(1e-12));  // pi_C = -c_c

  s.x = {0.0, 0.0, 0.0, 1.0};
  pi = expected_creator_payoffs(s, p);
  CHECK(pi[0] == Approx(0.4).epsilon(1e-12));
  CHECK(pi[1] == Approx(0.3).epsilon(1e-12));
}

TEST_CASE("random recommendations erase the creator's informational edge") {
  GameParams p;
  p.q = 0.5;
  PopulationState s;
  s.x = {0.0, 0.0, 1.0, 0.0};
  const auto pi = expected_creator_payoffs(s, p);
  CHECK(pi[0] == Approx(pi[1] + p.c_c).epsilon(1e-12));
}

TEST_CASE("expected payoffs are the frequency-weighted matrix rows") {
  Rng rng(205);
  for (int i = 0; i < 300; ++i) {
    const GameParams p = oracle::random_params(rng);
    const PopulationState s = oracle::random_state(rng);
    const auto user = expected_user_payoffs(s, p);
    for (UserStrategy u : kAllUserStrategies) {
      const double direct = s.y * payoff_pair(CreatorStrategy::Safe, u, p).user +
                            (1.0 - s.y) * payoff_pair(CreatorStrategy::Unsafe, u, p).user;
      CHECK(std::fabs(user[static_cast<int>(u)] - direct) <= 1e-12);
    }
    const auto creator = expected_creator_payoffs(s, p);
    for (CreatorStrategy c : kAllCreatorStrategies) {
      double direct = 0.0;
      for (UserStrategy u : kAllUserStrategies) {
        direct += s.x[static_cast<int>(u)] * payoff_pair(c, u, p).creator;
      }
      CHECK(std::fabs(creator[static_cast<int>(c)] - direct) <= 1e-12);
    }
  }
}

TEST_CASE("with q=0.5 and c_i=0 the good medium degenerates to the bad one") {
  GameParams p;
  p.q = 0.5;
  p.c_i = 0.0;
  for (CreatorStrategy c : kAllCreatorStrategies) {
    const PayoffPair g = payoff_pair(c, UserStrategy::GMedia, p);
    const PayoffPair b = payoff_pair(c, UserStrategy::BMedia, p);
    CHECK(g.user == Approx(b.user).epsilon(1e-15));
    CHECK(g.creator == Approx(b.creator).epsilon(1e-15));
  }
}

TEST_CASE("cooperation ratio: corners, example, bounds, affinity in y") {
  GameParams p;
  CHECK(avg_cooperation(corner_state(UserStrategy::AllD, CreatorStrategy::Unsafe), p) == 0.0);
  CHECK(avg_cooperation(corner_state(UserStrategy::AllC, CreatorStrategy::Safe), p) == 1.0);

  PopulationState s;
  s.x = {0.0, 0.0, 1.0, 0.0};
  s.y = 0.5;
  CHECK(avg_cooperation(s, p) == Approx(0.5).epsilon(1e-12));

  Rng rng(206);
  for (int i = 0; i < 200; ++i) {
    const GameParams rp = oracle::random_params(rng);
    PopulationState rs = oracle::random_state(rng);
    const double eta = avg_cooperation(rs, rp);
    CHECK(eta >= 0.0);
    CHECK(eta <= 1.0);
    // affine in y: eta(y) interpolates between the y=0 and y=1 values
    const double t = rs.y;
    PopulationState lo = rs, hi = rs;
    lo.y = 0.0;
    hi.y = 1.0;
    const double interp = (1.0 - t) * avg_cooperation(lo, rp) + t * avg_cooperation(hi, rp);
    CHECK(eta == Approx(interp).epsilon(1e-12));
  }
}

TEST_CASE("empirical cooperation matches the frequency formula") {
  GameParams p;
  std::vector<UserStrategy> users(30, UserStrategy::AllD);
  std::vector<CreatorStrategy> creators(10, CreatorStrategy::Unsafe);
  CHECK(empirical_cooperation(users, creators, p) == 0.0);

  users.assign(50, UserStrategy::GMedia);
  users.insert(users.end(), 50, UserStrategy::AllC);
  creators.assign(20, CreatorStrategy::Safe);
  CHECK(empirical_cooperation(users, creators, p) == Approx(0.975).epsilon(1e-12));

  Rng rng(207);
  for (int i = 0; i < 50; ++i) {
    std::vector<UserStrategy> us;
    std::vector<CreatorStrategy> cs;
    const auto nu = 1 + rng.uniform_below(40);
    const auto nc = 1 + rng.uniform_below(20);
    PopulationState s;
    s.x = {0, 0, 0, 0};
    for (std::uint64_t k = 0; k < nu; ++k) {
      us.push_back(static_cast<UserStrategy>(rng.uniform_below(4)));
      s.x[static_cast<int>(us.back())] += 1.0;
    }
    for (double& v : s.x) v /= static_cast<double>(nu);
    double safe = 0;
    for (std::uint64_t k = 0; k < nc; ++k) {
      cs.push_back(static_cast<CreatorStrategy>(rng.uniform_below(2)));
      safe += cs.back() == CreatorStrategy::Safe ? 1.0 : 0.0;
    }
    s.y = safe / static_cast<double>(nc);
    const GameParams rp = oracle::random_params(rng);
    CHECK(empirical_cooperation(us, cs, rp) == Approx(avg_cooperation(s, rp)).epsilon(1e-12));
  }
}

TEST_CASE("empirical cooperation rejects empty populations") {
  GameParams p;
  std::vector<UserStrategy> users(3, UserStrategy::AllC);
  std::vector<CreatorStrategy> none;
  CHECK_THROWS_AS(empirical_cooperation(users, none, p), std::invalid_argument);
  std::vector<UserStrategy> no_users;
  std::vector<CreatorStrategy> creators(3, CreatorStrategy::Safe);
  CHECK_THROWS_AS(empirical_cooperation(no_users, creators, p), std::invalid_argument);
}

TEST_CASE("state validity") {
  PopulationState s;
  CHECK(is_valid_state(s));
  s.x = {0.5, 0.5, 0.1, -0.1};
  CHECK(!is_valid_state(s));
  s.x = {0.5, 0.25, 0.25, 0.1};
  CHECK(!is_valid_state(s));
  s = PopulationState{};
  s.y = 1.2;
  CHECK(!is_valid_state(s));
}
