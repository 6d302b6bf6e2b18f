#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "rankeq/exact.hpp"
#include "rankeq/gen.hpp"
#include "rankeq/oracle.hpp"
#include "rankeq/payoff.hpp"

using namespace rankeq;
using namespace rankeq::test;

TEST_CASE("brute force finds exactly the uniform equilibrium") {
  const auto all = brute_force_two_player(example_two_player());
  REQUIRE(all.size() == 1);
  CHECK(all[0] == example_two_player_equilibrium());
}

TEST_CASE("brute force on the three-action fixture") {
  const auto all = brute_force_two_player(example_three_action().to_ranking());
  REQUIRE(all.size() == 1);
  CHECK(all[0] == example_three_action_equilibrium());
}

TEST_CASE("every equilibrium reported verifies exactly") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorSpec spec;
    spec.players = 2;
    spec.actions = 2 + seed % 2;
    spec.seed = seed * 607;
    spec.tie_policy = seed % 2 ? TiePolicy::kAllow : TiePolicy::kForbid;
    const RankingGame g = generate_game(spec);
    const auto all = brute_force_two_player(g);
    CHECK(!all.empty());
    for (const auto& ne : all) CHECK(verify(g, ne).epsilon == R(0));
  }
}

TEST_CASE("indifference point of the three-player binary game is one half") {
  const auto r = symmetric_binary_mixed(3, R(1, 2));
  CHECK(!r.degenerate);
  // The gap here is affine, 1/6 - p/3, with the exact root at one half.
  CHECK((r.p_star - R(1, 2)).abs() <= R(1, 1000000000));
  CHECK(r.gap.abs() <= R(1, 1000000000));
}

TEST_CASE("two players at cost one half are indifferent everywhere") {
  const auto r = symmetric_binary_mixed(2, R(1, 2));
  CHECK(r.degenerate);
}

TEST_CASE("ten players, cheap costly action") {
  const auto r = symmetric_binary_mixed(10, R(1, 5));
  CHECK(!r.degenerate);
  ScoreSymmetricGame g = two_action_game(std::vector<Rat>(10, R(1, 5)));
  MixedProfile profile;
  profile.rows.assign(10, {R(1) - r.p_star, r.p_star});
  CHECK(verify(g, profile).epsilon <= R(1, 1000000000));
}

TEST_CASE("cost bounds are enforced") {
  CHECK_THROWS_AS(symmetric_binary_mixed(4, R(1, 8)), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_binary_mixed(4, R(1)), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_binary_mixed(4, R(1, 4)), std::invalid_argument);
}

TEST_CASE("grid search finds the exact equilibrium on a quarter grid") {
  const auto r = grid_search_ne(example_two_player(), R(1, 4));
  CHECK(r.epsilon == R(0));
  CHECK(r.profile == example_two_player_equilibrium());
}

TEST_CASE("unit grid search is a pure-profile scan") {
  // The two-player fixture has no pure equilibrium, so the unit grid cannot
  // reach zero.
  const auto r = grid_search_ne(example_two_player(), R(1));
  CHECK(r.epsilon > R(0));
  CHECK(r.profiles_scanned == 4);

  // A dominant-strategy game is solved exactly by the same scan.
  RankingGame g;
  g.prizes = {R(1), R(0)};
  g.players = {
      {{R(0), R(1)}, {R(3, 4), R(6)}},
      {{R(0), R(2)}, {R(3, 4), R(5)}},
  };
  CHECK(grid_search_ne(g, R(1)).epsilon == R(0));
}

TEST_CASE("grid search rejects a non-inverse-integer grid") {
  CHECK_THROWS_AS(grid_search_ne(example_two_player(), R(2, 5)),
                  std::invalid_argument);
}
