#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "rankeq/gen.hpp"
#include "rankeq/oracle.hpp"
#include "rankeq/payoff.hpp"
#include "rankeq/reduce.hpp"

using namespace rankeq;
using namespace rankeq::test;

TEST_CASE("symmetrizing the two-player fixture") {
  const auto [sym, map] = score_symmetrize(example_two_player());
  CHECK(map.ladder == std::vector<Rat>{R(2), R(3), R(4), R(5)});
  // Player 1 (scores 3 and 5) gains a score-2 copy at cost 0 and a score-4
  // copy at cost 1/2.
  CHECK(sym.costs[0] == std::vector<Rat>{R(0), R(0), R(1, 2), R(1, 2)});
  CHECK(map.origins[0][0].kind == RungOrigin::Kind::kCopied);
  CHECK(map.origins[0][0].dominating_rung == 1);
  CHECK(map.origins[0][1].kind == RungOrigin::Kind::kOriginal);
  CHECK(map.origins[0][2].kind == RungOrigin::Kind::kCopied);
  CHECK(map.origins[0][2].dominating_rung == 3);
  // Player 2 (scores 2 and 4) has nothing above 4: the score-5 rung costs 1.
  CHECK(sym.costs[1] == std::vector<Rat>{R(0), R(1, 2), R(1, 2), R(1)});
  CHECK(map.origins[1][3].kind == RungOrigin::Kind::kCostOnePad);
  CHECK(map.origins[1][3].dominating_rung == 0);
}

TEST_CASE("symmetrizing a shared-ladder game is the identity") {
  const RankingGame g = example_three_action().to_ranking();
  const auto [sym, map] = score_symmetrize(g);
  CHECK(sym == example_three_action());
  for (const auto& origins : map.origins)
    for (const auto& o : origins)
      CHECK(o.kind == RungOrigin::Kind::kOriginal);
}

TEST_CASE("symmetrization preserves pure payoffs under the index map") {
  SplitMix64 rng(3);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GeneratorSpec spec;
    spec.players = 2 + seed % 3;
    spec.actions = 2 + seed % 2;
    spec.seed = seed * 19;
    spec.tie_policy = seed % 2 ? TiePolicy::kAllow : TiePolicy::kForbid;
    const RankingGame g = generate_game(spec);
    const auto [sym, map] = score_symmetrize(g);
    const RankingGame sym_ranking = sym.to_ranking();
    // Rung of each original strategy.
    std::vector<std::vector<std::size_t>> rung(g.num_players());
    for (std::size_t i = 0; i < g.num_players(); ++i)
      for (std::size_t r = 0; r < map.origins[i].size(); ++r)
        if (map.origins[i][r].kind == RungOrigin::Kind::kOriginal) {
          rung[i].resize(
              std::max(rung[i].size(), map.origins[i][r].original_index + 1));
          rung[i][map.origins[i][r].original_index] = r;
        }
    for (int k = 0; k < 8; ++k) {
      const auto pick = random_pure(rng, strategy_counts(g));
      std::vector<std::size_t> mapped(pick.size());
      for (std::size_t i = 0; i < pick.size(); ++i) mapped[i] = rung[i][pick[i]];
      CHECK(pure_payoffs(g, pick) == pure_payoffs(sym_ranking, mapped));
    }
  }
}

TEST_CASE("lift back moves mass to the dominating strategy") {
  const auto [sym, map] = score_symmetrize(example_two_player());
  SUBCASE("zero mass on copies is untouched") {
    MixedProfile p;
    p.rows = {{R(0), R(1, 3), R(0), R(2, 3)}, {R(1, 2), R(0), R(1, 2), R(0)}};
    const auto lifted = lift_back(p, map);
    CHECK(lifted.rows[0] == std::vector<Rat>{R(1, 3), R(2, 3)});
    CHECK(lifted.rows[1] == std::vector<Rat>{R(1, 2), R(1, 2)});
  }
  SUBCASE("a quarter of mass on a copy lands on its dominator") {
    MixedProfile p;
    p.rows = {{R(1, 4), R(1, 4), R(0), R(1, 2)},
              {R(1, 2), R(1, 4), R(1, 4), R(0)}};
    const auto lifted = lift_back(p, map);
    CHECK(lifted.rows[0] == std::vector<Rat>{R(1, 2), R(1, 2)});
    CHECK(lifted.rows[1] == std::vector<Rat>{R(1, 2), R(1, 2)});
  }
}

TEST_CASE("solve the symmetrized fixture by brute force, lift, re-verify") {
  const RankingGame original = example_two_player();
  const auto [sym, map] = score_symmetrize(original);
  const auto equilibria = brute_force_two_player(sym.to_ranking());
  REQUIRE(!equilibria.empty());
  for (const auto& ne : equilibria) {
    const auto lifted = lift_back(ne, map);
    CHECK(verify(original, lifted).epsilon == R(0));
  }
}

TEST_CASE("lift-back soundness on seeded games with overlapping scores") {
  int nontrivial = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GeneratorSpec spec;
    spec.players = 2;
    spec.actions = 2;
    spec.seed = seed * 7 + 1;
    spec.tie_policy = TiePolicy::kAllow;
    const RankingGame g = generate_game(spec);
    const auto [sym, map] = score_symmetrize(g);
    if (sym.num_strategies() > g.players[0].size()) ++nontrivial;
    const auto equilibria = brute_force_two_player(sym.to_ranking());
    REQUIRE(!equilibria.empty());
    for (const auto& ne : equilibria)
      CHECK(verify(g, lift_back(ne, map)).epsilon == R(0));
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("polymatrix edges punish the weaker side and nature pays the rest") {
  const RankingGame g = example_two_player();
  const auto ab = fit_linear_prizes(g.prizes);
  REQUIRE(ab.has_value());
  const auto poly = build_polymatrix(g, ab->first, ab->second);
  // Pairwise tables are constant-sum at -b.
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k)
      CHECK(poly.edge[0][1][j][k] + poly.edge[1][0][k][j] == -ab->second);
  // The edge-sum decomposition reproduces the payoff matrix exactly.
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) {
      const auto pay = pure_payoffs(g, {j, k});
      CHECK(poly.pure_payoff({j, k}, 0) == pay[0]);
      CHECK(poly.pure_payoff({j, k}, 1) == pay[1]);
    }
}

TEST_CASE("rank payoff identity on random three-player linear-prize games") {
  SplitMix64 rng(47);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GeneratorSpec spec;
    spec.players = 3;
    spec.actions = 2 + seed % 2;
    spec.seed = seed * 23;
    spec.prize_model = PrizeModel::kLinear;
    const RankingGame g = generate_game(spec);
    const auto ab = fit_linear_prizes(g.prizes);
    REQUIRE(ab.has_value());
    const auto poly = build_polymatrix(g, ab->first, ab->second);
    for (int k = 0; k < 20; ++k) {
      const auto pick = random_pure(rng, strategy_counts(g));
      const auto pay = pure_payoffs(g, pick);
      for (std::size_t i = 0; i < 3; ++i)
        CHECK(poly.pure_payoff(pick, i) == pay[i]);
    }
  }
}

TEST_CASE("polymatrix construction rejects ties") {
  const RankingGame tied = example_three_action().to_ranking();
  CHECK_THROWS_AS(build_polymatrix(tied, R(2), R(1)), std::invalid_argument);
}
