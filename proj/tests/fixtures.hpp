// Shared test fixtures and helpers.
#pragma once

#include <string>
#include <vector>

#include "rankeq/game.hpp"
#include "rankeq/gen.hpp"
#include "rankeq/rat.hpp"

namespace rankeq::test {

inline Rat R(long long n, long long d = 1) { return Rat(n, d); }

// Two players, two strategies each, a single prize: the row player is
// stronger, and the unique equilibrium mixes both players uniformly.
//   scores: (3, 5) vs (2, 4); costs (0, 1/2) for both; prizes (1, 0).
inline RankingGame example_two_player() {
  RankingGame g;
  g.players = {
      {{R(0), R(3)}, {R(1, 2), R(5)}},
      {{R(0), R(2)}, {R(1, 2), R(4)}},
  };
  g.prizes = {R(1), R(0)};
  return g;
}

inline MixedProfile example_two_player_equilibrium() {
  MixedProfile p;
  p.rows = {{R(1, 2), R(1, 2)}, {R(1, 2), R(1, 2)}};
  return p;
}

// Two players sharing a three-rung ladder, single prize; no pure
// equilibrium, and the unique one is ((2/3, 0, 1/3), (2/5, 3/5, 0)).
inline ScoreSymmetricGame example_three_action() {
  ScoreSymmetricGame g;
  g.scores = {R(1), R(2), R(3)};
  g.costs = {
      {R(0), R(2, 3), R(4, 5)},
      {R(0), R(1, 3), R(2, 3)},
  };
  g.prizes = {R(1), R(0)};
  return g;
}

inline MixedProfile example_three_action_equilibrium() {
  MixedProfile p;
  p.rows = {{R(2, 3), R(0), R(1, 3)}, {R(2, 5), R(3, 5), R(0)}};
  return p;
}

// Shared two-rung ladder, d players, single prize, per-player high costs.
inline ScoreSymmetricGame two_action_game(const std::vector<Rat>& high_costs,
                                          std::vector<Rat> prizes = {}) {
  ScoreSymmetricGame g;
  g.scores = {R(0), R(1)};
  for (const Rat& c : high_costs) g.costs.push_back({R(0), c});
  if (prizes.empty()) {
    prizes.assign(high_costs.size(), R(0));
    prizes[0] = R(1);
  }
  g.prizes = std::move(prizes);
  return g;
}

// Random probability rows with exact rational entries.
inline MixedProfile random_profile(SplitMix64& rng,
                                   const std::vector<std::size_t>& sizes,
                                   long long denominator = 12) {
  MixedProfile p;
  for (std::size_t n : sizes) {
    std::vector<long long> w(n);
    long long total = 0;
    for (auto& v : w) {
      v = static_cast<long long>(rng.below(denominator + 1));
      total += v;
    }
    if (total == 0) {
      w[rng.below(n)] = 1;
      total = 1;
    }
    std::vector<Rat> row;
    row.reserve(n);
    for (long long v : w) row.push_back(Rat(v, total));
    p.rows.push_back(std::move(row));
  }
  return p;
}

inline std::vector<std::size_t> random_pure(SplitMix64& rng,
                                            const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> pick;
  pick.reserve(sizes.size());
  for (std::size_t n : sizes) pick.push_back(rng.below(n));
  return pick;
}

}  // namespace rankeq::test
