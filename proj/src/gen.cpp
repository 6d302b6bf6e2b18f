#include "rankeq/gen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rankeq {

namespace {

// `count` distinct values from [lo, hi], ascending.
std::vector<long long> distinct_sorted(SplitMix64& rng, std::size_t count,
                                       long long lo, long long hi) {
  if (hi - lo + 1 < static_cast<long long>(count))
    throw std::invalid_argument("generate_game: range too small");
  std::set<long long> chosen;
  while (chosen.size() < count)
    chosen.insert(lo + static_cast<long long>(
                           rng.below(static_cast<std::uint64_t>(hi - lo + 1))));
  return {chosen.begin(), chosen.end()};
}

}  // namespace

RankingGame generate_game(const GeneratorSpec& spec) {
  const std::size_t d = spec.players;
  const std::size_t n = spec.actions;
  if (d == 0 || n == 0)
    throw std::invalid_argument("generate_game: players and actions >= 1");
  if (spec.prize_model == PrizeModel::kLinear && d < 2)
    throw std::invalid_argument("generate_game: linear prizes need >= 2 players");
  if (d < 2)
    throw std::invalid_argument("generate_game: prizes need >= 2 players");
  if (spec.cost_denominator < static_cast<long long>(n))
    throw std::invalid_argument("generate_game: cost denominator too small");

  SplitMix64 rng(spec.seed ^ 0x5eedULL);
  RankingGame g;

  // Prizes: already normalized, u_1 = 1 and u_d = 0.
  switch (spec.prize_model) {
    case PrizeModel::kSingle:
      g.prizes.assign(d, Rat(0));
      g.prizes[0] = Rat(1);
      break;
    case PrizeModel::kLinear:
      for (std::size_t k = 1; k <= d; ++k)
        g.prizes.push_back(Rat(static_cast<long long>(d - k),
                               static_cast<long long>(d - 1)));
      break;
    case PrizeModel::kRandomNonIncreasing: {
      std::vector<long long> mids;
      for (std::size_t k = 0; k + 2 < d; ++k)
        mids.push_back(static_cast<long long>(
            rng.below(static_cast<std::uint64_t>(spec.cost_denominator) + 1)));
      std::sort(mids.rbegin(), mids.rend());
      g.prizes.push_back(Rat(1));
      for (long long v : mids) g.prizes.push_back(Rat(v, spec.cost_denominator));
      g.prizes.push_back(Rat(0));
      break;
    }
  }

  // Scores by tie policy.
  std::vector<std::vector<long long>> scores(d);
  switch (spec.tie_policy) {
    case TiePolicy::kForbid: {
      const auto all = distinct_sorted(rng, d * n, 1,
                                       4 * static_cast<long long>(d * n));
      // Deal the sorted pool round-robin so every player stays sorted.
      std::vector<long long> pool = all;
      // Fisher-Yates with our own rng, then sort per player.
      for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng.below(i)]);
      for (std::size_t i = 0; i < d; ++i) {
        scores[i].assign(pool.begin() + static_cast<long long>(i * n),
                         pool.begin() + static_cast<long long>((i + 1) * n));
        std::sort(scores[i].begin(), scores[i].end());
      }
      break;
    }
    case TiePolicy::kAllow:
      // A small shared pool makes cross-player ties likely.
      for (std::size_t i = 0; i < d; ++i)
        scores[i] = distinct_sorted(rng, n, 1, 2 * static_cast<long long>(n));
      break;
    case TiePolicy::kForceSharedLadder: {
      const auto ladder =
          distinct_sorted(rng, n, 1, 4 * static_cast<long long>(n));
      for (std::size_t i = 0; i < d; ++i) scores[i] = ladder;
      break;
    }
  }

  for (std::size_t i = 0; i < d; ++i) {
    const auto cost_steps =
        distinct_sorted(rng, n - 1, 1, spec.cost_denominator);
    std::vector<StrategySpec> strategies;
    strategies.push_back({Rat(0), Rat(scores[i][0])});
    for (std::size_t j = 1; j < n; ++j)
      strategies.push_back(
          {Rat(cost_steps[j - 1], spec.cost_denominator), Rat(scores[i][j])});
    g.players.push_back(std::move(strategies));
  }

  if (!validate(g).empty())
    throw std::logic_error("generate_game: produced an invalid game");
  return g;
}

}  // namespace rankeq
