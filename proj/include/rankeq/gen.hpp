// Seeded random instance generation. Same seed, same game, byte for byte.
#pragma once

#include <cstdint>
#include <cstddef>

#include "rankeq/game.hpp"

namespace rankeq {

enum class TiePolicy { kForbid, kAllow, kForceSharedLadder };
enum class PrizeModel { kSingle, kLinear, kRandomNonIncreasing };

struct GeneratorSpec {
  std::size_t players = 2;
  std::size_t actions = 2;
  std::uint64_t seed = 0;
  TiePolicy tie_policy = TiePolicy::kForbid;
  PrizeModel prize_model = PrizeModel::kSingle;
  long long cost_denominator = 60;  // costs are k / denominator
};

/// Deterministic generator; emitted games validate cleanly and are already
/// normalized (zero cheapest costs, prizes from 1 down to 0). Throws
/// std::invalid_argument on contradictory settings.
RankingGame generate_game(const GeneratorSpec& spec);

/// Small deterministic PRNG so generated corpora never depend on the
/// standard library's distribution implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-enough draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace rankeq
