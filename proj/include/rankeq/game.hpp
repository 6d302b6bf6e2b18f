// Game representations, validation, and normalization preprocessing.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rankeq/rat.hpp"

namespace rankeq {

/// One pure strategy: an effort cost and a score. Only the ordering of
/// scores matters to the payoff rules; costs are paid unconditionally.
struct StrategySpec {
  Rat cost;
  Rat score;

  friend bool operator==(const StrategySpec&, const StrategySpec&) = default;
};

/// A ranking game: per-player strategy lists plus a prize vector
/// u_1 >= ... >= u_d awarded by rank, ties sharing the spanned prizes.
struct RankingGame {
  std::vector<std::vector<StrategySpec>> players;
  std::vector<Rat> prizes;

  std::size_t num_players() const { return players.size(); }
  std::size_t num_strategies(std::size_t i) const { return players[i].size(); }

  friend bool operator==(const RankingGame&, const RankingGame&) = default;
};

/// Score-symmetric game: one shared score ladder, player-specific cost rows.
/// Cost rows are non-decreasing (weakly dominated duplicates are legal; the
/// symmetrization reduction produces them).
struct ScoreSymmetricGame {
  std::vector<Rat> scores;                 // strictly increasing ladder
  std::vector<std::vector<Rat>> costs;     // costs[i][j] for player i, rung j
  std::vector<Rat> prizes;

  std::size_t num_players() const { return costs.size(); }
  std::size_t num_strategies() const { return scores.size(); }

  RankingGame to_ranking() const;

  friend bool operator==(const ScoreSymmetricGame&,
                         const ScoreSymmetricGame&) = default;
};

/// One exact probability vector per player.
struct MixedProfile {
  std::vector<std::vector<Rat>> rows;

  static MixedProfile pure(const std::vector<std::size_t>& choice,
                           const std::vector<std::size_t>& sizes);

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
};

/// Checks that every row of `p` is a probability vector matching the
/// strategy counts in `sizes`.
bool profile_is_valid(const MixedProfile& p,
                      const std::vector<std::size_t>& sizes);

std::vector<std::size_t> strategy_counts(const RankingGame& g);

/// If all players share an identical score ladder, view the game as
/// score-symmetric.
std::optional<ScoreSymmetricGame> as_score_symmetric(const RankingGame& g);

/// True when no two strategies anywhere in the game share a score.
bool has_no_ties(const RankingGame& g);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string message;
};

/// Structural invariant check: strict cost/score monotonicity per player,
/// non-increasing prizes with u_1 > u_d, prize count equal to player count.
/// Violations are data, not failures.
std::vector<Violation> validate(const RankingGame& g);

/// Same checks but with cost rows only required to be non-decreasing, the
/// rule a shared-ladder game must satisfy (its weakly dominated copies keep
/// equal costs by construction).
std::vector<Violation> validate_score_symmetric(const RankingGame& g);

// ---------------------------------------------------------------------------
// Normalization

/// Affine transforms applied by normalize(), retained so payoffs and
/// profiles can be mapped back: original payoff = scale * normalized payoff
/// + prize_shift - cost_shift[i].
struct NormalizationRecord {
  Rat prize_shift;                 // u_d subtracted from every prize
  Rat scale;                       // u_1 - u_d divided out of prizes + costs
  std::vector<Rat> cost_shift;     // per player, c_1 subtracted (original units)
  std::vector<Rat> discarded_prizes;           // surplus prizes beyond rank d
  std::size_t padded_prizes = 0;               // zero prizes appended
  std::vector<std::vector<std::size_t>> removed_strategies;  // cost > 1

  /// Re-inserts zero-probability entries for strategies normalize() removed.
  MixedProfile lift_profile(const MixedProfile& normalized) const;
};

struct NormalizedGame {
  RankingGame game;
  NormalizationRecord record;
};

/// Rescales prizes to u_1 = 1, u_d = 0, shifts every player's cheapest
/// strategy to cost 0, fixes the prize count at d, and drops strategies
/// whose rescaled cost exceeds 1 (dominated by the free strategy).
/// Throws std::invalid_argument when u_1 = u_d.
NormalizedGame normalize(const RankingGame& g);

/// Removes dominated duplicates so strict monotonicity holds: among equal
/// costs the highest score survives, among equal scores the lowest cost,
/// and any strategy whose score does not exceed all cheaper ones is dropped.
/// Exact (cost, score) duplicates keep the lowest index.
RankingGame eliminate_degenerate(const RankingGame& g);

}  // namespace rankeq
