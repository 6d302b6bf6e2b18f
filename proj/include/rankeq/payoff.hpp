// Payoff evaluation and epsilon-well-supported equilibrium verification.
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "rankeq/game.hpp"
#include "rankeq/rat.hpp"

namespace rankeq {

/// Joint distribution of (opponents strictly above, opponents tied), the
/// aggregation that makes expected prizes computable in polynomial time.
/// Entries are exact probabilities over pairs with h + t <= d - 1.
class TieCountDistribution {
 public:
  explicit TieCountDistribution(std::size_t max_opponents);

  /// Folds in one opponent given their probabilities of scoring above,
  /// tying with, and scoring below the reference strategy.
  void fold(const Rat& above, const Rat& tied, const Rat& below);

  const Rat& at(std::size_t h, std::size_t t) const;
  std::size_t folded() const { return folded_; }

 private:
  std::size_t capacity_;
  std::size_t folded_ = 0;
  std::vector<Rat> table_;  // (h, t) flattened
};

/// Payoff of every player under a pure profile. Players tied on score split
/// the prizes their rank block spans; each then pays their strategy cost.
std::vector<Rat> pure_payoffs(const RankingGame& g,
                              const std::vector<std::size_t>& choice);

/// Expected payoff of player `i` playing strategy `j` against the mixed
/// opponents, by full enumeration of opponent pure profiles. Exponential in
/// the player count; meant as an oracle for small games (d <= 6).
Rat expected_payoff_enum(const RankingGame& g, const MixedProfile& profile,
                         std::size_t i, std::size_t j);

/// Same value via the tie-count dynamic program: polynomial in the player
/// count. Works for any ranking game; only score comparisons are used.
Rat expected_payoff_dp(const RankingGame& g, const MixedProfile& profile,
                       std::size_t i, std::size_t j);

/// Shared-ladder entry point for the tie-count dynamic program.
Rat expected_payoff_anonymous(const ScoreSymmetricGame& g,
                              const MixedProfile& profile, std::size_t i,
                              std::size_t j);

/// Expected prize for a player given each opponent's (above, tied, below)
/// probability triple relative to the player's score. Building block shared
/// by the payoff paths above and by the approximation schemes.
Rat expected_prize_from_triples(
    const std::vector<Rat>& prizes,
    const std::vector<std::array<Rat, 3>>& opponent_triples);

/// Verification result: exact per-player regrets over supported strategies,
/// the certified epsilon (their maximum), the weaker best-response gaps, and
/// welfare aggregates.
struct EquilibriumCertificate {
  MixedProfile profile;
  std::vector<Rat> regrets;       // per player, well-supported notion
  Rat epsilon;                    // max over players, floored at 0
  std::vector<Rat> gaps;          // best response minus expected payoff
  Rat welfare_cost;               // expected total effort
  Rat welfare_score;              // expected total score
};

/// Certifies how far `profile` is from equilibrium: for each player, the
/// worst shortfall of a supported strategy against the best pure response.
/// epsilon = 0 certifies an exact Nash equilibrium.
EquilibriumCertificate verify(const RankingGame& g,
                              const MixedProfile& profile);
EquilibriumCertificate verify(const ScoreSymmetricGame& g,
                              const MixedProfile& profile);

}  // namespace rankeq
