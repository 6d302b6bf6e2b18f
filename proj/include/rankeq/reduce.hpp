// Reductions: score-symmetrization of general games with equilibrium
// lift-back, and the linear-prize to polymatrix construction.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rankeq/game.hpp"

namespace rankeq {

/// Where each rung of a player's symmetrized cost row came from.
struct RungOrigin {
  enum class Kind {
    kOriginal,   // the player's own strategy at this score
    kCopied,     // weakly dominated copy of a stronger strategy, equal cost
    kCostOnePad  // no stronger strategy existed; cost-1 filler
  };
  Kind kind = Kind::kOriginal;
  std::size_t original_index = 0;   // kOriginal: index in the original game
  std::size_t dominating_rung = 0;  // kCopied/kCostOnePad: rung mass moves to
};

struct SymmetrizationMap {
  std::vector<Rat> ladder;  // the shared score ladder
  std::vector<std::vector<RungOrigin>> origins;  // per player, per rung
};

/// Extends every player to the union ladder of all scores. A missing score
/// gets the cost of the player's weakest stronger strategy (a weakly
/// dominated copy) or cost 1 when no stronger strategy exists. Payoffs of
/// pure profiles are unchanged under the index mapping.
std::pair<ScoreSymmetricGame, SymmetrizationMap> score_symmetrize(
    const RankingGame& g);

/// Moves the probability mass of every added rung onto its dominating
/// strategy, producing a profile on the original game.
MixedProfile lift_back(const MixedProfile& symmetrized,
                       const SymmetrizationMap& map);

/// Pairwise constant-sum decomposition of a linear-prize ranking game.
/// Every player-player edge pays (0, -b) against the lower-scoring side;
/// the single-strategy nature vertex pays player i exactly a - b - c^i_j.
struct PolymatrixGame {
  Rat a, b;
  std::vector<std::size_t> sizes;
  // edge[i][i2][j][j2]: payoff to player i on edge {i, i2} (i != i2).
  std::vector<std::vector<std::vector<std::vector<Rat>>>> edge;
  std::vector<std::vector<Rat>> nature;  // nature[i][j] = a - b - c^i_j

  /// Sum of player i's edge payoffs under a pure profile.
  Rat pure_payoff(const std::vector<std::size_t>& choice, std::size_t i) const;
};

/// Requires distinct scores. Throws std::invalid_argument on ties.
PolymatrixGame build_polymatrix(const RankingGame& g, const Rat& a,
                                const Rat& b);

/// Recovers (a, b) with prizes u_k = a - k b, b >= 0, or nullopt when the
/// prize vector is not affine in rank.
std::optional<std::pair<Rat, Rat>> fit_linear_prizes(
    const std::vector<Rat>& prizes);

}  // namespace rankeq
