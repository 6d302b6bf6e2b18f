// Independent brute-force references: exhaustive-support solving for two
// players, the symmetric binary-action indifference point, and grid search.
// Shipped in the library so runs are reproducible from the CLI.
#pragma once

#include <cstddef>
#include <vector>

#include "rankeq/game.hpp"
#include "rankeq/payoff.hpp"

namespace rankeq {

/// Every exact equilibrium of a 2-player game (ties allowed), found by
/// enumerating all support pairs and solving each indifference system.
/// Deduplicated and returned in a deterministic order. Exponential in the
/// strategy count.
std::vector<MixedProfile> brute_force_two_player(const RankingGame& g);

struct SymmetricMixedResult {
  Rat p_star;       // probability of the costly action
  Rat gap;          // remaining indifference gap at p_star
  bool degenerate;  // the gap vanishes identically; every p is indifferent
};

/// Symmetric d-player game, two actions with costs (0, c), single prize:
/// bisects for the probability p* making one player indifferent while all
/// others play the costly action with probability p*. The gap is monotone
/// decreasing in p; arithmetic stays exact, only the stopping rule uses the
/// tolerance. Requires c strictly between 1/d and 1.
SymmetricMixedResult symmetric_binary_mixed(std::size_t d, const Rat& c,
                                            const Rat& tolerance = Rat(1, 1000000000));

struct GridSearchResult {
  MixedProfile profile;
  Rat epsilon;
  std::size_t profiles_scanned = 0;
};

/// Exhaustively certifies every profile on the delta-grid and returns the
/// first one reaching the target epsilon, or the minimum-epsilon profile
/// (first in enumeration order on ties). Desk-scale oracle only.
GridSearchResult grid_search_ne(const RankingGame& g, const Rat& delta,
                                const Rat& target_eps = Rat(0));

}  // namespace rankeq
