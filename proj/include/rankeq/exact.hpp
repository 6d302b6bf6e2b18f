// Exact equilibrium solvers for the tractable subclasses: pure equilibria
// of 2-action shared-ladder games, 2-player games without ties, known-support
// cascade solving, and linear-prize games via the polymatrix LP.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rankeq/game.hpp"

namespace rankeq {

/// Strategy indices allowed positive probability, one set per player.
struct SupportSpec {
  std::vector<std::vector<std::size_t>> supports;
};

/// Cutoff profile: after sorting players by their a_2 cost, the first
/// `cutoff` players play a_2 and the rest play a_1.
struct ThresholdProfile {
  std::size_t cutoff = 0;
  std::vector<std::size_t> order;  // players sorted by ascending a_2 cost
};

struct PureTwoActionResult {
  MixedProfile profile;
  ThresholdProfile threshold;
};

/// Pure equilibrium of a normalized 2-action shared-ladder game, any number
/// of players and prizes. Scans cutoffs upward, stopping at the first player
/// with no strict incentive to join the high-effort group. O(d log d).
PureTwoActionResult solve_pure_two_action(const ScoreSymmetricGame& g);

/// Exact equilibrium of a normalized 2-player game with all scores distinct.
/// Dominated strategies (winning against the same opponent set as their
/// predecessor) are dropped, candidate prefix supports are enumerated in
/// ascending size, and each support's indifference system is solved exactly.
/// Throws std::invalid_argument on ties.
MixedProfile solve_two_player_no_ties(const RankingGame& g);

struct CascadeResult {
  bool accepted = false;
  MixedProfile profile;   // meaningful only when accepted
  std::string rejection;  // why the support cannot carry an equilibrium
};

/// Given a trusted support of a normalized single-prize game without ties,
/// computes the unique candidate equilibrium by resolving probabilities in
/// descending order of strength. Rejection means the support was not an
/// equilibrium support; the caller certifies accepted profiles.
CascadeResult cascade_solve(const RankingGame& g, const SupportSpec& support);

/// Exact equilibrium of a normalized game without ties whose prizes are
/// affine in rank (u_k = a - k*b). Solves the constant-sum polymatrix
/// decomposition by linear programming. Throws std::invalid_argument when
/// the prizes are not affine or scores tie.
MixedProfile solve_linear_prize(const RankingGame& g);

}  // namespace rankeq
