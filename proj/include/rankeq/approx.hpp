// Approximation schemes for shared-ladder games: grid rounding of
// probability vectors, the type-class search for many players with few
// strategies, and the block dynamic program for few players with many
// strategies.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rankeq/game.hpp"
#include "rankeq/rat.hpp"

namespace rankeq {

/// Prefix-sum-preserving quantization: every entry becomes a non-negative
/// multiple of eps (which must be the inverse of an integer), every prefix
/// error stays strictly below eps, and the output still sums to one.
/// Entries already on the grid are kept; otherwise the entry is rounded up
/// while the rounded prefix trails the true prefix and down once it leads.
std::vector<Rat> epsilon_round(const std::vector<Rat>& x, const Rat& eps);

/// Largest inverse-of-an-integer not exceeding eps. Throws on eps <= 0.
Rat floor_to_inverse_integer(const Rat& eps);

struct PtasResult {
  MixedProfile profile;
  Rat epsilon_used;                  // after inverse-integer rounding
  Rat delta;                         // strategy grid spacing eps/n
  std::size_t candidates_checked = 0;
  std::size_t type_count = 0;
};

/// Brute-force search over type-count compositions assigning players to the
/// delta-grid of mixed strategies. Costs are rounded down to multiples of
/// eps to form types; a candidate is accepted when it verifies at eps on the
/// rounded game, which makes it a 2*eps-well-supported equilibrium of the
/// original game. Exponential in the strategy count, polynomial in players.
PtasResult ptas_solve(const ScoreSymmetricGame& g, const Rat& eps);

/// Number of candidate profiles ptas_solve's search space holds for this
/// game and accuracy: the product over types of C(d_t + s - 1, s - 1).
Int ptas_candidate_count(const ScoreSymmetricGame& g, const Rat& eps);

struct FptasOptions {
  std::optional<Rat> delta_override;
  // Test knob: skip the int64 fast path and run exact rational arithmetic.
  bool force_exact_scalar = false;
  // Test knob: disable the coarse-to-fine schedule (search the full grid).
  bool single_level = false;
};

struct FptasResult {
  MixedProfile profile;
  Rat epsilon_used;   // filter threshold after inverse-integer rounding
  Rat delta;          // probability grid spacing actually in force
  std::size_t levels_tried = 0;           // schedule steps until success
  std::vector<std::size_t> states_per_block;  // of the successful pass
};

/// Raised when the dynamic program exhausts every grid path, which the
/// correctness argument rules out at the default delta.
struct FptasExhausted : std::logic_error {
  using std::logic_error::logic_error;
};

/// Forward-filtering block dynamic program over per-player prefix masses.
/// States carry (sigma, alpha) per player; a transition into block j+1 keeps
/// a grid assignment of x only when, for every player, a payoff exceeding
/// alpha by more than eps forces sigma = 0 and a payoff below alpha - eps
/// forces x = 0. Any surviving full path is an (n+2)*eps-well-supported
/// equilibrium of the original game. delta defaults to eps/(4 d^2 3^d);
/// delta_override trades the a-priori bound for a verifier-certified one.
/// The grid is searched coarse-to-fine through nested subgrids, which leaves
/// the output contract unchanged and the search deterministic.
FptasResult fptas_solve(const ScoreSymmetricGame& g, const Rat& eps,
                        const FptasOptions& options = {});

}  // namespace rankeq
