#include "rankeq/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rankeq/linear.hpp"
#include "rankeq/payoff.hpp"
#include "rankeq/reduce.hpp"

namespace rankeq {

namespace {

std::vector<Rat> prize_prefix(const std::vector<Rat>& prizes) {
  std::vector<Rat> pre(prizes.size() + 1, Rat(0));
  for (std::size_t k = 0; k < prizes.size(); ++k)
    pre[k + 1] = pre[k] + prizes[k];
  return pre;
}

}  // namespace

PureTwoActionResult solve_pure_two_action(const ScoreSymmetricGame& g) {
  if (g.num_strategies() != 2)
    throw std::invalid_argument("solve_pure_two_action: needs two actions");
  const std::size_t d = g.num_players();
  if (g.prizes.size() != d)
    throw std::invalid_argument("solve_pure_two_action: prize count");

  ThresholdProfile threshold;
  threshold.order.resize(d);
  std::iota(threshold.order.begin(), threshold.order.end(), 0);
  std::stable_sort(threshold.order.begin(), threshold.order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return g.costs[x][1] < g.costs[y][1];
                   });

  const auto pre = prize_prefix(g.prizes);
  // With cutoff i, the high group shares u_1..u_i and the low group shares
  // u_{i+1}..u_d. Player i+1 strictly gains by joining the high group iff
  // its new share beats its current one by more than the cost difference.
  std::size_t cutoff = 0;
  while (cutoff < d) {
    const std::size_t p = threshold.order[cutoff];
    const Rat low_share = (pre[d] - pre[cutoff]) /
                          Rat(static_cast<long long>(d - cutoff));
    const Rat stay = low_share - g.costs[p][0];
    const Rat high_share =
        pre[cutoff + 1] / Rat(static_cast<long long>(cutoff + 1));
    const Rat join = high_share - g.costs[p][1];
    if (!(join > stay)) break;
    ++cutoff;
  }

  // Once a player joins, no cheaper player wants to leave; the most tempted
  // leaver is the costliest joiner.
  if (cutoff > 0) {
    const std::size_t p = threshold.order[cutoff - 1];
    const Rat stay_high =
        pre[cutoff] / Rat(static_cast<long long>(cutoff)) - g.costs[p][1];
    const Rat leave = (pre[d] - pre[cutoff - 1]) /
                          Rat(static_cast<long long>(d - cutoff + 1)) -
                      g.costs[p][0];
    if (leave > stay_high)
      throw std::logic_error("solve_pure_two_action: threshold scan unstable");
  }

  threshold.cutoff = cutoff;
  MixedProfile profile;
  profile.rows.assign(d, {Rat(1), Rat(0)});
  for (std::size_t k = 0; k < cutoff; ++k)
    profile.rows[threshold.order[k]] = {Rat(0), Rat(1)};
  return {std::move(profile), std::move(threshold)};
}

namespace {

// Strategies of one player surviving dominance elimination, by original
// index, ascending strength.
using Kept = std::vector<std::size_t>;

// Drops strategies that win against exactly the same set of live opponent
// strategies as their predecessor, iterating to a fixed point.
std::array<Kept, 2> eliminate_same_winners(const RankingGame& g) {
  std::array<Kept, 2> kept;
  for (int i = 0; i < 2; ++i) {
    kept[i].resize(g.players[i].size());
    std::iota(kept[i].begin(), kept[i].end(), 0);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < 2; ++i) {
      const int o = 1 - i;
      auto beats = [&](std::size_t idx) {
        std::size_t count = 0;
        for (std::size_t k : kept[o])
          if (g.players[o][k].score < g.players[i][idx].score) ++count;
        return count;
      };
      Kept next;
      for (std::size_t idx : kept[i]) {
        if (!next.empty() && beats(next.back()) == beats(idx)) {
          changed = true;  // same winners, strictly more expensive
          continue;
        }
        next.push_back(idx);
      }
      kept[i] = std::move(next);
    }
  }
  return kept;
}

struct SupportRange {
  std::size_t begin;  // within the kept list
  std::size_t end;    // exclusive
  std::size_t size() const { return end - begin; }
};

// Solves one player's indifference system: opponent probabilities x and the
// player's equilibrium value v, from |own| equations plus normalization.
// Underdetermined systems fall back to a feasibility program so a
// non-negative witness is found whenever one exists.
std::optional<std::vector<Rat>> indifference_solve(
    const std::vector<std::vector<Rat>>& payoff, const SupportRange& own,
    const SupportRange& opp) {
  LinearSystem sys;
  const std::size_t unknowns = opp.size() + 1;  // x entries then v
  for (std::size_t j = own.begin; j < own.end; ++j) {
    std::vector<Rat> row(unknowns, Rat(0));
    for (std::size_t k = opp.begin; k < opp.end; ++k)
      row[k - opp.begin] = payoff[j][k];
    row[unknowns - 1] = Rat(-1);
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(Rat(0));
  }
  std::vector<Rat> norm(unknowns, Rat(1));
  norm[unknowns - 1] = Rat(0);
  sys.coeffs.push_back(std::move(norm));
  sys.rhs.push_back(Rat(1));
  const auto solution = solve_system(sys);
  if (solution.kind == SystemKind::kInconsistent) return std::nullopt;
  if (solution.kind == SystemKind::kUnique) return solution.x;

  LinearProgram lp;
  lp.sense = Sense::kMin;
  lp.objective.assign(unknowns, Rat(0));
  lp.free_vars.assign(unknowns, false);
  lp.free_vars[unknowns - 1] = true;
  lp.rows = sys.coeffs;
  lp.relations.assign(sys.coeffs.size(), Relation::kEq);
  lp.rhs = sys.rhs;
  const auto feasible = solve_lp(lp);
  if (feasible.status != LpStatus::kOptimal) return std::nullopt;
  return feasible.x;
}

}  // namespace

MixedProfile solve_two_player_no_ties(const RankingGame& g) {
  if (g.num_players() != 2)
    throw std::invalid_argument("solve_two_player_no_ties: needs 2 players");
  if (!has_no_ties(g))
    throw std::invalid_argument("solve_two_player_no_ties: scores tie");
  if (g.prizes.size() != 2 || !(g.prizes[0] == Rat(1)) ||
      !g.prizes[1].is_zero())
    throw std::invalid_argument("solve_two_player_no_ties: normalize first");

  const auto kept = eliminate_same_winners(g);

  // Payoff tables on the reduced game.
  std::array<std::vector<std::vector<Rat>>, 2> pay;
  for (int i = 0; i < 2; ++i) {
    const int o = 1 - i;
    pay[i].assign(kept[i].size(), std::vector<Rat>(kept[o].size()));
    for (std::size_t j = 0; j < kept[i].size(); ++j)
      for (std::size_t k = 0; k < kept[o].size(); ++k) {
        const auto& mine = g.players[i][kept[i][j]];
        const auto& theirs = g.players[o][kept[o][k]];
        pay[i][j][k] = (theirs.score < mine.score ? Rat(1) : Rat(0)) - mine.cost;
      }
  }

  // Candidate supports: prefixes, or prefixes of everything but the weakest.
  auto ranges_of = [&](int i) {
    std::vector<SupportRange> out;
    for (std::size_t start = 0; start <= 1 && start < kept[i].size(); ++start)
      for (std::size_t end = start + 1; end <= kept[i].size(); ++end)
        out.push_back({start, end});
    return out;
  };
  const auto r0 = ranges_of(0);
  const auto r1 = ranges_of(1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < r0.size(); ++x)
    for (std::size_t y = 0; y < r1.size(); ++y) pairs.emplace_back(x, y);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    const std::size_t sa = r0[a.first].size() + r1[a.second].size();
    const std::size_t sb = r0[b.first].size() + r1[b.second].size();
    if (sa != sb) return sa < sb;
    const auto ka = std::array{r0[a.first].begin, r0[a.first].end,
                               r1[a.second].begin, r1[a.second].end};
    const auto kb = std::array{r0[b.first].begin, r0[b.first].end,
                               r1[b.second].begin, r1[b.second].end};
    return ka < kb;
  });

  const auto sizes = strategy_counts(g);
  for (const auto& [x, y] : pairs) {
    const SupportRange s0 = r0[x];
    const SupportRange s1 = r1[y];
    const auto opp_probs = indifference_solve(pay[0], s0, s1);
    const auto my_probs = indifference_solve(pay[1], s1, s0);
    if (!opp_probs || !my_probs) continue;
    MixedProfile profile;
    profile.rows.assign(2, {});
    profile.rows[0].assign(sizes[0], Rat(0));
    profile.rows[1].assign(sizes[1], Rat(0));
    bool negative = false;
    for (std::size_t k = 0; k < s0.size(); ++k) {
      const Rat& p = (*my_probs)[k];
      if (p.is_negative()) negative = true;
      profile.rows[0][kept[0][s0.begin + k]] = p;
    }
    for (std::size_t k = 0; k < s1.size(); ++k) {
      const Rat& p = (*opp_probs)[k];
      if (p.is_negative()) negative = true;
      profile.rows[1][kept[1][s1.begin + k]] = p;
    }
    if (negative) continue;
    if (verify(g, profile).epsilon.is_zero()) return profile;
  }
  throw std::logic_error("solve_two_player_no_ties: no equilibrium found");
}

CascadeResult cascade_solve(const RankingGame& g, const SupportSpec& support) {
  const std::size_t d = g.num_players();
  if (support.supports.size() != d)
    throw std::invalid_argument("cascade_solve: support count mismatch");
  if (!has_no_ties(g))
    throw std::invalid_argument("cascade_solve: scores tie");
  if (g.prizes.empty() || !(g.prizes[0] == Rat(1)))
    throw std::invalid_argument("cascade_solve: normalize first");
  for (std::size_t k = 1; k < g.prizes.size(); ++k)
    if (!g.prizes[k].is_zero())
      throw std::invalid_argument("cascade_solve: single prize required");

  struct Action {
    std::size_t player;
    std::size_t index;
  };
  std::vector<Action> actions;
  for (std::size_t i = 0; i < d; ++i) {
    if (support.supports[i].empty())
      throw std::invalid_argument("cascade_solve: empty support");
    for (std::size_t j : support.supports[i]) {
      if (j >= g.players[i].size())
        throw std::invalid_argument("cascade_solve: support index range");
      if (!(g.players[i][j].cost < Rat(1)))
        throw std::invalid_argument("cascade_solve: in-support cost >= 1");
      actions.push_back({i, j});
    }
  }
  std::sort(actions.begin(), actions.end(), [&](const Action& a, const Action& b) {
    return g.players[b.player][b.index].score < g.players[a.player][a.index].score;
  });

  for (std::size_t r = 0; r + 1 < actions.size(); ++r)
    if (actions[r].player == actions[r + 1].player)
      return {false, {}, "consecutive in-support actions of one player; the "
                         "stronger is dominated"};

  // Expected payoff per player: 1 - c for the owner of the strongest
  // in-support action, zero for everyone else.
  std::vector<Rat> target(d, Rat(0));
  target[actions[0].player] =
      Rat(1) - g.players[actions[0].player][actions[0].index].cost;

  // resolved[k]: sum of already-fixed probabilities of player k, which by
  // construction all sit strictly above the action currently processed.
  std::vector<Rat> resolved_mass(d, Rat(0));
  std::vector<std::vector<Rat>> probs(d);
  for (std::size_t i = 0; i < d; ++i)
    probs[i].assign(g.players[i].size(), Rat(0));

  for (std::size_t r = 1; r < actions.size(); ++r) {
    const Action& cur = actions[r];
    const Action& prev = actions[r - 1];
    const Rat& cost = g.players[cur.player][cur.index].cost;
    Rat rest(1);
    for (std::size_t k = 0; k < d; ++k) {
      if (k == cur.player || k == prev.player) continue;
      rest *= Rat(1) - resolved_mass[k];
    }
    if (rest.is_zero())
      return {false, {}, "an opponent already plays above this action with "
                         "probability one"};
    // -cost + (1 - resolved_prev - y) * rest = target  =>  solve for y.
    const Rat y =
        Rat(1) - resolved_mass[prev.player] - (target[cur.player] + cost) / rest;
    if (y.is_negative() || y > Rat(1))
      return {false, {}, "probability outside [0,1]"};
    probs[prev.player][prev.index] = y;
    resolved_mass[prev.player] += y;
  }

  // Close each row: the globally weakest in-support action takes the slack;
  // every other player must already sum to one exactly.
  const Action& last = actions.back();
  for (std::size_t i = 0; i < d; ++i) {
    if (i == last.player) {
      const Rat slack = Rat(1) - resolved_mass[i];
      if (slack.is_negative()) return {false, {}, "row sum exceeds one"};
      probs[i][last.index] = slack;
    } else if (!(resolved_mass[i] == Rat(1))) {
      return {false, {}, "row does not close to one"};
    }
  }
  MixedProfile profile;
  profile.rows = std::move(probs);
  return {true, std::move(profile), ""};
}

MixedProfile solve_linear_prize(const RankingGame& g) {
  const auto ab = fit_linear_prizes(g.prizes);
  if (!ab)
    throw std::invalid_argument("solve_linear_prize: prizes not affine in rank");
  const auto poly = build_polymatrix(g, ab->first, ab->second);
  const std::size_t d = g.num_players();
  const auto sizes = poly.sizes;

  // Variables: all strategy probabilities, then one payoff bound per player.
  std::vector<std::size_t> offset(d, 0);
  std::size_t vars = 0;
  for (std::size_t i = 0; i < d; ++i) {
    offset[i] = vars;
    vars += sizes[i];
  }
  const std::size_t bound_base = vars;
  vars += d;

  LinearProgram lp;
  lp.sense = Sense::kMin;
  lp.objective.assign(vars, Rat(0));
  lp.free_vars.assign(vars, false);
  for (std::size_t i = 0; i < d; ++i) {
    lp.objective[bound_base + i] = Rat(1);
    lp.free_vars[bound_base + i] = true;
  }
  // Every pure strategy's edge-sum payoff stays below the owner's bound.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < sizes[i]; ++j) {
      std::vector<Rat> row(vars, Rat(0));
      for (std::size_t k = 0; k < d; ++k) {
        if (k == i) continue;
        for (std::size_t l = 0; l < sizes[k]; ++l)
          row[offset[k] + l] = poly.edge[i][k][j][l];
      }
      row[bound_base + i] = Rat(-1);
      lp.rows.push_back(std::move(row));
      lp.relations.push_back(Relation::kLe);
      lp.rhs.push_back(-poly.nature[i][j]);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rat> row(vars, Rat(0));
    for (std::size_t j = 0; j < sizes[i]; ++j) row[offset[i] + j] = Rat(1);
    lp.rows.push_back(std::move(row));
    lp.relations.push_back(Relation::kEq);
    lp.rhs.push_back(Rat(1));
  }

  const auto solution = solve_lp(lp);
  if (solution.status != LpStatus::kOptimal)
    throw std::logic_error("solve_linear_prize: LP not optimal");
  MixedProfile profile;
  profile.rows.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    profile.rows[i].assign(sizes[i], Rat(0));
    for (std::size_t j = 0; j < sizes[i]; ++j)
      profile.rows[i][j] = solution.x[offset[i] + j];
  }
  return profile;
}

}  // namespace rankeq
