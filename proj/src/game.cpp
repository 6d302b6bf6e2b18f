#include "rankeq/game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rankeq {

RankingGame ScoreSymmetricGame::to_ranking() const {
  RankingGame g;
  g.prizes = prizes;
  g.players.reserve(costs.size());
  for (const auto& row : costs) {
    std::vector<StrategySpec> strategies;
    strategies.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
      strategies.push_back({row[j], scores[j]});
    g.players.push_back(std::move(strategies));
  }
  return g;
}

MixedProfile MixedProfile::pure(const std::vector<std::size_t>& choice,
                                const std::vector<std::size_t>& sizes) {
  MixedProfile p;
  p.rows.resize(choice.size());
  for (std::size_t i = 0; i < choice.size(); ++i) {
    p.rows[i].assign(sizes[i], Rat(0));
    p.rows[i].at(choice[i]) = Rat(1);
  }
  return p;
}

bool profile_is_valid(const MixedProfile& p,
                      const std::vector<std::size_t>& sizes) {
  if (p.rows.size() != sizes.size()) return false;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (p.rows[i].size() != sizes[i]) return false;
    Rat sum(0);
    for (const Rat& x : p.rows[i]) {
      if (x.is_negative()) return false;
      sum += x;
    }
    if (!(sum == Rat(1))) return false;
  }
  return true;
}

std::vector<std::size_t> strategy_counts(const RankingGame& g) {
  std::vector<std::size_t> sizes;
  sizes.reserve(g.players.size());
  for (const auto& p : g.players) sizes.push_back(p.size());
  return sizes;
}

std::optional<ScoreSymmetricGame> as_score_symmetric(const RankingGame& g) {
  if (g.players.empty()) return std::nullopt;
  const std::size_t n = g.players[0].size();
  for (const auto& p : g.players)
    if (p.size() != n) return std::nullopt;
  ScoreSymmetricGame s;
  s.prizes = g.prizes;
  s.scores.reserve(n);
  for (std::size_t j = 0; j < n; ++j) s.scores.push_back(g.players[0][j].score);
  for (const auto& p : g.players) {
    std::vector<Rat> row;
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(p[j].score == s.scores[j])) return std::nullopt;
      row.push_back(p[j].cost);
    }
    s.costs.push_back(std::move(row));
  }
  return s;
}

bool has_no_ties(const RankingGame& g) {
  std::vector<Rat> all;
  for (const auto& p : g.players)
    for (const auto& s : p) all.push_back(s.score);
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

namespace {

std::vector<Violation> validate_impl(const RankingGame& g, bool strict_costs) {
  std::vector<Violation> out;
  const std::size_t d = g.num_players();
  if (d == 0) out.push_back({"game has no players"});
  for (std::size_t i = 0; i < d; ++i) {
    const auto& strategies = g.players[i];
    if (strategies.empty()) {
      out.push_back({"player " + std::to_string(i) + " has no strategies"});
      continue;
    }
    for (std::size_t j = 0; j + 1 < strategies.size(); ++j) {
      const bool cost_ok = strict_costs
                               ? strategies[j].cost < strategies[j + 1].cost
                               : strategies[j].cost <= strategies[j + 1].cost;
      if (!cost_ok)
        out.push_back({"player " + std::to_string(i) +
                       ": strict cost monotonicity violated at strategy " +
                       std::to_string(j + 1)});
      if (!(strategies[j].score < strategies[j + 1].score))
        out.push_back({"player " + std::to_string(i) +
                       ": strict score monotonicity violated at strategy " +
                       std::to_string(j + 1)});
    }
  }
  if (g.prizes.empty()) {
    out.push_back({"prize vector is empty"});
    return out;
  }
  if (g.prizes.size() != d)
    out.push_back({"prize count " + std::to_string(g.prizes.size()) +
                   " does not match player count " + std::to_string(d)});
  for (std::size_t k = 0; k + 1 < g.prizes.size(); ++k)
    if (g.prizes[k] < g.prizes[k + 1])
      out.push_back({"prizes must be non-increasing (rank " +
                     std::to_string(k + 1) + ")"});
  if (g.prizes.size() >= 2 && !(g.prizes.front() > g.prizes.back()))
    out.push_back({"u_1 > u_d required"});
  return out;
}

}  // namespace

std::vector<Violation> validate(const RankingGame& g) {
  return validate_impl(g, /*strict_costs=*/true);
}

std::vector<Violation> validate_score_symmetric(const RankingGame& g) {
  auto out = validate_impl(g, /*strict_costs=*/false);
  if (!as_score_symmetric(g))
    out.push_back({"players do not share a score ladder"});
  return out;
}

MixedProfile NormalizationRecord::lift_profile(
    const MixedProfile& normalized) const {
  MixedProfile out;
  out.rows.resize(normalized.rows.size());
  for (std::size_t i = 0; i < normalized.rows.size(); ++i) {
    const auto& removed = removed_strategies[i];
    const std::size_t full = normalized.rows[i].size() + removed.size();
    std::vector<Rat> row(full, Rat(0));
    std::size_t src = 0;
    for (std::size_t j = 0; j < full; ++j) {
      if (std::find(removed.begin(), removed.end(), j) != removed.end())
        continue;
      row[j] = normalized.rows[i][src++];
    }
    out.rows[i] = std::move(row);
  }
  return out;
}

NormalizedGame normalize(const RankingGame& g) {
  NormalizedGame result;
  RankingGame& game = result.game;
  NormalizationRecord& rec = result.record;
  const std::size_t d = g.num_players();

  // Fix the prize count at d: surplus prizes can never be awarded, missing
  // ones are worth nothing.
  std::vector<Rat> prizes(g.prizes.begin(),
                          g.prizes.begin() +
                              std::min<std::size_t>(d, g.prizes.size()));
  for (std::size_t k = d; k < g.prizes.size(); ++k)
    rec.discarded_prizes.push_back(g.prizes[k]);
  while (prizes.size() < d) {
    prizes.push_back(Rat(0));
    ++rec.padded_prizes;
  }

  if (d >= 2 && prizes.front() == prizes.back())
    throw std::invalid_argument("normalize: u_1 = u_d, scaling undefined");

  rec.prize_shift = prizes.back();
  rec.scale = prizes.front() - prizes.back();
  for (Rat& u : prizes) u = (u - rec.prize_shift) / rec.scale;
  game.prizes = std::move(prizes);

  rec.cost_shift.reserve(d);
  rec.removed_strategies.resize(d);
  game.players.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& strategies = g.players[i];
    rec.cost_shift.push_back(strategies.front().cost);
    const Rat base = strategies.front().cost / rec.scale;
    for (std::size_t j = 0; j < strategies.size(); ++j) {
      const Rat cost = strategies[j].cost / rec.scale - base;
      if (cost > Rat(1)) {
        rec.removed_strategies[i].push_back(j);
        continue;
      }
      game.players[i].push_back({cost, strategies[j].score});
    }
  }
  return result;
}

RankingGame eliminate_degenerate(const RankingGame& g) {
  RankingGame out;
  out.prizes = g.prizes;
  out.players.resize(g.players.size());
  for (std::size_t i = 0; i < g.players.size(); ++i) {
    const auto& strategies = g.players[i];
    // Order by cost ascending; among equal costs the strongest first, among
    // exact duplicates the lowest index first.
    std::vector<std::size_t> order(strategies.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       if (!(strategies[a].cost == strategies[b].cost))
                         return strategies[a].cost < strategies[b].cost;
                       if (!(strategies[a].score == strategies[b].score))
                         return strategies[b].score < strategies[a].score;
                       return a < b;
                     });
    // Keep a strategy only if it strictly out-scores everything cheaper.
    std::vector<StrategySpec> kept;
    for (std::size_t idx : order) {
      if (kept.empty() || kept.back().score < strategies[idx].score)
        kept.push_back(strategies[idx]);
    }
    out.players[i] = std::move(kept);
  }
  return out;
}

}  // namespace rankeq
