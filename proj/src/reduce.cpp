#include "rankeq/reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankeq {

std::pair<ScoreSymmetricGame, SymmetrizationMap> score_symmetrize(
    const RankingGame& g) {
  SymmetrizationMap map;
  for (const auto& player : g.players)
    for (const auto& s : player) map.ladder.push_back(s.score);
  std::sort(map.ladder.begin(), map.ladder.end());
  map.ladder.erase(std::unique(map.ladder.begin(), map.ladder.end()),
                   map.ladder.end());

  ScoreSymmetricGame out;
  out.scores = map.ladder;
  out.prizes = g.prizes;
  const std::size_t n = map.ladder.size();
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    const auto& strategies = g.players[i];
    std::vector<Rat> row(n);
    std::vector<RungOrigin> origins(n);
    // Rung index of each original strategy (scores are strictly increasing,
    // so each hits a unique rung).
    std::vector<std::size_t> own_rung(strategies.size());
    for (std::size_t j = 0; j < strategies.size(); ++j)
      own_rung[j] = static_cast<std::size_t>(
          std::lower_bound(map.ladder.begin(), map.ladder.end(),
                           strategies[j].score) -
          map.ladder.begin());
    for (std::size_t r = 0; r < n; ++r) {
      // The weakest own strategy at or above this rung's score.
      std::size_t j = 0;
      while (j < strategies.size() && strategies[j].score < map.ladder[r]) ++j;
      if (j < strategies.size() && strategies[j].score == map.ladder[r]) {
        row[r] = strategies[j].cost;
        origins[r] = {RungOrigin::Kind::kOriginal, j, 0};
      } else if (j < strategies.size()) {
        row[r] = strategies[j].cost;
        origins[r] = {RungOrigin::Kind::kCopied, 0, own_rung[j]};
      } else {
        row[r] = Rat(1);
        origins[r] = {RungOrigin::Kind::kCostOnePad, 0, own_rung[0]};
      }
    }
    out.costs.push_back(std::move(row));
    map.origins.push_back(std::move(origins));
  }
  return {std::move(out), std::move(map)};
}

MixedProfile lift_back(const MixedProfile& symmetrized,
                       const SymmetrizationMap& map) {
  if (symmetrized.rows.size() != map.origins.size())
    throw std::invalid_argument("lift_back: player count mismatch");
  MixedProfile out;
  out.rows.resize(symmetrized.rows.size());
  for (std::size_t i = 0; i < symmetrized.rows.size(); ++i) {
    const auto& origins = map.origins[i];
    const auto& row = symmetrized.rows[i];
    if (row.size() != origins.size())
      throw std::invalid_argument("lift_back: rung count mismatch");
    std::size_t originals = 0;
    for (const auto& o : origins)
      if (o.kind == RungOrigin::Kind::kOriginal) ++originals;
    std::vector<Rat> lifted(originals, Rat(0));
    for (std::size_t r = 0; r < row.size(); ++r) {
      if (row[r].is_zero()) continue;
      std::size_t rung = r;
      if (origins[r].kind != RungOrigin::Kind::kOriginal)
        rung = origins[r].dominating_rung;
      lifted[origins[rung].original_index] += row[r];
    }
    out.rows[i] = std::move(lifted);
  }
  return out;
}

Rat PolymatrixGame::pure_payoff(const std::vector<std::size_t>& choice,
                                std::size_t i) const {
  Rat total = nature[i][choice[i]];
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (k == i) continue;
    total += edge[i][k][choice[i]][choice[k]];
  }
  return total;
}

PolymatrixGame build_polymatrix(const RankingGame& g, const Rat& a,
                                const Rat& b) {
  if (!has_no_ties(g))
    throw std::invalid_argument("build_polymatrix: tied scores");
  const std::size_t d = g.num_players();
  PolymatrixGame p;
  p.a = a;
  p.b = b;
  p.sizes = strategy_counts(g);
  p.edge.assign(d, std::vector<std::vector<std::vector<Rat>>>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (k == i) continue;
      auto& table = p.edge[i][k];
      table.assign(p.sizes[i], std::vector<Rat>(p.sizes[k], Rat(0)));
      for (std::size_t j = 0; j < p.sizes[i]; ++j)
        for (std::size_t l = 0; l < p.sizes[k]; ++l)
          if (!(g.players[k][l].score < g.players[i][j].score))
            table[j][l] = -b;  // the lower-ranked side pays b
    }
    std::vector<Rat> nat(p.sizes[i]);
    for (std::size_t j = 0; j < p.sizes[i]; ++j)
      nat[j] = a - b - g.players[i][j].cost;
    p.nature.push_back(std::move(nat));
  }
  return p;
}

std::optional<std::pair<Rat, Rat>> fit_linear_prizes(
    const std::vector<Rat>& prizes) {
  if (prizes.size() < 2) return std::nullopt;
  const Rat b = prizes[0] - prizes[1];
  const Rat a = prizes[0] + b;
  if (b.is_negative()) return std::nullopt;
  for (std::size_t k = 0; k < prizes.size(); ++k)
    if (!(prizes[k] == a - Rat(static_cast<long long>(k + 1)) * b))
      return std::nullopt;
  return std::make_pair(a, b);
}

}  // namespace rankeq
