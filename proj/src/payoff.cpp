#include "rankeq/payoff.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace rankeq {

namespace {

// Prefix sums pre[k] = u_1 + ... + u_k, so a block of t+1 players starting
// below h stronger ones shares (pre[h+t+1] - pre[h]) / (t+1) each.
std::vector<Rat> prize_prefix(const std::vector<Rat>& prizes) {
  std::vector<Rat> pre(prizes.size() + 1, Rat(0));
  for (std::size_t k = 0; k < prizes.size(); ++k)
    pre[k + 1] = pre[k] + prizes[k];
  return pre;
}

Rat tie_share(const std::vector<Rat>& pre, std::size_t h, std::size_t t) {
  return (pre[h + t + 1] - pre[h]) / Rat(static_cast<long long>(t + 1));
}

}  // namespace

TieCountDistribution::TieCountDistribution(std::size_t max_opponents)
    : capacity_(max_opponents + 1), table_(capacity_ * capacity_, Rat(0)) {
  table_[0] = Rat(1);
}

const Rat& TieCountDistribution::at(std::size_t h, std::size_t t) const {
  return table_[h * capacity_ + t];
}

void TieCountDistribution::fold(const Rat& above, const Rat& tied,
                                const Rat& below) {
  std::vector<Rat> next(table_.size(), Rat(0));
  for (std::size_t h = 0; h <= folded_; ++h) {
    for (std::size_t t = 0; h + t <= folded_; ++t) {
      const Rat& mass = table_[h * capacity_ + t];
      if (mass.is_zero()) continue;
      if (!above.is_zero()) next[(h + 1) * capacity_ + t] += mass * above;
      if (!tied.is_zero()) next[h * capacity_ + t + 1] += mass * tied;
      if (!below.is_zero()) next[h * capacity_ + t] += mass * below;
    }
  }
  table_ = std::move(next);
  ++folded_;
}

std::vector<Rat> pure_payoffs(const RankingGame& g,
                              const std::vector<std::size_t>& choice) {
  const std::size_t d = g.num_players();
  if (choice.size() != d)
    throw std::invalid_argument("pure_payoffs: profile size mismatch");
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.players[b][choice[b]].score < g.players[a][choice[a]].score;
  });
  const auto pre = prize_prefix(g.prizes);
  std::vector<Rat> payoff(d, Rat(0));
  std::size_t pos = 0;
  while (pos < d) {
    std::size_t end = pos + 1;
    const Rat& score = g.players[order[pos]][choice[order[pos]]].score;
    while (end < d && g.players[order[end]][choice[order[end]]].score == score)
      ++end;
    const Rat share = tie_share(pre, pos, end - pos - 1);
    for (std::size_t k = pos; k < end; ++k) {
      const std::size_t p = order[k];
      payoff[p] = share - g.players[p][choice[p]].cost;
    }
    pos = end;
  }
  return payoff;
}

Rat expected_payoff_enum(const RankingGame& g, const MixedProfile& profile,
                         std::size_t i, std::size_t j) {
  const std::size_t d = g.num_players();
  const Rat& my_score = g.players[i][j].score;
  const auto pre = prize_prefix(g.prizes);

  std::vector<std::size_t> opponents;
  for (std::size_t k = 0; k < d; ++k)
    if (k != i) opponents.push_back(k);

  Rat total(0);
  std::vector<std::size_t> pick(opponents.size(), 0);
  while (true) {
    Rat weight(1);
    std::size_t above = 0, tied = 0;
    for (std::size_t k = 0; k < opponents.size(); ++k) {
      const std::size_t opp = opponents[k];
      const Rat& p = profile.rows[opp][pick[k]];
      if (p.is_zero()) {
        weight = Rat(0);
        break;
      }
      weight *= p;
      const Rat& s = g.players[opp][pick[k]].score;
      if (my_score < s)
        ++above;
      else if (s == my_score)
        ++tied;
    }
    if (!weight.is_zero()) total += weight * tie_share(pre, above, tied);

    // advance the odometer
    std::size_t k = 0;
    for (; k < opponents.size(); ++k) {
      if (++pick[k] < g.players[opponents[k]].size()) break;
      pick[k] = 0;
    }
    if (k == opponents.size()) break;
  }
  return total - g.players[i][j].cost;
}

Rat expected_prize_from_triples(
    const std::vector<Rat>& prizes,
    const std::vector<std::array<Rat, 3>>& opponent_triples) {
  TieCountDistribution dist(opponent_triples.size());
  for (const auto& t : opponent_triples) dist.fold(t[0], t[1], t[2]);
  const auto pre = prize_prefix(prizes);
  Rat total(0);
  const std::size_t m = opponent_triples.size();
  for (std::size_t h = 0; h <= m; ++h) {
    for (std::size_t t = 0; h + t <= m; ++t) {
      const Rat& mass = dist.at(h, t);
      if (mass.is_zero()) continue;
      total += mass * tie_share(pre, h, t);
    }
  }
  return total;
}

Rat expected_payoff_dp(const RankingGame& g, const MixedProfile& profile,
                       std::size_t i, std::size_t j) {
  const Rat& my_score = g.players[i][j].score;
  std::vector<std::array<Rat, 3>> triples;
  triples.reserve(g.num_players() - 1);
  for (std::size_t k = 0; k < g.num_players(); ++k) {
    if (k == i) continue;
    Rat above(0), tied(0), below(0);
    for (std::size_t l = 0; l < g.players[k].size(); ++l) {
      const Rat& p = profile.rows[k][l];
      if (p.is_zero()) continue;
      const Rat& s = g.players[k][l].score;
      if (my_score < s)
        above += p;
      else if (s == my_score)
        tied += p;
      else
        below += p;
    }
    triples.push_back({above, tied, below});
  }
  return expected_prize_from_triples(g.prizes, triples) - g.players[i][j].cost;
}

Rat expected_payoff_anonymous(const ScoreSymmetricGame& g,
                              const MixedProfile& profile, std::size_t i,
                              std::size_t j) {
  const std::size_t n = g.num_strategies();
  std::vector<std::array<Rat, 3>> triples;
  triples.reserve(g.num_players() - 1);
  for (std::size_t k = 0; k < g.num_players(); ++k) {
    if (k == i) continue;
    Rat above(0), below(0);
    for (std::size_t l = j + 1; l < n; ++l) above += profile.rows[k][l];
    for (std::size_t l = 0; l < j; ++l) below += profile.rows[k][l];
    triples.push_back({above, profile.rows[k][j], below});
  }
  return expected_prize_from_triples(g.prizes, triples) - g.costs[i][j];
}

namespace {

template <typename PayoffFn>
EquilibriumCertificate verify_impl(const RankingGame& g,
                                   const MixedProfile& profile,
                                   PayoffFn&& payoff_of) {
  const std::size_t d = g.num_players();
  if (profile.rows.size() != d)
    throw std::invalid_argument("verify: profile size mismatch");
  EquilibriumCertificate cert;
  cert.profile = profile;
  cert.epsilon = Rat(0);
  cert.welfare_cost = Rat(0);
  cert.welfare_score = Rat(0);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t n = g.players[i].size();
    if (profile.rows[i].size() != n)
      throw std::invalid_argument("verify: row size mismatch");
    std::vector<Rat> pay(n);
    for (std::size_t j = 0; j < n; ++j) pay[j] = payoff_of(i, j);
    const Rat best = *std::max_element(pay.begin(), pay.end());
    Rat regret(0);
    Rat expected(0);
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = profile.rows[i][j];
      if (x.is_zero()) continue;
      regret = std::max(regret, best - pay[j]);
      expected += x * pay[j];
      cert.welfare_cost += x * g.players[i][j].cost;
      cert.welfare_score += x * g.players[i][j].score;
    }
    cert.regrets.push_back(regret);
    cert.gaps.push_back(best - expected);
    cert.epsilon = std::max(cert.epsilon, regret);
  }
  return cert;
}

}  // namespace

EquilibriumCertificate verify(const RankingGame& g,
                              const MixedProfile& profile) {
  return verify_impl(g, profile, [&](std::size_t i, std::size_t j) {
    return expected_payoff_dp(g, profile, i, j);
  });
}

EquilibriumCertificate verify(const ScoreSymmetricGame& g,
                              const MixedProfile& profile) {
  const RankingGame ranking = g.to_ranking();
  return verify_impl(ranking, profile, [&](std::size_t i, std::size_t j) {
    return expected_payoff_anonymous(g, profile, i, j);
  });
}

}  // namespace rankeq
