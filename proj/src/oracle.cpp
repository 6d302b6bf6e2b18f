#include "rankeq/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "rankeq/linear.hpp"

namespace rankeq {

namespace {

// Opponent probabilities (plus the player's value) making the player
// indifferent across `own`, normalized to sum one. When the system is
// underdetermined, falls back to a feasibility program so a non-negative
// point is found whenever one exists. Nullopt if inconsistent.
std::optional<std::vector<Rat>> indifference_witness(
    const std::vector<std::vector<Rat>>& payoff,
    const std::vector<std::size_t>& own, const std::vector<std::size_t>& opp) {
  LinearSystem sys;
  const std::size_t unknowns = opp.size() + 1;
  for (const std::size_t j : own) {
    std::vector<Rat> row(unknowns, Rat(0));
    for (std::size_t k = 0; k < opp.size(); ++k) row[k] = payoff[j][opp[k]];
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
  lp.free_vars[unknowns - 1] = true;  // the payoff value may be negative
  lp.rows = sys.coeffs;
  lp.relations.assign(sys.coeffs.size(), Relation::kEq);
  lp.rhs = sys.rhs;
  const auto feasible = solve_lp(lp);
  if (feasible.status != LpStatus::kOptimal) return std::nullopt;
  return feasible.x;
}

bool profile_less(const MixedProfile& a, const MixedProfile& b) {
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
      if (!(a.rows[i][j] == b.rows[i][j])) return a.rows[i][j] < b.rows[i][j];
    }
  }
  return false;
}

}  // namespace

std::vector<MixedProfile> brute_force_two_player(const RankingGame& g) {
  if (g.num_players() != 2)
    throw std::invalid_argument("brute_force_two_player: needs 2 players");
  const std::size_t n0 = g.players[0].size();
  const std::size_t n1 = g.players[1].size();
  if (n0 > 20 || n1 > 20)
    throw std::invalid_argument("brute_force_two_player: too many strategies");

  // Full payoff tables including ties.
  std::vector<std::vector<Rat>> pay0(n0, std::vector<Rat>(n1));
  std::vector<std::vector<Rat>> pay1(n1, std::vector<Rat>(n0));
  for (std::size_t j = 0; j < n0; ++j)
    for (std::size_t k = 0; k < n1; ++k) {
      const auto p = pure_payoffs(g, {j, k});
      pay0[j][k] = p[0];
      pay1[k][j] = p[1];
    }

  std::vector<MixedProfile> found;
  for (std::size_t mask0 = 1; mask0 < (1u << n0); ++mask0) {
    std::vector<std::size_t> s0;
    for (std::size_t j = 0; j < n0; ++j)
      if (mask0 & (1u << j)) s0.push_back(j);
    for (std::size_t mask1 = 1; mask1 < (1u << n1); ++mask1) {
      std::vector<std::size_t> s1;
      for (std::size_t k = 0; k < n1; ++k)
        if (mask1 & (1u << k)) s1.push_back(k);

      const auto x1 = indifference_witness(pay0, s0, s1);
      const auto x0 = indifference_witness(pay1, s1, s0);
      if (!x0 || !x1) continue;
      MixedProfile candidate;
      candidate.rows.assign(2, {});
      candidate.rows[0].assign(n0, Rat(0));
      candidate.rows[1].assign(n1, Rat(0));
      bool ok = true;
      for (std::size_t k = 0; k < s0.size() && ok; ++k) {
        if ((*x0)[k].is_negative()) ok = false;
        candidate.rows[0][s0[k]] = (*x0)[k];
      }
      for (std::size_t k = 0; k < s1.size() && ok; ++k) {
        if ((*x1)[k].is_negative()) ok = false;
        candidate.rows[1][s1[k]] = (*x1)[k];
      }
      if (!ok) continue;
      if (!verify(g, candidate).epsilon.is_zero()) continue;
      found.push_back(std::move(candidate));
    }
  }
  std::sort(found.begin(), found.end(), profile_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

SymmetricMixedResult symmetric_binary_mixed(std::size_t d, const Rat& c,
                                            const Rat& tolerance) {
  if (d < 2) throw std::invalid_argument("symmetric_binary_mixed: d >= 2");
  const Rat lower(1, static_cast<long long>(d));
  if (!(c > lower) || !(c < Rat(1)))
    throw std::invalid_argument("symmetric_binary_mixed: c outside (1/d, 1)");

  ScoreSymmetricGame g;
  g.scores = {Rat(0), Rat(1)};
  g.costs.assign(d, {Rat(0), c});
  g.prizes.assign(d, Rat(0));
  g.prizes[0] = Rat(1);

  auto gap_at = [&](const Rat& p) {
    MixedProfile profile;
    profile.rows.assign(d, {Rat(1) - p, p});
    return expected_payoff_anonymous(g, profile, 0, 1) -
           expected_payoff_anonymous(g, profile, 0, 0);
  };

  const Rat at0 = gap_at(Rat(0));
  const Rat at1 = gap_at(Rat(1));
  if (at0.is_zero() && at1.is_zero()) return {Rat(1, 2), Rat(0), true};

  Rat lo(0), hi(1);
  for (int iter = 0; iter < 10000; ++iter) {
    const Rat mid = (lo + hi) / Rat(2);
    const Rat gap = gap_at(mid);
    if (gap.abs() <= tolerance) return {mid, gap, false};
    if (gap > Rat(0))
      lo = mid;
    else
      hi = mid;
  }
  throw std::logic_error("symmetric_binary_mixed: bisection stalled");
}

GridSearchResult grid_search_ne(const RankingGame& g, const Rat& delta,
                                const Rat& target_eps) {
  if (!(delta > Rat(0)) || delta.num() != 1)
    throw std::invalid_argument(
        "grid_search_ne: delta must be the inverse of an integer");
  const long long steps = static_cast<long long>(delta.den());
  const auto sizes = strategy_counts(g);

  // Per player, every grid distribution over their strategies.
  std::vector<std::vector<std::vector<Rat>>> rows(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<long long> c(sizes[i], 0);
    c[0] = steps;
    while (true) {
      std::vector<Rat> row(sizes[i]);
      for (std::size_t j = 0; j < sizes[i]; ++j) row[j] = Rat(c[j], steps);
      rows[i].push_back(std::move(row));
      // next composition
      std::size_t k = 0;
      for (; k + 1 < c.size(); ++k) {
        if (c[k] > 0) {
          const long long moved = c[k] - 1;
          c[k + 1] += 1;
          c[k] = 0;
          c[0] = moved;
          break;
        }
      }
      if (k + 1 >= c.size()) break;
    }
  }

  GridSearchResult best;
  bool have = false;
  std::vector<std::size_t> pick(sizes.size(), 0);
  while (true) {
    MixedProfile candidate;
    candidate.rows.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i)
      candidate.rows.push_back(rows[i][pick[i]]);
    const auto cert = verify(g, candidate);
    ++best.profiles_scanned;
    if (!have || cert.epsilon < best.epsilon) {
      best.profile = candidate;
      best.epsilon = cert.epsilon;
      have = true;
    }
    if (best.epsilon <= target_eps) return best;
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < rows[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return best;
}

}  // namespace rankeq
