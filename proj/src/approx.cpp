#include "rankeq/approx.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <type_traits>

#include "rankeq/payoff.hpp"

namespace rankeq {

std::vector<Rat> epsilon_round(const std::vector<Rat>& x, const Rat& eps) {
  if (!(eps > Rat(0)) || eps.num() != 1)
    throw std::invalid_argument(
        "epsilon_round: eps must be the inverse of an integer");
  Rat sum(0);
  for (const Rat& v : x) {
    if (v.is_negative())
      throw std::invalid_argument("epsilon_round: negative entry");
    sum += v;
  }
  if (!(sum == Rat(1)))
    throw std::invalid_argument("epsilon_round: entries must sum to one");

  std::vector<Rat> out;
  out.reserve(x.size());
  Rat true_prefix(0), rounded_prefix(0);
  for (const Rat& v : x) {
    const Rat q = v / eps;
    Rat r;
    if (q.is_integer()) {
      r = v;
    } else if (rounded_prefix <= true_prefix) {
      r = Rat(q.ceil()) * eps;
    } else {
      r = Rat(q.floor()) * eps;
    }
    out.push_back(r);
    true_prefix += v;
    rounded_prefix += r;
  }
  return out;
}

Rat floor_to_inverse_integer(const Rat& eps) {
  if (!(eps > Rat(0)))
    throw std::invalid_argument("floor_to_inverse_integer: eps <= 0");
  return Rat(Int(1), (Rat(1) / eps).ceil());
}

// ---------------------------------------------------------------------------
// PTAS

namespace {

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int result = 1;
  for (Int i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
  return result;
}

// All ways to write `total` as an ordered sum of `slots` non-negative parts,
// first slot largest first. Deterministic enumeration order.
void compositions_into(std::vector<std::vector<long long>>& out,
                       std::vector<long long>& prefix, long long total,
                       std::size_t slots) {
  if (slots == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (long long v = total; v >= 0; --v) {
    prefix.push_back(v);
    compositions_into(out, prefix, total - v, slots - 1);
    prefix.pop_back();
  }
}

std::vector<std::vector<long long>> compositions(long long total,
                                                 std::size_t slots) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> prefix;
  compositions_into(out, prefix, total, slots);
  return out;
}

// Advances through the same space in place; returns false after the last.
bool next_composition(std::vector<long long>& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] > 0) {
      const long long moved = c[i] - 1;
      c[i + 1] += 1;
      c[i] = 0;
      c[0] = moved;
      return true;
    }
  }
  return false;
}

// Rounded cost vector -> member players, keyed deterministically.
using TypeClasses = std::map<std::vector<Rat>, std::vector<std::size_t>>;

TypeClasses round_into_types(const ScoreSymmetricGame& g, const Rat& eps) {
  TypeClasses t;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    std::vector<Rat> rounded;
    rounded.reserve(g.costs[i].size());
    for (const Rat& c : g.costs[i])
      rounded.push_back(Rat((c / eps).floor()) * eps);
    t[rounded].push_back(i);
  }
  return t;
}

}  // namespace

Int ptas_candidate_count(const ScoreSymmetricGame& g, const Rat& eps) {
  const Rat eps_used = floor_to_inverse_integer(eps);
  const Int n(static_cast<long long>(g.num_strategies()));
  const Int grid_steps = (Rat(1) / eps_used).floor() * n;
  const Int s = binomial(grid_steps + n - 1, n - 1);
  Int total = 1;
  for (const auto& [costs, members] : round_into_types(g, eps_used)) {
    (void)costs;
    const Int dt(static_cast<long long>(members.size()));
    total *= binomial(dt + s - 1, s - 1);
  }
  return total;
}

PtasResult ptas_solve(const ScoreSymmetricGame& g, const Rat& eps) {
  const std::size_t d = g.num_players();
  const std::size_t n = g.num_strategies();
  if (d == 0 || n == 0) throw std::invalid_argument("ptas_solve: empty game");

  PtasResult result;
  result.epsilon_used = floor_to_inverse_integer(eps);
  result.delta = result.epsilon_used / Rat(static_cast<long long>(n));

  if (d == 1) {
    // One player just takes the cheapest strategy.
    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (g.costs[0][j] < g.costs[0][best]) best = j;
    result.profile = MixedProfile::pure({best}, {n});
    result.candidates_checked = 1;
    result.type_count = 1;
    return result;
  }

  ScoreSymmetricGame rounded = g;
  const TypeClasses types = round_into_types(g, result.epsilon_used);
  for (const auto& [costs, members] : types)
    for (std::size_t i : members) rounded.costs[i] = costs;
  result.type_count = types.size();

  const long long grid_steps =
      static_cast<long long>((Rat(1) / result.delta).floor());
  const auto grid = compositions(grid_steps, n);

  // One composition odometer per type: how many members play each grid point.
  std::vector<const std::vector<std::size_t>*> member_lists;
  std::vector<std::vector<long long>> assignment;
  for (const auto& [costs, members] : types) {
    (void)costs;
    member_lists.push_back(&members);
    std::vector<long long> c(grid.size(), 0);
    c[0] = static_cast<long long>(members.size());
    assignment.push_back(std::move(c));
  }

  while (true) {
    MixedProfile candidate;
    candidate.rows.resize(d);
    for (std::size_t t = 0; t < assignment.size(); ++t) {
      std::size_t next_member = 0;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        for (long long c = 0; c < assignment[t][k]; ++c) {
          const std::size_t player = (*member_lists[t])[next_member++];
          std::vector<Rat> row(n);
          for (std::size_t j = 0; j < n; ++j)
            row[j] = Rat(grid[k][j]) * result.delta;
          candidate.rows[player] = std::move(row);
        }
      }
    }
    ++result.candidates_checked;
    if (verify(rounded, candidate).epsilon <= result.epsilon_used) {
      result.profile = std::move(candidate);
      return result;
    }
    std::size_t t = 0;
    for (; t < assignment.size(); ++t) {
      if (next_composition(assignment[t])) break;
      assignment[t].assign(grid.size(), 0);
      assignment[t][0] = static_cast<long long>(member_lists[t]->size());
    }
    if (t == assignment.size()) break;
  }
  throw std::logic_error("ptas_solve: exhausted candidates without a match");
}

// ---------------------------------------------------------------------------
// FPTAS

namespace {

// Grid masses are integer multiples of 1/M throughout; payoffs and alphas
// are either exact rationals or, when magnitudes allow, integers in units
// of 1/(M^{d-1} K) with K a common denominator of the tie shares and eps.
template <typename Num>
struct Engine {
  std::size_t d = 0, n = 0;
  long long grid = 0;  // M
  std::vector<std::vector<Num>> cost;    // [player][block], engine units
  std::vector<std::vector<Num>> weight;  // [h][t] tie share, engine units
  Num eps{};
  Num zero{};

  mutable std::vector<Num> table_, next_;  // fold scratch

  Num mass(long long units) const {
    if constexpr (std::is_same_v<Num, long long>)
      return units;
    else
      return Rat(units, grid);
  }

  Num one() const {
    if constexpr (std::is_same_v<Num, long long>)
      return 1;  // raw product units; the K scale lives in the weights
    else
      return Rat(1);
  }

  // Expected payoff of player i at `block` when opponent k sits below with
  // mass sigma[k], ties with xi[k], and plays above with the remainder.
  Num payoff(std::size_t i, const long long* sigma, const long long* xi,
             std::size_t block) const {
    table_.assign(d * d, zero);
    next_.resize(d * d);
    table_[0] = one();
    std::size_t folded = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (k == i) continue;
      const Num below = mass(sigma[k]);
      const Num tied = mass(xi[k]);
      const Num above = mass(grid - sigma[k] - xi[k]);
      std::fill(next_.begin(), next_.end(), zero);
      for (std::size_t h = 0; h <= folded; ++h) {
        for (std::size_t t = 0; h + t <= folded; ++t) {
          const Num& m = table_[h * d + t];
          if (m == zero) continue;
          if (!(above == zero)) next_[(h + 1) * d + t] += m * above;
          if (!(tied == zero)) next_[h * d + t + 1] += m * tied;
          if (!(below == zero)) next_[h * d + t] += m * below;
        }
      }
      table_.swap(next_);
      ++folded;
    }
    Num total = zero;
    for (std::size_t h = 0; h < d; ++h)
      for (std::size_t t = 0; h + t < d; ++t) {
        const Num& m = table_[h * d + t];
        if (!(m == zero)) total += m * weight[h][t];
      }
    return total - cost[i][block];
  }
};

// Parallel per-state arrays; parents index the previous block's arrays.
template <typename Num>
struct Layer {
  std::vector<long long> sigma;
  std::vector<Num> alpha;
  std::vector<std::int32_t> parent;

  std::size_t size() const { return parent.size(); }
  void clear() {
    sigma.clear();
    alpha.clear();
    parent.clear();
  }
  void push(const long long* sig, const Num* alp, std::size_t d,
            std::int32_t par) {
    sigma.insert(sigma.end(), sig, sig + d);
    alpha.insert(alpha.end(), alp, alp + d);
    parent.push_back(par);
  }
};

// Keeps one representative per (sigma, alpha) key, the earliest emitted.
template <typename Num>
void dedup_layer(Layer<Num>& f, std::size_t d) {
  const std::size_t count = f.size();
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto key_less = [&](std::uint32_t a, std::uint32_t b) {
    for (std::size_t i = 0; i < d; ++i)
      if (f.sigma[a * d + i] != f.sigma[b * d + i])
        return f.sigma[a * d + i] < f.sigma[b * d + i];
    for (std::size_t i = 0; i < d; ++i)
      if (!(f.alpha[a * d + i] == f.alpha[b * d + i]))
        return f.alpha[a * d + i] < f.alpha[b * d + i];
    return false;
  };
  std::stable_sort(order.begin(), order.end(), key_less);
  Layer<Num> compact;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0 && !key_less(order[k - 1], order[k]) &&
        !key_less(order[k], order[k - 1]))
      continue;
    compact.push(f.sigma.data() + order[k] * d, f.alpha.data() + order[k] * d,
                 d, f.parent[order[k]]);
  }
  f = std::move(compact);
}

template <typename Num>
struct DpRun {
  const ScoreSymmetricGame* game = nullptr;  // original costs, for pick-best
  Engine<Num> engine;
  long long stride = 1;
  bool pick_best_terminal = false;

  // Per block: sigma and parent of each surviving state (for backtracking).
  std::vector<std::vector<long long>> trail_sigma;
  std::vector<std::vector<std::int32_t>> trail_parent;

  MixedProfile path_profile(std::size_t terminal_index) const {
    const std::size_t d = engine.d;
    const std::size_t n = engine.n;
    MixedProfile profile;
    profile.rows.assign(d, std::vector<Rat>(n));
    std::size_t idx = terminal_index;
    for (std::size_t block = n; block-- > 0;) {
      const std::int32_t par = trail_parent[block][idx];
      for (std::size_t i = 0; i < d; ++i) {
        const long long here = trail_sigma[block][idx * d + i];
        const long long before =
            block == 0 ? 0
                       : trail_sigma[block - 1][static_cast<std::size_t>(par) *
                                                    d +
                                                i];
        profile.rows[i][block] = Rat(here - before, engine.grid);
      }
      idx = static_cast<std::size_t>(par);
    }
    return profile;
  }

  std::optional<std::size_t> forward(std::vector<std::size_t>* states_out) {
    const std::size_t d = engine.d;
    const std::size_t n = engine.n;
    const long long grid = engine.grid;

    Layer<Num> frontier;
    frontier.sigma.assign(d, 0);
    frontier.alpha.assign(d, engine.zero);
    frontier.parent.assign(1, -1);

    trail_sigma.assign(n, {});
    trail_parent.assign(n, {});
    std::vector<long long> xi(d), caps(d), new_sigma(d);
    std::vector<Num> pay(d), new_alpha(d);
    Layer<Num> produced;

    for (std::size_t block = 0; block < n; ++block) {
      produced.clear();
      const bool filtered = block > 0;
      const bool last = block + 1 == n;
      for (std::size_t s = 0; s < frontier.size(); ++s) {
        const long long* sig = frontier.sigma.data() + s * d;
        const Num* alp = frontier.alpha.data() + s * d;
        for (std::size_t i = 0; i < d; ++i) caps[i] = grid - sig[i];

        auto emit = [&]() {
          for (std::size_t i = 0; i < d; ++i) {
            new_sigma[i] = sig[i] + xi[i];
            new_alpha[i] = filtered ? std::max(alp[i], pay[i]) : pay[i];
          }
          produced.push(new_sigma.data(), new_alpha.data(), d,
                        static_cast<std::int32_t>(s));
        };
        auto passes = [&]() {
          if (!filtered) return true;
          for (std::size_t i = 0; i < d; ++i) {
            if (sig[i] > 0 && pay[i] > alp[i] + engine.eps) return false;
            if (xi[i] > 0 && pay[i] < alp[i] - engine.eps) return false;
          }
          return true;
        };

        if (last) {
          for (std::size_t i = 0; i < d; ++i) xi[i] = caps[i];
          for (std::size_t i = 0; i < d; ++i)
            pay[i] = engine.payoff(i, sig, xi.data(), block);
          if (passes()) emit();
          continue;
        }

        if (d == 2) {
          // Each payoff depends only on the other player's choice, so both
          // axes can be evaluated once and the rectangle scanned cheaply.
          std::vector<Num>& pay0 = axis0_;
          std::vector<Num>& pay1 = axis1_;
          pay0.clear();
          pay1.clear();
          for (long long v1 = 0; v1 <= caps[1]; v1 += stride) {
            xi[1] = v1;
            pay0.push_back(engine.payoff(0, sig, xi.data(), block));
          }
          for (long long v0 = 0; v0 <= caps[0]; v0 += stride) {
            xi[0] = v0;
            pay1.push_back(engine.payoff(1, sig, xi.data(), block));
          }
          for (long long v0 = 0; v0 <= caps[0]; v0 += stride) {
            xi[0] = v0;
            pay[1] = pay1[static_cast<std::size_t>(v0 / stride)];
            if (filtered) {
              if (sig[1] > 0 && pay[1] > alp[1] + engine.eps) continue;
              if (v0 > 0 && pay[1] < alp[1] - engine.eps) continue;
            }
            for (long long v1 = 0; v1 <= caps[1]; v1 += stride) {
              xi[1] = v1;
              pay[0] = pay0[static_cast<std::size_t>(v1 / stride)];
              if (filtered) {
                if (sig[0] > 0 && pay[0] > alp[0] + engine.eps) continue;
                if (v1 > 0 && pay[0] < alp[0] - engine.eps) continue;
              }
              emit();
            }
          }
          continue;
        }

        auto recurse = [&](auto&& self, std::size_t level) -> void {
          if (level == d) {
            for (std::size_t i = 0; i < d; ++i)
              pay[i] = engine.payoff(i, sig, xi.data(), block);
            if (passes()) emit();
            return;
          }
          for (long long v = 0; v <= caps[level]; v += stride) {
            xi[level] = v;
            if (level == 0 && filtered &&
                prune_after_first(sig, xi, caps, alp, block))
              continue;
            self(self, level + 1);
          }
        };
        recurse(recurse, 0);
      }

      if (produced.size() == 0) return std::nullopt;
      dedup_layer(produced, d);
      if (states_out) states_out->push_back(produced.size());

      trail_sigma[block] = produced.sigma;
      trail_parent[block] = produced.parent;
      frontier = std::move(produced);
      produced = Layer<Num>{};
    }

    // Terminal states all closed to sigma = grid; pick one deterministically.
    if (!pick_best_terminal || frontier.size() == 1) return 0;
    std::size_t best = 0;
    Rat best_eps;
    bool have = false;
    for (std::size_t t = 0; t < trail_parent[n - 1].size(); ++t) {
      const Rat eps_here = verify(*game, path_profile(t)).epsilon;
      if (!have || eps_here < best_eps) {
        best = t;
        best_eps = eps_here;
        have = true;
      }
    }
    return best;
  }

  // Subtree bound after fixing player 0's choice: payoffs rise with every
  // opponent's tie mass, so the extremes bracket all completions.
  bool prune_after_first(const long long* sig, std::vector<long long>& xi,
                         const std::vector<long long>& caps, const Num* alp,
                         std::size_t block) {
    const std::size_t d = engine.d;
    probe_ = xi;
    for (std::size_t i = 1; i < d; ++i) probe_[i] = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!(sig[i] > 0)) continue;
      if (engine.payoff(i, sig, probe_.data(), block) > alp[i] + engine.eps)
        return true;
    }
    if (xi[0] > 0) {
      for (std::size_t i = 1; i < d; ++i) probe_[i] = caps[i];
      if (engine.payoff(0, sig, probe_.data(), block) < alp[0] - engine.eps)
        return true;
    }
    return false;
  }

 private:
  std::vector<Num> axis0_, axis1_;
  std::vector<long long> probe_;
};

// Nested subgrids to search before the full grid: divisors of M spaced at
// least 4x apart, coarsest (but >= 8 points) first.
std::vector<long long> level_schedule(long long m, bool single_level) {
  if (single_level || m <= 8) return {m};
  std::vector<long long> levels;
  long long last = 0;
  for (long long c = 8; c < m; ++c) {
    if (m % c != 0) continue;
    if (last == 0 || c >= 4 * last) {
      levels.push_back(c);
      last = c;
    }
  }
  levels.push_back(m);
  return levels;
}

Int power(Int base, std::size_t exp) {
  Int r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<std::vector<Rat>> tie_shares(const std::vector<Rat>& prizes) {
  const std::size_t d = prizes.size();
  std::vector<Rat> pre(d + 1, Rat(0));
  for (std::size_t k = 0; k < d; ++k) pre[k + 1] = pre[k] + prizes[k];
  std::vector<std::vector<Rat>> share(d, std::vector<Rat>(d, Rat(0)));
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t t = 0; h + t < d; ++t)
      share[h][t] =
          (pre[h + t + 1] - pre[h]) / Rat(static_cast<long long>(t + 1));
  return share;
}

template <typename Num>
FptasResult run_levels(const ScoreSymmetricGame& g, Engine<Num> engine,
                       const Rat& eps_used, long long m,
                       const FptasOptions& options) {
  FptasResult result;
  result.epsilon_used = eps_used;
  result.delta = Rat(1, m);

  DpRun<Num> run;
  run.game = &g;
  run.engine = std::move(engine);
  run.pick_best_terminal = options.delta_override.has_value();

  const bool single =
      options.single_level || options.delta_override.has_value();
  for (long long level : level_schedule(m, single)) {
    ++result.levels_tried;
    run.stride = m / level;
    std::vector<std::size_t> counts;
    const auto terminal = run.forward(&counts);
    if (terminal) {
      result.states_per_block = std::move(counts);
      result.profile = run.path_profile(*terminal);
      return result;
    }
  }
  throw FptasExhausted("fptas_solve: no grid path satisfies the filters");
}

}  // namespace

FptasResult fptas_solve(const ScoreSymmetricGame& g, const Rat& eps,
                        const FptasOptions& options) {
  const std::size_t d = g.num_players();
  const std::size_t n = g.num_strategies();
  if (d < 2) throw std::invalid_argument("fptas_solve: needs >= 2 players");
  if (n == 0) throw std::invalid_argument("fptas_solve: no strategies");
  if (g.prizes.size() != d)
    throw std::invalid_argument("fptas_solve: prize count mismatch");

  const Rat eps_used = floor_to_inverse_integer(eps);
  Rat delta;
  if (options.delta_override) {
    delta = floor_to_inverse_integer(*options.delta_override);
  } else {
    Rat denom = Rat(4) * Rat(static_cast<long long>(d * d));
    for (std::size_t i = 0; i < d; ++i) denom *= Rat(3);
    delta = eps_used / denom;
  }
  const Int m_int = delta.den();
  if (m_int > Int(1'000'000'000))
    throw std::invalid_argument("fptas_solve: grid too fine to enumerate");
  const long long m = static_cast<long long>(m_int);

  std::vector<std::vector<long long>> cost_steps(d);
  for (std::size_t i = 0; i < d; ++i) {
    cost_steps[i].reserve(n);
    for (const Rat& c : g.costs[i])
      cost_steps[i].push_back(static_cast<long long>((c * Rat(m)).floor()));
  }
  const auto shares = tie_shares(g.prizes);

  Int k_common = eps_used.den();
  for (const auto& row : shares)
    for (const Rat& s : row) k_common = lcm(k_common, s.den());
  const Int unit_bound = Int(4) * Int(static_cast<long long>(d * d)) *
                         power(Int(m), d - 1) * k_common;

  if (!options.force_exact_scalar && unit_bound < (Int(1) << 62)) {
    Engine<long long> engine;
    engine.d = d;
    engine.n = n;
    engine.grid = m;
    engine.zero = 0;
    const Int cost_scale = power(Int(m), d - 2) * k_common;
    engine.cost.resize(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j)
        engine.cost[i].push_back(
            static_cast<long long>(Int(cost_steps[i][j]) * cost_scale));
    engine.weight.assign(d, std::vector<long long>(d, 0));
    for (std::size_t h = 0; h < d; ++h)
      for (std::size_t t = 0; h + t < d; ++t)
        engine.weight[h][t] = static_cast<long long>(
            shares[h][t].num() * (k_common / shares[h][t].den()));
    engine.eps = static_cast<long long>(
        eps_used.num() * (power(Int(m), d - 1) * k_common / eps_used.den()));
    return run_levels(g, std::move(engine), eps_used, m, options);
  }

  Engine<Rat> engine;
  engine.d = d;
  engine.n = n;
  engine.grid = m;
  engine.zero = Rat(0);
  engine.cost.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j)
      engine.cost[i].push_back(Rat(cost_steps[i][j], m));
  engine.weight = shares;
  engine.eps = eps_used;
  return run_levels(g, std::move(engine), eps_used, m, options);
}

}  // namespace rankeq
