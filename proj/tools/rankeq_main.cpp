// Command-line front end: parse games, dispatch solvers, emit certificates.
//
// Exit codes: 0 success, 1 quality miss (certified epsilon above the
// requested bound, or a rejected support), 2 malformed input, 3 method/game
// mismatch.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankeq/approx.hpp"
#include "rankeq/exact.hpp"
#include "rankeq/gen.hpp"
#include "rankeq/io.hpp"
#include "rankeq/oracle.hpp"
#include "rankeq/payoff.hpp"
#include "rankeq/reduce.hpp"

namespace {

using namespace rankeq;

constexpr int kOk = 0;
constexpr int kQualityMiss = 1;
constexpr int kMalformed = 2;
constexpr int kMismatch = 3;

struct CliError {
  int code;
  std::string message;
};

RankingGame load_game(const std::string& path) {
  RankingGame g;
  try {
    g = game_from_json(read_text_file(path));
  } catch (const std::exception& e) {
    throw CliError{kMalformed, std::string("cannot load game: ") + e.what()};
  }
  auto violations = as_score_symmetric(g) ? validate_score_symmetric(g)
                                          : validate(g);
  if (!violations.empty()) {
    std::string msg = "invalid game:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw CliError{kMalformed, msg};
  }
  return g;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty())
    std::cout << text;
  else
    write_text_file(output_path, text);
}

Rat parse_rat_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_rat(text);
  } catch (const std::exception& e) {
    throw CliError{kMalformed, flag + ": " + e.what()};
  }
}

SupportSpec parse_support(const std::string& text, std::size_t players) {
  SupportSpec spec;
  std::stringstream by_player(text);
  std::string part;
  while (std::getline(by_player, part, ';')) {
    std::vector<std::size_t> indices;
    std::stringstream by_index(part);
    std::string token;
    while (std::getline(by_index, token, ',')) {
      try {
        indices.push_back(std::stoul(token));
      } catch (const std::exception&) {
        throw CliError{kMalformed, "bad --support index '" + token + "'"};
      }
    }
    spec.supports.push_back(std::move(indices));
  }
  if (spec.supports.size() != players)
    throw CliError{kMismatch, "--support needs one index list per player"};
  return spec;
}

ScoreSymmetricGame require_score_symmetric(const RankingGame& g,
                                           const std::string& method) {
  auto s = as_score_symmetric(g);
  if (!s) throw CliError{kMismatch, method + ": game is not score-symmetric"};
  return *s;
}

struct SolveArgs {
  std::string game_path;
  std::string method = "auto";
  std::string epsilon = "0";
  std::string delta_override;
  std::string support;
  std::string output;
  unsigned threads = 1;
};

// Solves the normalized game with the chosen method; the returned profile is
// indexed like the normalized game.
MixedProfile dispatch(const RankingGame& norm, const SolveArgs& args,
                      const Rat& requested_eps) {
  const std::size_t d = norm.num_players();
  const Rat algo_eps = requested_eps > Rat(0) ? requested_eps : Rat(1, 4);
  const std::string& method = args.method;

  auto solve_symmetrized_approx = [&](bool prefer_fptas) {
    auto [sym, map] = score_symmetrize(norm);
    MixedProfile on_sym;
    if (prefer_fptas) {
      FptasOptions options;
      if (!args.delta_override.empty())
        options.delta_override =
            parse_rat_flag(args.delta_override, "--delta-override");
      on_sym = fptas_solve(sym, algo_eps, options).profile;
    } else {
      on_sym = ptas_solve(sym, algo_eps).profile;
    }
    return lift_back(on_sym, map);
  };

  if (method == "pure2") {
    const auto sym = require_score_symmetric(norm, method);
    if (sym.num_strategies() != 2)
      throw CliError{kMismatch, "pure2: needs exactly two actions"};
    return solve_pure_two_action(sym).profile;
  }
  if (method == "two-player-no-ties") {
    if (d != 2) throw CliError{kMismatch, "two-player-no-ties: needs 2 players"};
    if (!has_no_ties(norm))
      throw CliError{kMismatch, "two-player-no-ties: game has tied scores"};
    return solve_two_player_no_ties(norm);
  }
  if (method == "cascade") {
    if (args.support.empty())
      throw CliError{kMismatch, "cascade: --support is required"};
    const auto support = parse_support(args.support, d);
    CascadeResult r;
    try {
      r = cascade_solve(norm, support);
    } catch (const std::invalid_argument& e) {
      throw CliError{kMismatch, std::string("cascade: ") + e.what()};
    }
    if (!r.accepted)
      throw CliError{kQualityMiss, "cascade: support rejected: " + r.rejection};
    return r.profile;
  }
  if (method == "linear-prize") {
    if (!fit_linear_prizes(norm.prizes))
      throw CliError{kMismatch, "linear-prize: prizes not affine in rank"};
    if (!has_no_ties(norm))
      throw CliError{kMismatch, "linear-prize: game has tied scores"};
    return solve_linear_prize(norm);
  }
  if (method == "ptas") {
    if (auto sym = as_score_symmetric(norm))
      return ptas_solve(*sym, algo_eps).profile;
    return solve_symmetrized_approx(/*prefer_fptas=*/false);
  }
  if (method == "fptas") {
    if (auto sym = as_score_symmetric(norm)) {
      FptasOptions options;
      if (!args.delta_override.empty())
        options.delta_override =
            parse_rat_flag(args.delta_override, "--delta-override");
      return fptas_solve(*sym, algo_eps, options).profile;
    }
    return solve_symmetrized_approx(/*prefer_fptas=*/true);
  }
  if (method == "brute") {
    if (d != 2) throw CliError{kMismatch, "brute: needs 2 players"};
    const auto all = brute_force_two_player(norm);
    if (all.empty())
      throw CliError{kQualityMiss, "brute: no exact equilibrium found"};
    return all.front();
  }
  if (method == "grid") {
    Rat delta(1, 4);
    if (!args.delta_override.empty())
      delta = parse_rat_flag(args.delta_override, "--delta-override");
    return grid_search_ne(norm, delta, requested_eps).profile;
  }
  if (method == "auto") {
    if (d == 2 && has_no_ties(norm)) return solve_two_player_no_ties(norm);
    if (auto sym = as_score_symmetric(norm)) {
      if (sym->num_strategies() == 2) return solve_pure_two_action(*sym).profile;
    }
    if (fit_linear_prizes(norm.prizes) && has_no_ties(norm))
      return solve_linear_prize(norm);
    // Remaining games go through symmetrization and an approximation scheme:
    // the block DP when players are few, the type search when the ladder is
    // short.
    auto [sym, map] = score_symmetrize(norm);
    if (d <= 3) {
      FptasOptions options;
      if (!args.delta_override.empty())
        options.delta_override =
            parse_rat_flag(args.delta_override, "--delta-override");
      return lift_back(fptas_solve(sym, algo_eps, options).profile, map);
    }
    if (sym.num_strategies() <= 4)
      return lift_back(ptas_solve(sym, algo_eps).profile, map);
    throw CliError{kMismatch,
                   "auto: no applicable method (too many players and scores)"};
  }
  throw CliError{kMalformed, "unknown method '" + method + "'"};
}

int cmd_solve(const SolveArgs& args) {
  const RankingGame original = load_game(args.game_path);
  const Rat requested_eps = parse_rat_flag(args.epsilon, "--epsilon");

  NormalizedGame normalized;
  try {
    normalized = normalize(original);
  } catch (const std::exception& e) {
    throw CliError{kMalformed, std::string("normalize: ") + e.what()};
  }

  MixedProfile on_norm = dispatch(normalized.game, args, requested_eps);
  const MixedProfile profile = normalized.record.lift_profile(on_norm);

  // The solver never certifies itself; the verifier re-derives everything
  // against the game as given.
  const auto cert = verify(original, profile);
  emit(certificate_to_json(cert), args.output);
  return cert.epsilon <= requested_eps ? kOk : kQualityMiss;
}

int cmd_verify(const std::string& game_path, const std::string& profile_path,
               const std::string& epsilon, const std::string& output) {
  const RankingGame g = load_game(game_path);
  const Rat requested_eps = parse_rat_flag(epsilon, "--epsilon");
  MixedProfile profile;
  try {
    profile = profile_from_json(read_text_file(profile_path));
  } catch (const std::exception& e) {
    throw CliError{kMalformed, std::string("cannot load profile: ") + e.what()};
  }
  const auto sizes = strategy_counts(g);
  if (profile.rows.size() != sizes.size())
    throw CliError{kMismatch, "profile has wrong player count"};
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (profile.rows[i].size() != sizes[i])
      throw CliError{kMismatch, "profile row size mismatch"};
  if (!profile_is_valid(profile, sizes))
    throw CliError{kMalformed, "profile rows are not probability vectors"};

  const auto cert = verify(g, profile);
  emit(certificate_to_json(cert), output);
  return cert.epsilon <= requested_eps ? kOk : kQualityMiss;
}

int cmd_gen(const GeneratorSpec& spec, const std::string& output) {
  RankingGame g;
  try {
    g = generate_game(spec);
  } catch (const std::invalid_argument& e) {
    throw CliError{kMalformed, std::string("gen: ") + e.what()};
  }
  emit(game_to_json(g), output);
  return kOk;
}

nlohmann::json record_to_json(const NormalizationRecord& rec) {
  nlohmann::json j;
  j["prize_shift"] = rec.prize_shift.to_string();
  j["scale"] = rec.scale.to_string();
  j["cost_shift"] = nlohmann::json::array();
  for (const auto& c : rec.cost_shift) j["cost_shift"].push_back(c.to_string());
  j["discarded_prizes"] = nlohmann::json::array();
  for (const auto& u : rec.discarded_prizes)
    j["discarded_prizes"].push_back(u.to_string());
  j["padded_prizes"] = rec.padded_prizes;
  j["removed_strategies"] = rec.removed_strategies;
  return j;
}

int cmd_normalize(const std::string& game_path, const std::string& output,
                  const std::string& record_path) {
  const RankingGame g = load_game(game_path);
  NormalizedGame normalized;
  try {
    normalized = normalize(g);
  } catch (const std::exception& e) {
    throw CliError{kMalformed, std::string("normalize: ") + e.what()};
  }
  emit(game_to_json(normalized.game), output);
  if (!record_path.empty())
    write_text_file(record_path,
                    record_to_json(normalized.record).dump(2) + "\n");
  return kOk;
}

int cmd_reduce(const std::string& game_path, const std::string& output,
               const std::string& map_path) {
  const RankingGame g = load_game(game_path);
  NormalizedGame normalized;
  try {
    normalized = normalize(g);
  } catch (const std::exception& e) {
    throw CliError{kMalformed, std::string("normalize: ") + e.what()};
  }
  auto [sym, map] = score_symmetrize(normalized.game);
  emit(game_to_json(sym.to_ranking()), output);
  if (!map_path.empty()) {
    nlohmann::json j;
    j["ladder"] = nlohmann::json::array();
    for (const auto& s : map.ladder) j["ladder"].push_back(s.to_string());
    j["players"] = nlohmann::json::array();
    for (const auto& origins : map.origins) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& o : origins) {
        nlohmann::json entry;
        switch (o.kind) {
          case RungOrigin::Kind::kOriginal:
            entry["kind"] = "original";
            entry["original_index"] = o.original_index;
            break;
          case RungOrigin::Kind::kCopied:
            entry["kind"] = "copied";
            entry["dominating_rung"] = o.dominating_rung;
            break;
          case RungOrigin::Kind::kCostOnePad:
            entry["kind"] = "cost-one-pad";
            entry["dominating_rung"] = o.dominating_rung;
            break;
        }
        row.push_back(std::move(entry));
      }
      j["players"].push_back(std::move(row));
    }
    write_text_file(map_path, j.dump(2) + "\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium solver suite for competitiveness-based ranking "
               "games"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Compute an equilibrium");
  solve->add_option("game", solve_args.game_path, "Game file (JSON)")
      ->required();
  solve->add_option("--method", solve_args.method,
                    "auto|pure2|two-player-no-ties|cascade|linear-prize|"
                    "ptas|fptas|brute|grid");
  solve->add_option("--epsilon", solve_args.epsilon,
                    "Requested certified bound (exit 0 iff met)");
  solve->add_option("--delta-override", solve_args.delta_override,
                    "Probability grid override for fptas/grid");
  solve->add_option("--support", solve_args.support,
                    "cascade only: comma lists per player, ';' separated");
  solve->add_option("--output", solve_args.output, "Certificate file");
  solve->add_option("--threads", solve_args.threads, "Worker thread budget");

  std::string verify_game, verify_profile, verify_eps = "0", verify_output;
  auto* verify_cmd = app.add_subcommand("verify", "Certify a profile");
  verify_cmd->add_option("game", verify_game, "Game file")->required();
  verify_cmd->add_option("profile", verify_profile, "Profile file")->required();
  verify_cmd->add_option("--epsilon", verify_eps, "Requested bound");
  verify_cmd->add_option("--output", verify_output, "Certificate file");

  GeneratorSpec gen_spec;
  std::string gen_tie = "forbid", gen_prize = "single", gen_output;
  auto* gen = app.add_subcommand("gen", "Generate a random game");
  gen->add_option("--players", gen_spec.players)->required();
  gen->add_option("--actions", gen_spec.actions)->required();
  gen->add_option("--seed", gen_spec.seed);
  gen->add_option("--tie-policy", gen_tie, "forbid|allow|force-shared-ladder");
  gen->add_option("--prize-model", gen_prize,
                  "single|linear|random-non-increasing");
  gen->add_option("--cost-denominator", gen_spec.cost_denominator);
  gen->add_option("--output", gen_output, "Game file");

  std::string norm_game, norm_output, norm_record;
  auto* norm = app.add_subcommand("normalize", "Rescale a game to [0,1]");
  norm->add_option("game", norm_game, "Game file")->required();
  norm->add_option("--output", norm_output, "Normalized game file");
  norm->add_option("--record", norm_record, "Affine-transform sidecar file");

  std::string reduce_game, reduce_output, reduce_map;
  auto* reduce = app.add_subcommand("reduce", "Game-to-game reductions");
  auto* reduce_sym =
      reduce->add_subcommand("score-symmetric", "Extend to a shared ladder");
  reduce_sym->add_option("game", reduce_game, "Game file")->required();
  reduce_sym->add_option("--output", reduce_output, "Symmetrized game file");
  reduce_sym->add_option("--map", reduce_map, "Lift-back sidecar file");
  reduce->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*verify_cmd)
      return cmd_verify(verify_game, verify_profile, verify_eps, verify_output);
    if (*gen) {
      if (gen_tie == "allow")
        gen_spec.tie_policy = TiePolicy::kAllow;
      else if (gen_tie == "force-shared-ladder")
        gen_spec.tie_policy = TiePolicy::kForceSharedLadder;
      else if (gen_tie != "forbid")
        throw CliError{kMalformed, "unknown tie policy '" + gen_tie + "'"};
      if (gen_prize == "linear")
        gen_spec.prize_model = PrizeModel::kLinear;
      else if (gen_prize == "random-non-increasing")
        gen_spec.prize_model = PrizeModel::kRandomNonIncreasing;
      else if (gen_prize != "single")
        throw CliError{kMalformed, "unknown prize model '" + gen_prize + "'"};
      return cmd_gen(gen_spec, gen_output);
    }
    if (*norm) return cmd_normalize(norm_game, norm_output, norm_record);
    if (*reduce) return cmd_reduce(reduce_game, reduce_output, reduce_map);
  } catch (const CliError& e) {
    std::cerr << "rankeq: " << e.message << "\n";
    return e.code;
  } catch (const FptasExhausted& e) {
    std::cerr << "rankeq: " << e.what() << "\n";
    return kQualityMiss;
  } catch (const std::exception& e) {
    std::cerr << "rankeq: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
