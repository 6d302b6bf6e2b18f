#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_helpers.hpp"
#include "fixtures.hpp"
#include "rankeq/io.hpp"

using namespace rankeq;
using namespace rankeq::test;

TEST_CASE("gen is deterministic per seed") {
  ScratchDir dir;
  const std::string a = dir.path("a.json");
  const std::string b = dir.path("b.json");
  CHECK(run_cli("gen --players 2 --actions 3 --seed 7 --output " + a)
            .exit_code == 0);
  CHECK(run_cli("gen --players 2 --actions 3 --seed 7 --output " + b)
            .exit_code == 0);
  CHECK(read_text_file(a) == read_text_file(b));
  CHECK(read_text_file(a).size() > 0);
  const auto with_other_seed =
      run_cli("gen --players 2 --actions 3 --seed 8");
  CHECK(with_other_seed.exit_code == 0);
  CHECK(with_other_seed.output != read_text_file(a));
}

TEST_CASE("gen output is canonical for the parser") {
  const auto generated =
      run_cli("gen --players 3 --actions 2 --seed 11 --prize-model linear");
  REQUIRE(generated.exit_code == 0);
  const RankingGame g = game_from_json(generated.output);
  CHECK(game_to_json(g) == generated.output);
  CHECK(validate(g).empty());
}

TEST_CASE("gen rejects contradictory settings") {
  CHECK(run_cli("gen --players 1 --actions 2 --prize-model linear")
            .exit_code == 2);
  CHECK(run_cli("gen --players 2 --actions 2 --tie-policy bogus").exit_code ==
        2);
}

TEST_CASE("forced shared ladders are score-symmetric") {
  const auto generated = run_cli(
      "gen --players 3 --actions 3 --seed 5 --tie-policy force-shared-ladder");
  REQUIRE(generated.exit_code == 0);
  CHECK(as_score_symmetric(game_from_json(generated.output)).has_value());
}

TEST_CASE("solve and verify agree end to end") {
  ScratchDir dir;
  const std::string game = dir.path("game.json");
  const std::string cert = dir.path("cert.json");
  const std::string profile = dir.path("profile.json");
  REQUIRE(run_cli("gen --players 2 --actions 3 --seed 21 --output " + game)
              .exit_code == 0);
  REQUIRE(run_cli("solve " + game + " --method auto --output " + cert)
              .exit_code == 0);
  const auto parsed = certificate_from_json(read_text_file(cert));
  CHECK(parsed.epsilon == Rat(0));
  write_text_file(profile, profile_to_json(parsed.profile));
  CHECK(run_cli("verify " + game + " " + profile).exit_code == 0);
}

TEST_CASE("quality misses exit with one") {
  ScratchDir dir;
  const std::string game = dir.path("game.json");
  const std::string profile = dir.path("profile.json");
  write_text_file(game, game_to_json(example_two_player()));
  write_text_file(profile,
                  profile_to_json(MixedProfile::pure({0, 0}, {2, 2})));
  // Player 2 regrets one half; a quarter is not enough.
  CHECK(run_cli("verify " + game + " " + profile + " --epsilon 1/4")
            .exit_code == 1);
  CHECK(run_cli("verify " + game + " " + profile + " --epsilon 1/2")
            .exit_code == 0);
}

TEST_CASE("malformed inputs exit with two") {
  ScratchDir dir;
  const std::string bad = dir.path("bad.json");
  write_text_file(bad, "{ not json");
  CHECK(run_cli("solve " + bad).exit_code == 2);

  const std::string game = dir.path("game.json");
  write_text_file(game, game_to_json(example_two_player()));
  const std::string profile = dir.path("profile.json");
  write_text_file(profile, R"({"profile": [["1","1"],["1","0"]]})");
  CHECK(run_cli("verify " + game + " " + profile).exit_code == 2);

  const std::string invalid_game = dir.path("invalid.json");
  RankingGame g = example_two_player();
  g.prizes = {Rat(1), Rat(1)};
  write_text_file(invalid_game, game_to_json(g));
  CHECK(run_cli("solve " + invalid_game).exit_code == 2);
}

TEST_CASE("method and game mismatches exit with three") {
  ScratchDir dir;
  const std::string noties = dir.path("noties.json");
  write_text_file(noties, game_to_json(example_two_player()));
  CHECK(run_cli("solve " + noties + " --method cascade").exit_code == 3);

  const std::string tied = dir.path("tied.json");
  write_text_file(tied, game_to_json(example_three_action().to_ranking()));
  CHECK(run_cli("solve " + tied + " --method two-player-no-ties").exit_code ==
        3);
  CHECK(run_cli("solve " + tied + " --method linear-prize").exit_code == 3);

  const std::string game = dir.path("game.json");
  write_text_file(game, game_to_json(example_two_player()));
  const std::string short_profile = dir.path("short.json");
  write_text_file(short_profile, R"({"profile": [["1","0"]]})");
  CHECK(run_cli("verify " + game + " " + short_profile).exit_code == 3);
}

TEST_CASE("cascade through the command line") {
  ScratchDir dir;
  const std::string game = dir.path("game.json");
  write_text_file(game, game_to_json(example_two_player()));
  const auto r =
      run_cli("solve " + game + " --method cascade --support '0,1;0,1'");
  CHECK(r.exit_code == 0);
  const auto cert = certificate_from_json(r.output);
  CHECK(cert.epsilon == Rat(0));
}

TEST_CASE("normalize writes the game and the transform record") {
  ScratchDir dir;
  const std::string game = dir.path("game.json");
  RankingGame g = example_two_player();
  for (auto& u : g.prizes) u = u * Rat(3) + Rat(1);
  for (auto& p : g.players)
    for (auto& s : p) s.cost = s.cost * Rat(3);
  write_text_file(game, game_to_json(g));
  const std::string out = dir.path("norm.json");
  const std::string rec = dir.path("record.json");
  REQUIRE(run_cli("normalize " + game + " --output " + out + " --record " +
                  rec)
              .exit_code == 0);
  CHECK(game_from_json(read_text_file(out)) == example_two_player());
  CHECK(read_text_file(rec).find("\"scale\": \"3/1\"") != std::string::npos);
}

TEST_CASE("reduce emits the shared-ladder game and its sidecar map") {
  ScratchDir dir;
  const std::string game = dir.path("game.json");
  write_text_file(game, game_to_json(example_two_player()));
  const std::string out = dir.path("sym.json");
  const std::string map = dir.path("map.json");
  REQUIRE(run_cli("reduce score-symmetric " + game + " --output " + out +
                  " --map " + map)
              .exit_code == 0);
  const RankingGame sym = game_from_json(read_text_file(out));
  CHECK(as_score_symmetric(sym).has_value());
  CHECK(sym.players[0].size() == 4);
  CHECK(read_text_file(map).find("cost-one-pad") != std::string::npos);
  // The emitted file itself passes the loader's shared-ladder validation.
  CHECK(run_cli("solve " + out + " --method pure2").exit_code == 3);
}

TEST_CASE("solve dispatches approximation methods") {
  ScratchDir dir;
  const std::string game = dir.path("game.json");
  write_text_file(game, game_to_json(example_three_action().to_ranking()));
  const auto r = run_cli("solve " + game + " --method fptas --epsilon 1/4 " +
                         "--delta-override 1/40");
  // Exit 0 only if the certificate met 1/4; either way it must not be a
  // parse or dispatch failure.
  CHECK((r.exit_code == 0 || r.exit_code == 1));
  const auto cert = certificate_from_json(r.output);
  CHECK(cert.profile.rows.size() == 2);
}
