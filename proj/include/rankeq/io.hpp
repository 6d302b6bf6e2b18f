// JSON readers and writers for games, profiles, and certificates.
//
// Canonical game file:
//   {"prizes": ["1/1", "0/1"],
//    "players": [{"strategies": [{"cost": "0/1", "score": "3/1"}, ...]}, ...]}
// Numbers may be given as "p/q" strings, decimal strings, or JSON numbers;
// the writer always emits "p/q" in lowest terms.
#pragma once

#include <string>

#include "rankeq/game.hpp"
#include "rankeq/payoff.hpp"

namespace rankeq {

RankingGame game_from_json(const std::string& text);
std::string game_to_json(const RankingGame& g);

MixedProfile profile_from_json(const std::string& text);
std::string profile_to_json(const MixedProfile& p);

std::string certificate_to_json(const EquilibriumCertificate& cert);
EquilibriumCertificate certificate_from_json(const std::string& text);

// File helpers; throw std::runtime_error on I/O failure and
// std::invalid_argument on malformed content.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rankeq
