#include "rankeq/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rankeq {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer())
    return Rat(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned())
    return Rat(static_cast<long long>(j.get<std::uint64_t>()));
  if (j.is_number_float()) {
    // Re-parse the shortest round-trip decimal so "0.1" means 1/10.
    return parse_rat(j.dump());
  }
  throw std::invalid_argument("expected a number or \"p/q\" string");
}

json rat_to_json(const Rat& r) { return json(r.to_string()); }

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

std::vector<Rat> rat_row(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  std::vector<Rat> row;
  row.reserve(j.size());
  for (const auto& item : j) row.push_back(rat_from_json(item));
  return row;
}

}  // namespace

RankingGame game_from_json(const std::string& text) {
  const json j = parse_document(text);
  if (!j.is_object() || !j.contains("prizes") || !j.contains("players"))
    throw std::invalid_argument("game file needs \"prizes\" and \"players\"");
  RankingGame g;
  g.prizes = rat_row(j["prizes"]);
  if (!j["players"].is_array())
    throw std::invalid_argument("\"players\" must be an array");
  for (const auto& pj : j["players"]) {
    if (!pj.is_object() || !pj.contains("strategies") ||
        !pj["strategies"].is_array())
      throw std::invalid_argument("each player needs a \"strategies\" array");
    std::vector<StrategySpec> strategies;
    for (const auto& sj : pj["strategies"]) {
      if (!sj.is_object() || !sj.contains("cost") || !sj.contains("score"))
        throw std::invalid_argument("each strategy needs cost and score");
      strategies.push_back({rat_from_json(sj["cost"]),
                            rat_from_json(sj["score"])});
    }
    g.players.push_back(std::move(strategies));
  }
  return g;
}

std::string game_to_json(const RankingGame& g) {
  json j;
  j["prizes"] = json::array();
  for (const auto& u : g.prizes) j["prizes"].push_back(rat_to_json(u));
  j["players"] = json::array();
  for (const auto& p : g.players) {
    json strategies = json::array();
    for (const auto& s : p)
      strategies.push_back(
          {{"cost", rat_to_json(s.cost)}, {"score", rat_to_json(s.score)}});
    j["players"].push_back({{"strategies", std::move(strategies)}});
  }
  return j.dump(2) + "\n";
}

MixedProfile profile_from_json(const std::string& text) {
  const json j = parse_document(text);
  const json* rows = nullptr;
  if (j.is_array()) {
    rows = &j;
  } else if (j.is_object() && j.contains("profile")) {
    rows = &j["profile"];
  } else {
    throw std::invalid_argument("profile file needs a \"profile\" array");
  }
  if (!rows->is_array()) throw std::invalid_argument("profile must be arrays");
  MixedProfile p;
  for (const auto& row : *rows) p.rows.push_back(rat_row(row));
  return p;
}

std::string profile_to_json(const MixedProfile& p) {
  json rows = json::array();
  for (const auto& row : p.rows) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_to_json(x));
    rows.push_back(std::move(r));
  }
  return json{{"profile", std::move(rows)}}.dump(2) + "\n";
}

std::string certificate_to_json(const EquilibriumCertificate& cert) {
  json rows = json::array();
  for (const auto& row : cert.profile.rows) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_to_json(x));
    rows.push_back(std::move(r));
  }
  json regrets = json::array();
  for (const auto& r : cert.regrets) regrets.push_back(rat_to_json(r));
  json gaps = json::array();
  for (const auto& r : cert.gaps) gaps.push_back(rat_to_json(r));
  json j{{"profile", std::move(rows)},
         {"epsilon", rat_to_json(cert.epsilon)},
         {"regrets", std::move(regrets)},
         {"gaps", std::move(gaps)},
         {"welfare",
          {{"cost", rat_to_json(cert.welfare_cost)},
           {"score", rat_to_json(cert.welfare_score)}}}};
  return j.dump(2) + "\n";
}

EquilibriumCertificate certificate_from_json(const std::string& text) {
  const json j = parse_document(text);
  if (!j.is_object() || !j.contains("profile") || !j.contains("epsilon"))
    throw std::invalid_argument("certificate needs profile and epsilon");
  EquilibriumCertificate cert;
  for (const auto& row : j["profile"]) cert.profile.rows.push_back(rat_row(row));
  cert.epsilon = rat_from_json(j["epsilon"]);
  if (j.contains("regrets")) cert.regrets = rat_row(j["regrets"]);
  if (j.contains("gaps")) cert.gaps = rat_row(j["gaps"]);
  if (j.contains("welfare")) {
    cert.welfare_cost = rat_from_json(j["welfare"]["cost"]);
    cert.welfare_score = rat_from_json(j["welfare"]["score"]);
  }
  return cert;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace rankeq
