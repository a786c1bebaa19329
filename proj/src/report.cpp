#include "kcut/report.hpp"

#include <cstdio>

#include "kcut/error.hpp"

namespace kcut {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["input_digest"] = input_digest;
  j["mode"] = mode;
  j["k"] = k;
  j["epsilon"] = epsilon ? nlohmann::ordered_json(*epsilon) : nlohmann::ordered_json(nullptr);
  j["seed"] = seed;
  j["s"] = s ? nlohmann::ordered_json(*s) : nlohmann::ordered_json(nullptr);
  if (answer) j["answer"] = *answer ? "yes" : "no";
  j["value"] = value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
  j["partition"] = partition;
  j["stats"] = stats;
  if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
  return j;
}

RunReport RunReport::from_json(const nlohmann::ordered_json& j) {
  try {
    if (j.at("schema").get<int>() != kReportSchema) throw InvalidInput("unsupported report schema");
    RunReport r;
    r.input_digest = j.at("input_digest").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.k = j.at("k").get<int>();
    if (!j.at("epsilon").is_null()) r.epsilon = j.at("epsilon").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("s").is_null()) r.s = j.at("s").get<std::int64_t>();
    if (j.contains("answer")) {
      auto a = j.at("answer").get<std::string>();
      if (a != "yes" && a != "no") throw InvalidInput("answer must be yes or no");
      r.answer = a == "yes";
    }
    if (!j.at("value").is_null()) r.value = j.at("value").get<std::string>();
    r.partition = j.at("partition").get<std::vector<int>>();
    for (int p : r.partition)
      if (p < 0 || (r.k > 0 && p >= r.k)) throw InvalidInput("partition index out of range");
    r.stats = j.at("stats");
    if (j.contains("wall_time_ms")) r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

}  // namespace kcut
