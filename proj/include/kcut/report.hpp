#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace kcut {

inline constexpr int kReportSchema = 1;

struct RunReport {
  std::string input_digest;  // FNV-1a 64 of the input bytes, hex
  std::string mode;
  int k = 0;
  std::optional<std::string> epsilon;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> s;
  std::optional<bool> answer;       // exact mode decisions
  std::optional<std::string> value; // rational, canonical text
  std::vector<int> partition;       // part index per vertex
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  std::optional<double> wall_time_ms;

  nlohmann::ordered_json to_json() const;
  static RunReport from_json(const nlohmann::ordered_json& j);
};

std::string fnv1a_hex(const std::string& bytes);

}  // namespace kcut
