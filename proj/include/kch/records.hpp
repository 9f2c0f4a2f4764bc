#pragma once

#include <string>

#include <json.hpp>

namespace kch {

inline constexpr const char* kToolVersion = "kch 0.1.0";

/// Structured CLI result. Serialized as single-line JSON with sorted keys,
/// so identical invocations are byte-identical.
struct ResultRecord {
  std::string command;
  std::string inputs_digest;
  std::string status;  // "ok", "fail", or "error"
  nlohmann::json payload;

  nlohmann::json to_json() const;
  std::string dump() const;
  static ResultRecord from_json(const nlohmann::json& j);
};

/// FNV-1a 64-bit digest over the given strings, rendered as 16 hex digits.
std::string digest(const std::vector<std::string>& parts);

}  // namespace kch
