#include "kch/records.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <vector>

namespace kch {

nlohmann::json ResultRecord::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs_digest;
  j["status"] = status;
  j["payload"] = payload;
  j["tool_version"] = kToolVersion;
  return j;
}

std::string ResultRecord::dump() const { return to_json().dump(); }

ResultRecord ResultRecord::from_json(const nlohmann::json& j) {
  ResultRecord r;
  r.command = j.at("command").get<std::string>();
  r.inputs_digest = j.at("inputs").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.payload = j.at("payload");
  return r;
}

std::string digest(const std::vector<std::string>& parts) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  for (const auto& p : parts) {
    for (unsigned char c : p) mix(c);
    mix(0x1f);  // separator so ["ab","c"] != ["a","bc"]
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace kch
