// Named pass/fail checks with JSON details, shared by every verifier.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace grpd {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  Json details = Json::object();
};

inline Check make_check(std::string name, bool pass, Json details = Json::object()) {
  return Check{std::move(name), pass, std::move(details)};
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

inline void append(std::vector<Check>& dst, std::vector<Check> src) {
  for (auto& c : src) dst.push_back(std::move(c));
}

inline Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = c.pass ? "pass" : "fail";
  j["details"] = c.details;
  return j;
}

inline Json to_json(const std::vector<Check>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back(to_json(c));
  return a;
}

}  // namespace grpd
