#pragma once

// Invariant suites behind `commtuples verify`.

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace commtuples {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// suite is one of "oracle", "bounds", "theorem", "all".
std::vector<CheckResult> run_verify_suite(std::string_view suite);

nlohmann::json to_json(const std::vector<CheckResult>& results);

}  // namespace commtuples
