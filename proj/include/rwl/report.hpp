#pragma once

#include <string>

#include <json.hpp>

#include "rwl/identities.hpp"

namespace rwl {

// Machine-readable result of one CLI action. `value` is always an exact
// decimal string; floating point only appears inside `details` for numeric
// residuals, rounded to 15 significant digits.
struct Report {
  std::string input;
  std::string method;
  std::string value;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  double elapsed_ms = 0;
  std::string status;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);

// Rounds to 15 significant digits so serialized floats never carry more.
double round15(double v);

nlohmann::ordered_json to_json(const VerificationResult& r);

}  // namespace rwl
