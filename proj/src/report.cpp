#include "rwl/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace rwl {

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input;
  j["method"] = r.method;
  j["value"] = r.value;
  j["params"] = r.params;
  j["elapsed_ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
  j["status"] = r.status;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.input = j.at("input").get<std::string>();
  r.method = j.at("method").get<std::string>();
  r.value = j.at("value").get<std::string>();
  r.params = j.at("params");
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.status = j.at("status").get<std::string>();
  if (j.contains("details")) r.details = j.at("details");
  return r;
}

nlohmann::ordered_json to_json(const VerificationResult& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["passed"] = r.passed;
  j["counterexample"] = r.counterexample ? nlohmann::ordered_json(*r.counterexample) : nullptr;
  j["terms"] = r.terms;
  if (!r.samples.empty()) {
    auto& arr = j["samples"] = nlohmann::ordered_json::array();
    for (const auto& s : r.samples) {
      nlohmann::ordered_json o;
      o["n"] = s.n;
      o["label"] = s.label;
      o["exact"] = s.exact;
      o["numeric"] = round15(s.numeric);
      o["residual"] = round15(s.residual);
      if (!s.high_precision.empty()) o["ratio_30"] = s.high_precision;
      arr.push_back(std::move(o));
    }
    j["max_residual"] = round15(r.max_residual);
  }
  return j;
}

}  // namespace rwl
