#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

namespace spehlab {

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

/// A failing instance, rendered in canonical text form.
struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

/// Outcome of one verifier run. `skipped` means a budget refusal, which is
/// always reported and never folded into `pass`.
struct VerificationReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::pass;
  std::optional<Counterexample> counterexample;
  nlohmann::json details;  // verifier-specific extras (term counts etc.)

  bool passed() const { return status == Status::pass; }
};

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j{{"suite", r.suite}, {"params", r.params}, {"status", to_string(r.status)}};
  if (r.counterexample) {
    j["counterexample"] = {{"input", r.counterexample->input},
                           {"expected", r.counterexample->expected},
                           {"actual", r.counterexample->actual}};
  }
  if (!r.details.is_null()) j["details"] = r.details;
  return j;
}

}  // namespace spehlab
