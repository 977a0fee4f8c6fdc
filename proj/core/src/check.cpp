#include "rrc/check.hpp"

namespace rrc {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

nlohmann::json check_to_json(const CheckResult& r) {
  nlohmann::json j = {{"name", r.name},
                      {"status", to_string(r.status)},
                      {"details", r.details},
                      {"window", {r.window_lo, r.window_hi}}};
  if (r.mismatch) j["first_mismatch"] = *r.mismatch;
  return j;
}

}  // namespace rrc
