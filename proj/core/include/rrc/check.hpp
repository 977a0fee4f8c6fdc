#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace rrc {

enum class CheckStatus { Pass, Fail, Skipped };

/// Outcome of one verification. `window` is the exponent range that was
/// compared, [window_lo, window_hi).
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string details;
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  std::optional<std::int64_t> mismatch;  // first differing exponent, if any

  bool passed() const { return status == CheckStatus::Pass; }
};

/// Thrown by callers that want a failed check to be an error.
class VerificationFailed : public std::runtime_error {
 public:
  explicit VerificationFailed(const CheckResult& r)
      : std::runtime_error(r.name + ": " + r.details), result(r) {}
  CheckResult result;
};

inline const CheckResult& require(const CheckResult& r) {
  if (r.status == CheckStatus::Fail) throw VerificationFailed(r);
  return r;
}

std::string to_string(CheckStatus s);
nlohmann::json check_to_json(const CheckResult& r);

}  // namespace rrc
