#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rrc/check.hpp"
#include "rrc/functions.hpp"
#include "rrc/partition.hpp"

namespace rrc::cli {

struct RunConfig {
  std::int64_t precision = 250;
  std::optional<std::string> json_path;  // "-" writes to stdout
  bool parallel = false;
  bool timing = false;  // include elapsed_ms in JSON
};

/// Default precision: RRC_PRECISION when set and valid, otherwise 250.
std::int64_t default_precision();

struct Report {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CheckResult> checks;
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::string> lines;  // extra human-readable output
  double elapsed_ms = 0;

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
  nlohmann::json to_json(bool with_timing) const;
  std::string to_text() const;
};

Report cmd_verify_relations(const RunConfig& cfg, const std::optional<std::string>& table_path);
Report cmd_verify_modeq(const RunConfig& cfg);
Report cmd_congruence(CongruenceTarget target, int n, int count, const RunConfig& cfg);
Report cmd_a1(std::int64_t m, const RunConfig& cfg);
Report cmd_eta_check(const std::string& spec, const RunConfig& cfg);
Report cmd_theorem8(int n_max, std::int64_t window, std::int64_t direct_window, int random,
                    const RunConfig& cfg, const std::optional<std::string>& dump_dir);
Report cmd_skeleton(int n_max, const RunConfig& cfg);
Report cmd_series(NamedFunction f, const RunConfig& cfg);

/// Parses arguments, runs one command and writes its report. Returns the
/// process exit code: 0 all checks pass, 1 some check fails, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rrc::cli
