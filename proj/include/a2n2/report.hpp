#pragma once

// Orchestration layer behind the command-line tool: run configuration,
// the four pipeline commands (verify, spectrum, bethe, completeness), and
// deterministic JSON reports. Reports carry no timestamps and use sorted
// object keys, so identical configurations produce byte-identical output.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "a2n2/model.hpp"

namespace a2n2 {

// Exit-code contract shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;    // failed identity / reconciliation
inline constexpr int kExitConfig = 2;  // bad configuration
inline constexpr int kExitCap = 3;     // resource cap exceeded

struct RunConfig {
  int n = 1;
  int N = 2;
  Cx eta = Cx(0.0, -0.1);
  BoundarySet set = BoundarySet::I;

  int starts = 2000;              // multi-start budget per cardinality vector
  std::uint64_t seed = 20240901;  // RNG seed for verification points / starts
  double tol = 1e-10;             // Newton residual tolerance
  Cx probe = Cx(0.37, 0.21);      // spectral probe for eigenvalue checks

  std::vector<int> m;             // cardinalities for `bethe --m`
  bool all = false;               // `bethe --all`
  bool check_tables = false;      // `bethe --check-tables`
  std::string out;                // JSON output path ("" = stdout)
  std::string csv;                // optional CSV path for solution tables

  ModelParams params() const;
};

// Sweep ranges for the completeness command.
struct SweepRange {
  int n_lo = 1, n_hi = 1;
  int N_lo = 2, N_hi = 2;
  std::vector<BoundarySet> sets = {BoundarySet::I, BoundarySet::II};
};

struct CommandResult {
  int exit_code = kExitPass;
  nlohmann::json report;
  std::string table;  // aligned human-readable rendering
};

// Complex values serialize as two-element arrays [re, im].
nlohmann::json cx_json(Cx z);
Cx cx_from_json(const nlohmann::json& j);

// "re,im" (or a bare real part) -> complex; throws ConfigError otherwise.
Cx parse_complex_pair(const std::string& s);

// Overlays configuration-file values onto cfg; unknown keys are rejected.
void apply_config_json(RunConfig& cfg, const nlohmann::json& j);

// Stable rendering: 2-space indent, sorted keys, trailing newline.
std::string render_json(const nlohmann::json& j);

CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_bethe(const RunConfig& cfg);
CommandResult cmd_completeness(const RunConfig& cfg, const SweepRange& range);

}  // namespace a2n2
