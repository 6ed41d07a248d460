#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ew/diagnostics.hpp"
#include "ew/run_config.hpp"

namespace ew::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Parses `key=value` lines (`#` starts a comment). `problem` is required and
/// seeds every other field from default_run. Throws ConfigError carrying the
/// offending line for unknown keys, duplicates, malformed or non-numeric values.
///
/// Keys: problem a b N dt T mu roots c x0 U0 d report_every report_times
/// snapshots out_diag out_snap. Lists are comma separated.
RunConfig parse_config(std::string_view text);

/// Text that parse_config maps back to an equal RunConfig.
std::string emit_config(const RunConfig& config);

/// Locale-independent, 10 significant digits.
std::string format_number(double v);

/// Step indices at which rows are reported, snapshots taken.
std::vector<std::size_t> report_steps(const RunConfig& config);
std::vector<std::size_t> snapshot_steps(const RunConfig& config);

/// Snapshot path for time t: "<out_snap>_t<t>.csv".
std::string snapshot_path(const std::string& stem, double t);

struct RunOutcome {
  int status = kExitOk;
  std::vector<DiagnosticsRow> rows;
  std::string error;
};

/// Runs one configuration to T. Writes the diagnostics CSV and snapshot files
/// when their paths are set and a summary table to `out`. Failures are
/// reported through the status; the CSV then ends in a `# error:` line.
RunOutcome run(const RunConfig& config, std::ostream& out);

/// Command-line front end: `run <cfg>`, `stability [...]`, `sweep <cfg>...`.
int main_entry(int argc, char** argv);

}  // namespace ew::cli
