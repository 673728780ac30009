#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fburgers/diagnostics.hpp"
#include "fburgers/dynamics.hpp"
#include "fburgers/oracles.hpp"

namespace fburgers {

struct RunConfig {
    int n = 256;
    SimParams params;
    InitialCondition ic = InitialCondition::neg_sine();
    double snapshot_every = 0.1;
    std::filesystem::path output_dir = "output";
    Thresholds thresholds;
    bool detect_blowup = true;

    /// Throws Error(Usage) naming the offending key.
    void validate() const;
};

enum class RunStatus { completed, blowup_detected, resolution_lost, numeric_failure };

struct Snapshot {
    double t;
    NodalField field;
};

struct RunResult {
    std::vector<DiagnosticsRecord> records;
    std::vector<Snapshot> snapshots;  // at integer multiples of snapshot_every
    NodalField final_state;           // last finite state, whatever the status
    BlowupReport report;
    RunStatus status = RunStatus::completed;
    std::vector<std::string> warnings;
    std::string failure_message;  // set for numeric_failure

    std::size_t step_count() const noexcept { return records.empty() ? 0 : records.size() - 1; }
};

/// Parses command-line arguments (argv[0] is the program name). Flags win
/// over values read from `--config <file>`. Throws Error(Usage) with the
/// offending key on any invalid or unknown input; throws HelpRequested for
/// --help.
RunConfig parse_config(int argc, const char* const* argv);

/// Applies one `key=value` pair using the config-file spelling of the keys
/// (the long flag names without dashes, e.g. "t-final").
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

struct HelpRequested {
    std::string text;
};

std::string usage_text();

RunResult run_simulation(const RunConfig& cfg);

/// diagnostics.csv, snapshot_<t>.csv per snapshot, final.csv (the last
/// finite state) and report.txt under cfg.output_dir. Throws Error(Io) if the directory cannot be written.
void write_outputs(const RunResult& result, const RunConfig& cfg);

/// Decimal form (15 significant digits) used in snapshot file names.
std::string format_time(double t);

/// Process exit code for a finished run: 0, 2, 3 or 4.
int exit_code(RunStatus status) noexcept;

const char* to_string(RunStatus status) noexcept;
const char* to_string(DetectionCause cause) noexcept;

}  // namespace fburgers
