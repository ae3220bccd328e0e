#pragma once

#include <optional>
#include <ostream>
#include <string_view>

#include "config.hpp"
#include "output.hpp"

namespace mevac::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitDegenerateBoost = 3,
  kExitVerificationFailed = 4,
  kExitEmptyModeSet = 5,
};

struct Options {
  Format format = Format::csv;
  unsigned workers = 1;
};

/// --beta and --cutoff flags; flag values win over the file.
void apply_overrides(RunConfig& cfg, std::optional<double> beta, std::optional<double> cutoff);

int cmd_transform(const RunConfig& cfg, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_expand_check(const RunConfig& cfg, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_velocity(const RunConfig& cfg, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_vacuum_sweep(const RunConfig& cfg, const Options& opts, std::ostream& out, std::ostream& err);

/// Dispatches by subcommand name ("transform", "expand-check", "velocity",
/// "vacuum-sweep") and maps library errors onto exit codes. Data goes to
/// `out` only on exit codes 0 and 4; diagnostics go to `err`.
int run_command(std::string_view name, const RunConfig& cfg, const Options& opts, std::ostream& out,
                std::ostream& err);

}  // namespace mevac::cli
