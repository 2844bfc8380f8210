#pragma once

#include "pdmosc/oscillator.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pdmosc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kVerificationFailure = 3,
  kNumericalFailure = 4,
};

struct RunConfig {
  std::string command;
  double omega0 = 1.0;
  std::optional<double> A;
  std::optional<int> l;
  double b = 0.0;
  int grid = 2000;
  int quad = 400;
  std::string format = "json";
  std::string out;
  int samples = 0;
  // scan
  std::string scan_param = "A";
  std::optional<double> from;
  std::optional<double> to;
  double step = 0.25;
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string output;
  std::string error;
};

/// Relative error above which `verify` fails.
inline constexpr double kVerifyTolerance = 1e-5;

/// 17 significant digits, '.' decimal point regardless of locale.
std::string format_number(double v);

/// "model" and "spectrum" blocks shared by solve and jafarov.
nlohmann::json model_json(const OscillatorParams &p);
nlohmann::json spectrum_json(const OscillatorParams &p);

/// CSV table `param,a,num_states,E0,E1,...`, one row per parameter value.
struct ScanRow {
  double param;
  double a;
  std::vector<double> energies;
};
std::vector<ScanRow> scan_rows(const RunConfig &config);
std::string scan_csv(const std::vector<ScanRow> &rows);

CommandResult run_solve(const RunConfig &config);
CommandResult run_verify(const RunConfig &config);
CommandResult run_jafarov(const RunConfig &config);
CommandResult run_scan(const RunConfig &config);

/// Dispatches on config.command and maps exceptions onto exit codes.
CommandResult run_command(const RunConfig &config);

} // namespace pdmosc::cli
