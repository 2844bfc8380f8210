// Command-line front end for the confined position-dependent-mass oscillator.
//
//   pdmosc solve   --omega0 1 --A 3 --b 0.1 [--samples 101]
//   pdmosc verify  --omega0 1 --A 3 --grid 2000
//   pdmosc jafarov --omega0 1 --l 3
//   pdmosc scan    --param A --from 1.5 --to 3.5 --step 0.25

#include "pdmosc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char **argv) {
  using pdmosc::cli::RunConfig;

  CLI::App app{"Exact spectra of the confined position-dependent-mass "
               "(shifted) harmonic oscillator"};
  app.require_subcommand(1);

  RunConfig config;
  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--omega0", config.omega0, "Angular frequency omega0 > 0");
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", config.out, "Write output to this path");
  };

  auto *solve = app.add_subcommand("solve", "Closed-form spectrum and wavefunctions");
  add_common(solve);
  solve->add_option("--A", config.A, "Depth parameter A > 1");
  solve->add_option("--b", config.b, "Shift parameter b");
  solve->add_option("--samples", config.samples,
                    "Number of interior wavefunction samples");

  auto *verify = app.add_subcommand("verify", "Compare against the finite-difference oracle");
  add_common(verify);
  verify->add_option("--A", config.A, "Depth parameter A > 1");
  verify->add_option("--b", config.b, "Shift parameter b");
  verify->add_option("--grid", config.grid, "Coarse grid size (fine grid is twice this)");

  auto *jafarov = app.add_subcommand("jafarov", "Quantized-confinement special case A = l");
  add_common(jafarov);
  jafarov->add_option("--l", config.l, "Integer l >= 2");

  auto *scan = app.add_subcommand("scan", "Tabulate spectra over a parameter range");
  add_common(scan);
  scan->add_option("--param", config.scan_param, "Scanned parameter (A or b)");
  scan->add_option("--from", config.from, "First parameter value");
  scan->add_option("--to", config.to, "Last parameter value");
  scan->add_option("--step", config.step, "Parameter step");
  scan->add_option("--A", config.A, "Fixed A for b scans");
  scan->add_option("--b", config.b, "Fixed b for A scans");
  config.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pdmosc::cli::kConfigError;
  }
  if (scan->parsed() && scan->count("--format") == 0)
    config.format = "csv";
  for (auto *sub : app.get_subcommands())
    config.command = sub->get_name();

  const auto result = pdmosc::cli::run_command(config);
  if (!result.error.empty())
    std::cerr << "error: " << result.error << '\n';
  if (!result.output.empty()) {
    if (config.out.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream file(config.out);
      if (!file) {
        std::cerr << "error: cannot open " << config.out << '\n';
        return pdmosc::cli::kConfigError;
      }
      file << result.output;
    }
  }
  return result.exit_code;
}
