#include "pdmosc/cli.hpp"

#include "pdmosc/oracle.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pdmosc::cli {

using nlohmann::json;

namespace {

double required_A(const RunConfig &config) {
  if (!config.A)
    throw std::invalid_argument(config.command + ": --A is required");
  return *config.A;
}

OscillatorParams model_from(const RunConfig &config) {
  return OscillatorParams(config.omega0, required_A(config), config.b);
}

json order_value(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<double> sample_points(double a, int count) {
  std::vector<double> xs(count);
  const double h = 2.0 * a / (count + 1);
  for (int i = 0; i < count; ++i)
    xs[i] = -a + (i + 1) * h;
  return xs;
}

} // namespace

std::string format_number(double v) {
  if (std::isnan(v))
    return "nan";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

json model_json(const OscillatorParams &p) {
  return {{"omega0", p.omega0()},
          {"A", p.A()},
          {"b", p.b()},
          {"a", p.a()},
          {"a_bar", p.map().a_bar},
          {"b_bar", p.map().b_bar},
          {"c_bar", p.map().c_bar},
          {"B", p.source().B()},
          {"shift_bound", shift_bound(p.omega0(), p.A())}};
}

json spectrum_json(const OscillatorParams &p) {
  json levels = json::array();
  const int count = num_bound_states(p);
  for (int n = 0; n < count; ++n)
    levels.push_back({{"n", n}, {"E", energy(p, n)}});
  return {{"num_states", count}, {"levels", levels}};
}

CommandResult run_solve(const RunConfig &config) {
  const OscillatorParams p = model_from(config);
  if (config.samples < 0)
    throw std::invalid_argument("solve: --samples must be non-negative");
  const int count = num_bound_states(p);
  const auto xs = sample_points(p.a(), config.samples);

  CommandResult result;
  if (config.format == "csv") {
    std::ostringstream out;
    if (config.samples > 0) {
      out << "x";
      for (int n = 0; n < count; ++n)
        out << ",psi" << n;
      out << '\n';
      for (double x : xs) {
        out << format_number(x);
        for (int n = 0; n < count; ++n)
          out << ',' << format_number(wavefunction(p, n, x));
        out << '\n';
      }
    } else {
      out << "n,E\n";
      for (int n = 0; n < count; ++n)
        out << n << ',' << format_number(energy(p, n)) << '\n';
    }
    result.output = out.str();
    return result;
  }

  json doc = {{"command", "solve"},
              {"model", model_json(p)},
              {"spectrum", spectrum_json(p)}};
  if (config.samples > 0) {
    json waves = json::array();
    for (int n = 0; n < count; ++n) {
      std::vector<double> psi;
      psi.reserve(xs.size());
      for (double x : xs)
        psi.push_back(wavefunction(p, n, x));
      waves.push_back({{"n", n}, {"x", xs}, {"psi", psi}});
    }
    doc["wavefunctions"] = waves;
  }
  result.output = doc.dump(2) + "\n";
  return result;
}

CommandResult run_verify(const RunConfig &config) {
  const OscillatorParams p = model_from(config);
  const int count = num_bound_states(p);
  if (count == 0)
    throw std::invalid_argument("verify: the model has no bound states");
  const SpectrumReport report = solve_pdm_numeric(p, count, config.grid, true);
  const bool passed = report.max_rel_err() <= kVerifyTolerance;

  CommandResult result;
  result.exit_code = passed ? kSuccess : kVerificationFailure;
  if (config.format == "csv") {
    std::ostringstream out;
    out << "n,analytic,numeric,coarse,fine,rel_err,order\n";
    for (int n = 0; n < count; ++n)
      out << n << ',' << format_number(report.analytic[n]) << ','
          << format_number(report.numeric[n]) << ','
          << format_number(report.coarse[n]) << ','
          << format_number(report.fine[n]) << ','
          << format_number(report.rel_err[n]) << ','
          << format_number(report.order[n]) << '\n';
    result.output = out.str();
    return result;
  }

  json levels = json::array();
  for (int n = 0; n < count; ++n)
    levels.push_back({{"n", n},
                      {"analytic", report.analytic[n]},
                      {"numeric", report.numeric[n]},
                      {"coarse", report.coarse[n]},
                      {"fine", report.fine[n]},
                      {"rel_err", report.rel_err[n]},
                      {"order", order_value(report.order[n])}});
  const json doc = {{"command", "verify"},
                    {"model", model_json(p)},
                    {"grid",
                     {{"lo", report.lo},
                      {"hi", report.hi},
                      {"n_coarse", report.n_coarse},
                      {"n_fine", report.n_fine}}},
                    {"levels", levels},
                    {"max_rel_err", report.max_rel_err()},
                    {"tolerance", kVerifyTolerance},
                    {"passed", passed}};
  result.output = doc.dump(2) + "\n";
  return result;
}

CommandResult run_jafarov(const RunConfig &config) {
  if (!config.l)
    throw std::invalid_argument("jafarov: --l is required");
  const int l = *config.l;
  const JafarovModel model = jafarov_case(config.omega0, l);

  RunConfig solve_config = config;
  solve_config.command = "solve";
  solve_config.A = static_cast<double>(l);
  solve_config.b = 0.0;
  solve_config.samples = 0;
  solve_config.format = "json";
  const json solved = json::parse(run_solve(solve_config).output);

  const OscillatorParams p(config.omega0, static_cast<double>(l), 0.0);
  const json model_block = model_json(p);
  const json spectrum_block = spectrum_json(p);
  const bool matches = model_block.dump() == solved["model"].dump() &&
                       spectrum_block.dump() == solved["spectrum"].dump();

  double max_dev = 0.0;
  json closed = json::array();
  for (const auto &state : model.states) {
    const double general = energy(p, state.n);
    max_dev = std::max(max_dev, std::abs(state.energy - general) / std::abs(general));
    closed.push_back({{"n", state.n}, {"E", state.energy}});
  }
  const bool consistent = matches && max_dev <= 1e-12 &&
                          static_cast<int>(model.states.size()) ==
                              spectrum_block["num_states"].get<int>();

  CommandResult result;
  result.exit_code = consistent ? kSuccess : kVerificationFailure;
  if (config.format == "csv") {
    std::ostringstream out;
    out << "n,E,E_closed_form\n";
    for (const auto &state : model.states)
      out << state.n << ',' << format_number(energy(p, state.n)) << ','
          << format_number(state.energy) << '\n';
    result.output = out.str();
    return result;
  }
  const json doc = {{"command", "jafarov"},
                    {"l", l},
                    {"a_l", model.a},
                    {"model", model_block},
                    {"spectrum", spectrum_block},
                    {"closed_form_levels", closed},
                    {"max_rel_dev", max_dev},
                    {"matches_solve", matches}};
  result.output = doc.dump(2) + "\n";
  return result;
}

std::vector<ScanRow> scan_rows(const RunConfig &config) {
  if (!config.from || !config.to)
    throw std::invalid_argument("scan: --from and --to are required");
  const double from = *config.from;
  const double to = *config.to;
  if (!(to >= from))
    throw std::invalid_argument("scan: empty range (--to < --from)");
  int count = 1;
  if (to > from) {
    if (!(config.step > 0.0))
      throw std::invalid_argument("scan: --step must be positive");
    count = static_cast<int>(std::floor((to - from) / config.step + 1e-9)) + 1;
  }
  if (config.scan_param != "A" && config.scan_param != "b")
    throw std::invalid_argument("scan: --param must be A or b");

  std::vector<ScanRow> rows(count);
  for (int i = 0; i < count; ++i) {
    const double value = from + i * config.step;
    const OscillatorParams p =
        config.scan_param == "A"
            ? OscillatorParams(config.omega0, value, config.b)
            : OscillatorParams(config.omega0, required_A(config), value);
    ScanRow &row = rows[i];
    row.param = value;
    row.a = p.a();
    for (int n = 0; n < num_bound_states(p); ++n)
      row.energies.push_back(energy(p, n));
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow> &rows) {
  std::size_t width = 0;
  for (const auto &row : rows)
    width = std::max(width, row.energies.size());
  std::ostringstream out;
  out << "param,a,num_states";
  for (std::size_t n = 0; n < width; ++n)
    out << ",E" << n;
  out << '\n';
  for (const auto &row : rows) {
    out << format_number(row.param) << ',' << format_number(row.a) << ','
        << row.energies.size();
    for (std::size_t n = 0; n < width; ++n) {
      out << ',';
      if (n < row.energies.size())
        out << format_number(row.energies[n]);
    }
    out << '\n';
  }
  return out.str();
}

CommandResult run_scan(const RunConfig &config) {
  const auto rows = scan_rows(config);
  CommandResult result;
  if (config.format == "json") {
    json list = json::array();
    for (const auto &row : rows)
      list.push_back({{"param", row.param},
                      {"a", row.a},
                      {"num_states", row.energies.size()},
                      {"energies", row.energies}});
    result.output =
        json{{"command", "scan"}, {"param", config.scan_param}, {"rows", list}}
            .dump(2) +
        "\n";
  } else {
    result.output = scan_csv(rows);
  }
  return result;
}

CommandResult run_command(const RunConfig &config) {
  try {
    if (config.format != "json" && config.format != "csv")
      throw std::invalid_argument("--format must be json or csv");
    if (config.command == "solve")
      return run_solve(config);
    if (config.command == "verify")
      return run_verify(config);
    if (config.command == "jafarov")
      return run_jafarov(config);
    if (config.command == "scan")
      return run_scan(config);
    throw std::invalid_argument("unknown command '" + config.command + "'");
  } catch (const ConvergenceError &e) {
    return {kNumericalFailure, "", e.what()};
  } catch (const std::logic_error &e) {
    // invalid_argument, domain_error, out_of_range
    return {kConfigError, "", e.what()};
  }
}

} // namespace pdmosc::cli
