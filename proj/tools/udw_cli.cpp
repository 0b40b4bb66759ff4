// Command-line front end for steady-state sweeps, dephasing dynamics,
// Stirling-cycle scans, steering heatmaps, figure presets, and the
// self-validation suite.
//
// Exit codes: 0 success, 1 invalid configuration, 2 I/O failure,
// 3 internal validation failure.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "udw/udw.hpp"

namespace {

struct SeriesParseError : udw::ConfigError {
  using udw::ConfigError::ConfigError;
};

// One --series value: comma-separated k=v bindings, plus the special keys
// "label" (column name) and "quantity" (per-series override).
udw::SeriesSpec parse_series(const std::string& text) {
  udw::SeriesSpec series;
  std::string item;
  std::stringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw SeriesParseError("series binding '" + item +
                             "' is not of the form key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "label") {
      series.label = value;
      continue;
    }
    if (key == "quantity") {
      const auto q = udw::parse_quantity(value);
      if (!q) {
        throw SeriesParseError("unknown quantity '" + value + "' in series");
      }
      series.quantity = *q;
      continue;
    }
    try {
      std::size_t used = 0;
      const double parsed = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      series.bind[key] = parsed;
    } catch (const std::exception&) {
      throw SeriesParseError("cannot parse series value '" + item + "'");
    }
  }
  if (series.label.empty() && !series.bind.empty() && !series.quantity) {
    series.label = udw::detail::format_binding(series.bind);
  }
  return series;
}

udw::Quantity require_quantity(const std::string& name) {
  const auto q = udw::parse_quantity(name);
  if (!q) throw udw::ConfigError("unknown quantity '" + name + "'");
  return *q;
}

udw::Axis require_axis(const std::string& name) {
  const auto a = udw::parse_axis(name);
  if (!a) throw udw::ConfigError("unknown axis '" + name + "'");
  return *a;
}

udw::OutputFormat require_format(const std::string& name) {
  const auto f = udw::parse_format(name);
  if (!f) throw udw::ConfigError("unknown format '" + name + "'");
  return *f;
}

struct SweepFlags {
  std::string quantity = "steering";
  std::string axis = "temperature";
  std::vector<double> axis_range;  // min max points
  std::vector<std::string> series;
  std::string output_path;
  std::string format = "csv";
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& flags,
                     const std::string& default_axis) {
  flags.axis = default_axis;
  cmd->add_option("--quantity", flags.quantity,
                  "quantity to evaluate (steering, steering-ba, asymmetry, "
                  "eof, concurrence, gqd, coherence, entropy, energy, "
                  "cycle-heats, work, efficiency)")
      ->capture_default_str();
  cmd->add_option("--axis", flags.axis,
                  "swept axis (temperature, omega, delta0, time, omega_b)")
      ->capture_default_str();
  cmd->add_option("--axis-range", flags.axis_range,
                  "axis range: MIN MAX POINTS")
      ->expected(3)
      ->required();
  cmd->add_option("--series", flags.series,
                  "one curve: comma-separated key=value bindings; special "
                  "keys: label=..., quantity=... (repeatable)")
      ->required();
  cmd->add_option("--output-path", flags.output_path, "output file path")
      ->required();
  cmd->add_option("--format", flags.format, "output format (csv, json)")
      ->capture_default_str();
  cmd->set_config("--config", "",
                  "key=value config file; command-line flags win");
}

udw::SweepConfig build_sweep_config(const SweepFlags& flags) {
  udw::SweepConfig cfg;
  cfg.quantity = require_quantity(flags.quantity);
  cfg.axis = require_axis(flags.axis);
  cfg.range.min = flags.axis_range[0];
  cfg.range.max = flags.axis_range[1];
  const double points = flags.axis_range[2];
  if (points < 2 || points != static_cast<int>(points)) {
    throw udw::ConfigError("axis-range points must be an integer >= 2");
  }
  cfg.range.points = static_cast<int>(points);
  for (const auto& text : flags.series) {
    cfg.series.push_back(parse_series(text));
  }
  cfg.output_path = flags.output_path;
  cfg.format = require_format(flags.format);
  return cfg;
}

void report_written(const udw::Dataset& data, const udw::SweepConfig& cfg) {
  std::cout << "wrote " << cfg.output_path << " (" << data.rows() << " rows x "
            << data.columns.size() << " columns)";
  if (cfg.format == udw::OutputFormat::Csv) {
    std::cout << "; metadata in " << cfg.output_path << ".meta.json";
  }
  std::cout << "\n";
}

int run_sweep_command(const SweepFlags& flags,
                      const char* enforce_cycle_or_steady) {
  udw::SweepConfig cfg = build_sweep_config(flags);
  const std::string mode = enforce_cycle_or_steady;
  if (mode == "dynamics" && cfg.axis != udw::Axis::Time) {
    throw udw::ConfigError("dynamics requires --axis time");
  }
  if (mode == "cycle" && !udw::is_cycle_quantity(cfg.quantity)) {
    throw udw::ConfigError(
        "cycle requires a cycle quantity (cycle-heats, work, efficiency)");
  }
  udw::RunMetadata meta;
  const udw::Dataset data = udw::run_sweep(cfg, meta);
  udw::emit(data, meta, cfg.format, cfg.output_path);
  report_written(data, cfg);
  return 0;
}

int run_heatmap_command(const std::string& quantity, const std::string& axis1,
                        const std::string& axis2,
                        const std::vector<double>& range1,
                        const std::vector<double>& range2,
                        const std::string& fixed,
                        const std::string& output_path,
                        const std::string& format) {
  udw::HeatmapConfig cfg;
  cfg.quantity = require_quantity(quantity);
  cfg.axis1 = require_axis(axis1);
  cfg.axis2 = require_axis(axis2);
  const auto to_range = [](const std::vector<double>& r) {
    if (r[2] < 2 || r[2] != static_cast<int>(r[2])) {
      throw udw::ConfigError("range points must be an integer >= 2");
    }
    return udw::AxisRange{r[0], r[1], static_cast<int>(r[2])};
  };
  cfg.range1 = to_range(range1);
  cfg.range2 = to_range(range2);
  cfg.fixed = parse_series(fixed);
  cfg.output_path = output_path;
  cfg.format = require_format(format);

  udw::RunMetadata meta;
  const udw::Dataset data = udw::run_heatmap(cfg, meta);
  udw::emit(data, meta, cfg.format, cfg.output_path);
  std::cout << "wrote " << cfg.output_path << " (" << data.rows()
            << " rows x " << data.columns.size() << " columns)";
  if (cfg.format == udw::OutputFormat::Csv) {
    std::cout << "; metadata in " << cfg.output_path << ".meta.json";
  }
  std::cout << "\n";
  return 0;
}

int run_figure_command(const std::string& id, std::string output_path,
                       const std::string& format) {
  udw::FigurePreset preset = udw::figure_preset(id);
  const udw::OutputFormat fmt = require_format(format);
  if (output_path.empty()) {
    output_path = "fig" + id + "." + udw::to_string(fmt);
  }

  udw::RunMetadata meta;
  meta.defaults_filled = preset.defaults_filled;
  meta.parameters.emplace_back("figure", id);

  udw::Dataset data;
  if (auto* sweep = std::get_if<udw::SweepConfig>(&preset.config)) {
    sweep->output_path = output_path;
    sweep->format = fmt;
    data = udw::run_sweep(*sweep, meta);
  } else {
    auto& heatmap = std::get<udw::HeatmapConfig>(preset.config);
    heatmap.output_path = output_path;
    heatmap.format = fmt;
    data = udw::run_heatmap(heatmap, meta);
  }
  udw::emit(data, meta, fmt, output_path);
  std::cout << "wrote " << output_path << " (" << data.rows() << " rows x "
            << data.columns.size() << " columns)";
  if (fmt == udw::OutputFormat::Csv) {
    std::cout << "; metadata in " << output_path << ".meta.json";
  }
  std::cout << "\n";
  return 0;
}

int run_validate_command() {
  const auto results = udw::run_validation_suite();
  bool all_pass = true;
  for (const auto& check : results) {
    all_pass = all_pass && check.pass;
    std::printf("[%s] %s: %s (%.2f s)\n", check.pass ? "ok" : "FAIL",
                check.name.c_str(), check.detail.c_str(), check.seconds);
  }
  if (!all_pass) {
    std::cout << "validation FAILED\n";
    return 3;
  }
  std::cout << "validation passed (" << results.size() << " checks)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"X-state correlation and thermodynamics sweeps for uniformly "
               "accelerated detector pairs"};
  app.set_version_flag("--version",
                       std::string(udw::kToolName) + " " + udw::kVersion);
  app.require_subcommand(1);

  SweepFlags sweep_flags, dynamics_flags, cycle_flags;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "sweep a quantity along one axis");
  add_sweep_flags(sweep_cmd, sweep_flags, "temperature");
  auto* dynamics_cmd = app.add_subcommand(
      "dynamics", "sweep a quantity along the time axis under dephasing");
  add_sweep_flags(dynamics_cmd, dynamics_flags, "time");
  auto* cycle_cmd = app.add_subcommand(
      "cycle", "sweep Stirling-cycle heats, work, or efficiency");
  cycle_flags.quantity = "cycle-heats";
  add_sweep_flags(cycle_cmd, cycle_flags, "omega_b");

  std::string hm_quantity = "steering", hm_axis1 = "delta0",
              hm_axis2 = "temperature";
  std::vector<double> hm_range1, hm_range2;
  std::string hm_fixed, hm_output, hm_format = "csv";
  auto* heatmap_cmd =
      app.add_subcommand("heatmap", "two-axis grid of a steady-state quantity");
  heatmap_cmd->add_option("--quantity", hm_quantity)->capture_default_str();
  heatmap_cmd->add_option("--axis1", hm_axis1, "slow axis")
      ->capture_default_str();
  heatmap_cmd->add_option("--axis2", hm_axis2, "fast axis")
      ->capture_default_str();
  heatmap_cmd->add_option("--range1", hm_range1, "slow axis: MIN MAX POINTS")
      ->expected(3)
      ->required();
  heatmap_cmd->add_option("--range2", hm_range2, "fast axis: MIN MAX POINTS")
      ->expected(3)
      ->required();
  heatmap_cmd
      ->add_option("--fixed", hm_fixed,
                   "fixed bindings, comma-separated key=value")
      ->required();
  heatmap_cmd->add_option("--output-path", hm_output)->required();
  heatmap_cmd->add_option("--format", hm_format)->capture_default_str();
  heatmap_cmd->set_config("--config", "",
                          "key=value config file; command-line flags win");

  std::string fig_id, fig_output, fig_format = "csv";
  auto* figure_cmd =
      app.add_subcommand("figure", "regenerate a figure-family dataset");
  figure_cmd->add_option("--id", fig_id, "figure identifier, e.g. 7 or 11a")
      ->required();
  figure_cmd->add_option("--output-path", fig_output,
                         "defaults to fig<id>.<format>");
  figure_cmd->add_option("--format", fig_format)->capture_default_str();

  auto* validate_cmd = app.add_subcommand(
      "validate", "run the oracle validation suite and report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sweep_cmd->parsed()) return run_sweep_command(sweep_flags, "sweep");
    if (dynamics_cmd->parsed())
      return run_sweep_command(dynamics_flags, "dynamics");
    if (cycle_cmd->parsed()) return run_sweep_command(cycle_flags, "cycle");
    if (heatmap_cmd->parsed()) {
      return run_heatmap_command(hm_quantity, hm_axis1, hm_axis2, hm_range1,
                                 hm_range2, hm_fixed, hm_output, hm_format);
    }
    if (figure_cmd->parsed()) {
      return run_figure_command(fig_id, fig_output, fig_format);
    }
    if (validate_cmd->parsed()) return run_validate_command();
  } catch (const udw::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const udw::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
