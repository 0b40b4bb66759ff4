#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "udw/sweep.hpp"

// Figure-family presets: parameter bindings taken from the figure captions,
// with axis ranges and any caption-omitted values filled from documented
// defaults (and flagged as such in the run metadata).

namespace udw {

struct UnknownFigureError : ConfigError {
  explicit UnknownFigureError(const std::string& id)
      : ConfigError("unknown figure id '" + id + "'") {}
};

struct FigurePreset {
  std::string id;
  std::variant<SweepConfig, HeatmapConfig> config;
  std::vector<std::string> defaults_filled;
};

inline const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids = {
      "1a",  "1b",  "1c",  "2a",  "2b",  "2c",  "3a",  "3b",
      "4a",  "4b",  "5a",  "5b",  "6a",  "6b",  "6c",  "7",
      "8",   "9",   "11a", "11b", "12a", "12b", "13a", "13b",
      "14a", "14b", "15a", "15b", "16a", "16b", "17a", "17b"};
  return ids;
}

namespace detail {

constexpr int kPresetPoints = 200;
constexpr int kHeatmapPoints = 101;

using Bind = std::map<std::string, double>;

inline SeriesSpec series(std::string label, Bind bind,
                         std::optional<Quantity> quantity = std::nullopt) {
  SeriesSpec s;
  s.label = std::move(label);
  s.bind = std::move(bind);
  s.quantity = quantity;
  return s;
}

// Sweep of one quantity with one varied binding per curve.
inline SweepConfig family_sweep(Quantity q, Axis axis, AxisRange range,
                                const Bind& shared,
                                const std::string& varied_key,
                                const std::vector<double>& varied_values) {
  SweepConfig cfg;
  cfg.quantity = q;
  cfg.axis = axis;
  cfg.range = range;
  for (double v : varied_values) {
    Bind bind = shared;
    bind[varied_key] = v;
    cfg.series.push_back(
        series(varied_key + "=" + format_sig12(v), std::move(bind)));
  }
  return cfg;
}

// The four correlation quantifiers against a shared axis, optionally split
// further over one varied binding (columns grouped by quantifier).
inline SweepConfig quantifier_sweep(Axis axis, AxisRange range,
                                    const Bind& shared,
                                    const std::string& varied_key = {},
                                    const std::vector<double>& varied_values = {}) {
  SweepConfig cfg;
  cfg.quantity = Quantity::Steering;
  cfg.axis = axis;
  cfg.range = range;
  for (Quantity q : {Quantity::Steering, Quantity::Eof, Quantity::Gqd,
                     Quantity::Coherence}) {
    if (varied_key.empty()) {
      cfg.series.push_back(series("", shared, q));
      continue;
    }
    for (double v : varied_values) {
      Bind bind = shared;
      bind[varied_key] = v;
      cfg.series.push_back(
          series(varied_key + "=" + format_sig12(v), std::move(bind), q));
    }
  }
  return cfg;
}

inline HeatmapConfig steering_heatmap(Axis axis1, AxisRange range1, Axis axis2,
                                      AxisRange range2, const Bind& fixed) {
  HeatmapConfig cfg;
  cfg.quantity = Quantity::Steering;
  cfg.axis1 = axis1;
  cfg.axis2 = axis2;
  cfg.range1 = range1;
  cfg.range2 = range2;
  cfg.fixed = series("", fixed);
  return cfg;
}

}  // namespace detail

inline FigurePreset figure_preset(const std::string& id) {
  using detail::Bind;
  using detail::kHeatmapPoints;
  using detail::kPresetPoints;

  const AxisRange t_range{0.01, 10.0, kPresetPoints};
  const AxisRange omega_range{0.01, 5.0, kPresetPoints};
  const AxisRange delta0_range{-3.0, 1.0, kPresetPoints};
  const AxisRange time_range{0.0, 30.0, kPresetPoints};
  const std::string default_t_range = "temperature range 0.01 .. 10";
  const std::string default_omega_range = "omega range 0.01 .. 5";
  const std::string default_time_range = "time range 0 .. 30";

  FigurePreset preset;
  preset.id = id;

  if (id == "1a") {
    preset.config = detail::family_sweep(
        Quantity::Steering, Axis::Temperature, t_range, {{"delta0", -1.9}},
        "omega", {0.2, 0.5, 1.0, 5.0});
    preset.defaults_filled = {default_t_range,
                              "omega series {0.2, 0.5, 1, 5}"};
  } else if (id == "1b") {
    preset.config = detail::family_sweep(
        Quantity::Steering, Axis::Temperature, t_range, {{"omega", 5.0}},
        "delta0", {-3.0, -2.5, -2.0, -1.5});
    preset.defaults_filled = {default_t_range,
                              "delta0 series {-3, -2.5, -2, -1.5}"};
  } else if (id == "1c") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Steering;
    cfg.axis = Axis::Temperature;
    cfg.range = {0.01, 1.0, kPresetPoints};
    const Bind shared{{"delta0", -1.9}, {"omega", 0.2}};
    cfg.series.push_back(detail::series("", shared, Quantity::Steering));
    cfg.series.push_back(detail::series("", shared, Quantity::SteeringBA));
    cfg.series.push_back(detail::series("", shared, Quantity::Asymmetry));
    preset.config = cfg;
    preset.defaults_filled = {"temperature range 0.01 .. 1"};
  } else if (id == "2a") {
    preset.config = detail::steering_heatmap(
        Axis::Delta0, {-3.0, 1.0, kHeatmapPoints}, Axis::Temperature,
        {0.01, 2.0, kHeatmapPoints}, {{"omega", 1.0}});
    preset.defaults_filled = {"temperature range 0.01 .. 2", "omega=1"};
  } else if (id == "2b") {
    preset.config = detail::steering_heatmap(
        Axis::Omega, {0.01, 5.0, kHeatmapPoints}, Axis::Temperature,
        {0.01, 2.0, kHeatmapPoints}, {{"delta0", -2.2}});
    preset.defaults_filled = {default_omega_range,
                              "temperature range 0.01 .. 2", "delta0=-2.2"};
  } else if (id == "2c") {
    preset.config = detail::steering_heatmap(
        Axis::Delta0, {-3.0, 1.0, kHeatmapPoints}, Axis::Omega,
        {0.01, 5.0, kHeatmapPoints}, {{"temperature", 0.8}});
    preset.defaults_filled = {default_omega_range, "temperature=0.8"};
  } else if (id == "3a") {
    preset.config = detail::family_sweep(
        Quantity::Eof, Axis::Temperature, t_range, {{"delta0", -1.0}}, "omega",
        {0.5, 1.0, 2.0, 3.0});
    preset.defaults_filled = {default_t_range, "omega series {0.5, 1, 2, 3}"};
  } else if (id == "3b") {
    preset.config = detail::family_sweep(
        Quantity::Eof, Axis::Temperature, t_range, {{"omega", 3.0}}, "delta0",
        {-3.0, -2.5, -2.0, -1.5});
    preset.defaults_filled = {default_t_range,
                              "delta0 series {-3, -2.5, -2, -1.5}"};
  } else if (id == "4a") {
    preset.config = detail::family_sweep(
        Quantity::Gqd, Axis::Temperature, t_range, {{"delta0", 0.1}}, "omega",
        {0.5, 1.0, 2.0, 3.0});
    preset.defaults_filled = {default_t_range, "omega series {0.5, 1, 2, 3}"};
  } else if (id == "4b") {
    preset.config = detail::family_sweep(
        Quantity::Gqd, Axis::Temperature, t_range, {{"omega", 1.0}}, "delta0",
        {-2.0, -1.0, 0.0, 0.5});
    preset.defaults_filled = {default_t_range,
                              "delta0 series {-2, -1, 0, 0.5}"};
  } else if (id == "5a") {
    preset.config = detail::family_sweep(
        Quantity::Coherence, Axis::Temperature, {0.01, 200.0, kPresetPoints},
        {{"delta0", 1.0}}, "omega", {0.5, 1.0, 2.0, 5.0});
    preset.defaults_filled = {"temperature range 0.01 .. 200",
                              "omega series {0.5, 1, 2, 5}"};
  } else if (id == "5b") {
    preset.config = detail::family_sweep(
        Quantity::Coherence, Axis::Temperature, {0.01, 100.0, kPresetPoints},
        {{"omega", 0.5}}, "delta0", {-1.5, -1.0, -0.5, 0.0});
    preset.defaults_filled = {"temperature range 0.01 .. 100"};
  } else if (id == "6a") {
    preset.config = detail::quantifier_sweep(
        Axis::Temperature, {0.01, 2.0, kPresetPoints},
        {{"delta0", -1.8}, {"omega", 0.8}});
    preset.defaults_filled = {"temperature range 0.01 .. 2", "omega=0.8"};
  } else if (id == "6b") {
    preset.config = detail::quantifier_sweep(
        Axis::Omega, omega_range, {{"delta0", -1.8}, {"temperature", 0.1}});
    preset.defaults_filled = {default_omega_range, "temperature=0.1"};
  } else if (id == "6c") {
    preset.config = detail::quantifier_sweep(
        Axis::Delta0, delta0_range, {{"omega", 1.5}, {"temperature", 0.5}});
    preset.defaults_filled = {"omega=1.5", "temperature=0.5"};
  } else if (id == "7" || id == "8") {
    const double tau = id == "7" ? 0.1 : 5.0;
    preset.config = detail::quantifier_sweep(
        Axis::Time, time_range,
        {{"delta0", -2.0}, {"omega", 1.0}, {"temperature", 0.1}, {"tau", tau}},
        "mu", {0.0, 0.6, 0.8, 1.0});
    preset.defaults_filled = {default_time_range};
  } else if (id == "9") {
    preset.config = detail::quantifier_sweep(
        Axis::Time, time_range,
        {{"delta0", -2.0}, {"omega", 3.0}, {"temperature", 0.2}, {"mu", 0.0}},
        "tau", {0.1, 5.0});
    preset.defaults_filled = {default_time_range};
  } else if (id == "11a" || id == "11b") {
    SweepConfig cfg;
    cfg.axis = Axis::OmegaB;
    cfg.range = {0.01, 1.0, kPresetPoints};
    const Bind shared{{"delta0", -1.5}, {"t_hot", 1.0}, {"t_cold", 0.5}};
    if (id == "11a") {
      cfg.quantity = Quantity::CycleHeats;
      Bind bind = shared;
      bind["omega_a"] = 1.0;
      cfg.series.push_back(detail::series("", std::move(bind)));
    } else {
      cfg.quantity = Quantity::Efficiency;
      for (double omega_a : {1.0, 1.5, 2.0}) {
        Bind bind = shared;
        bind["omega_a"] = omega_a;
        cfg.series.push_back(detail::series(
            "omega_a=" + format_sig12(omega_a), std::move(bind)));
      }
    }
    preset.config = cfg;
    preset.defaults_filled = {"t_cold=0.5 (caption fixes only t_hot=2*t_cold)",
                              "omega_b range 0.01 .. 1"};
    if (id == "11b") {
      preset.defaults_filled.push_back("omega_a series {1, 1.5, 2}");
    }
  } else if (id == "12a" || id == "12b") {
    preset.config = detail::family_sweep(
        id == "12a" ? Quantity::Entropy : Quantity::Energy, Axis::Temperature,
        t_range, {{"delta0", -1.5}}, "omega", {0.5, 1.0, 2.0, 3.0});
    preset.defaults_filled = {default_t_range, "omega series {0.5, 1, 2, 3}"};
  } else if (id == "13a" || id == "13b") {
    preset.config = detail::family_sweep(
        id == "13a" ? Quantity::Entropy : Quantity::Energy, Axis::Omega,
        omega_range, {{"temperature", 0.1}}, "delta0", {-3.0, -1.5, 0.0, 1.0});
    preset.defaults_filled = {default_omega_range,
                              "delta0 series {-3, -1.5, 0, 1}"};
  } else if (id == "14a" || id == "14b") {
    SweepConfig cfg;
    cfg.quantity = Quantity::CycleHeats;
    cfg.axis = Axis::Time;
    cfg.range = time_range;
    cfg.series.push_back(detail::series(
        "", {{"delta0", -1.5},
             {"omega_a", 1.0},
             {"omega_b", 0.5},
             {"t_hot", 1.0},
             {"t_cold", 0.5},
             {"tau", id == "14a" ? 0.1 : 5.0},
             {"mu", 0.4}}));
    preset.config = cfg;
    preset.defaults_filled = {"t_cold=0.5 (caption fixes only t_hot=2*t_cold)",
                              default_time_range};
  } else if (id == "15a" || id == "15b") {
    preset.config = detail::family_sweep(
        Quantity::Entropy, Axis::Time, time_range,
        {{"delta0", -2.0},
         {"omega", 2.0},
         {"temperature", 0.1},
         {"tau", id == "15a" ? 0.1 : 5.0}},
        "mu", {0.0, 0.6, 0.8, 1.0});
    preset.defaults_filled = {default_time_range};
  } else if (id == "16a" || id == "16b") {
    preset.config = detail::family_sweep(
        Quantity::Efficiency, Axis::Time, time_range,
        {{"delta0", -1.5},
         {"omega_a", 1.0},
         {"omega_b", 0.5},
         {"t_hot", 1.0},
         {"t_cold", 0.5},
         {"tau", id == "16a" ? 0.1 : 5.0}},
        "mu", {0.0, 0.6, 0.8, 1.0});
    preset.defaults_filled = {"t_cold=0.5 (caption fixes only t_hot=2*t_cold)",
                              default_time_range};
  } else if (id == "17a" || id == "17b") {
    const double tau = id == "17a" ? 0.1 : 5.0;
    SweepConfig cfg;
    cfg.quantity = Quantity::Steering;
    cfg.axis = Axis::Time;
    cfg.range = {0.0, 10.0, kPresetPoints};
    const Bind steady{{"delta0", -1.8},
                      {"omega", 3.0},
                      {"temperature", 0.2},
                      {"tau", tau},
                      {"mu", 0.0}};
    cfg.series.push_back(detail::series("", steady, Quantity::Steering));
    cfg.series.push_back(detail::series("", steady, Quantity::Eof));
    cfg.series.push_back(detail::series("", steady, Quantity::Coherence));
    cfg.series.push_back(detail::series("", {{"delta0", -1.8},
                                             {"omega_a", 2.0},
                                             {"omega_b", 0.5},
                                             {"t_hot", 0.3},
                                             {"t_cold", 0.2},
                                             {"tau", tau},
                                             {"mu", 0.0}},
                                        Quantity::Work));
    preset.config = cfg;
    preset.defaults_filled = {
        "t_cold=0.2 (set to the caption's quantifier temperature)",
        "time range 0 .. 10"};
  } else {
    throw UnknownFigureError(id);
  }
  return preset;
}

}  // namespace udw
