#pragma once

#include <atomic>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "udw/dataset.hpp"
#include "udw/gqd.hpp"
#include "udw/parallel.hpp"
#include "udw/quantifiers.hpp"
#include "udw/thermo.hpp"
#include "udw/xstate.hpp"

// Parameter-sweep engine: one axis, one quantity per series (with optional
// per-series overrides), deterministic column-major output plus resolved
// run metadata.

namespace udw {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class Quantity {
  Steering,
  SteeringBA,  // reverse direction, used by the steering-asymmetry figure
  Asymmetry,
  Eof,
  Concurrence,
  Gqd,
  Coherence,
  Entropy,
  Energy,
  CycleHeats,
  Work,
  Efficiency,
};

inline std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::Steering: return "steering";
    case Quantity::SteeringBA: return "steering-ba";
    case Quantity::Asymmetry: return "asymmetry";
    case Quantity::Eof: return "eof";
    case Quantity::Concurrence: return "concurrence";
    case Quantity::Gqd: return "gqd";
    case Quantity::Coherence: return "coherence";
    case Quantity::Entropy: return "entropy";
    case Quantity::Energy: return "energy";
    case Quantity::CycleHeats: return "cycle-heats";
    case Quantity::Work: return "work";
    case Quantity::Efficiency: return "efficiency";
  }
  return "?";
}

inline std::optional<Quantity> parse_quantity(const std::string& name) {
  for (Quantity q :
       {Quantity::Steering, Quantity::SteeringBA, Quantity::Asymmetry,
        Quantity::Eof, Quantity::Concurrence, Quantity::Gqd,
        Quantity::Coherence, Quantity::Entropy, Quantity::Energy,
        Quantity::CycleHeats, Quantity::Work, Quantity::Efficiency}) {
    if (to_string(q) == name) return q;
  }
  return std::nullopt;
}

enum class Axis { Temperature, Omega, Delta0, Time, OmegaB };

inline std::string to_string(Axis a) {
  switch (a) {
    case Axis::Temperature: return "temperature";
    case Axis::Omega: return "omega";
    case Axis::Delta0: return "delta0";
    case Axis::Time: return "time";
    case Axis::OmegaB: return "omega_b";
  }
  return "?";
}

inline std::optional<Axis> parse_axis(const std::string& name) {
  for (Axis a : {Axis::Temperature, Axis::Omega, Axis::Delta0, Axis::Time,
                 Axis::OmegaB}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

struct AxisRange {
  double min = 0.0;
  double max = 1.0;
  int points = 200;
};

// One curve: fixed-parameter bindings plus an optional quantity override
// (multi-quantity figures plot several measures against a shared axis).
struct SeriesSpec {
  std::string label;
  std::map<std::string, double> bind;
  std::optional<Quantity> quantity;
};

struct SweepConfig {
  Quantity quantity = Quantity::Steering;
  Axis axis = Axis::Temperature;
  AxisRange range;
  std::vector<SeriesSpec> series;
  std::string output_path;
  OutputFormat format = OutputFormat::Csv;
};

// Two-axis grid over steady-state quantities, emitted in long format
// (axis1, axis2, value) with axis1 varying slowest.
struct HeatmapConfig {
  Quantity quantity = Quantity::Steering;
  Axis axis1 = Axis::Delta0;
  Axis axis2 = Axis::Temperature;
  AxisRange range1;
  AxisRange range2;
  SeriesSpec fixed;
  std::string output_path;
  OutputFormat format = OutputFormat::Csv;
};

inline bool is_cycle_quantity(Quantity q) {
  return q == Quantity::CycleHeats || q == Quantity::Work ||
         q == Quantity::Efficiency;
}

// Output columns contributed by one series of the given quantity.
inline std::vector<std::string> subcolumns(Quantity q) {
  if (q == Quantity::CycleHeats) return {"q_hot", "q_cold", "work"};
  return {""};
}

namespace detail {

inline const std::set<std::string>& known_parameters() {
  static const std::set<std::string> names = {
      "delta0", "omega",   "temperature", "tau",   "mu",
      "time",   "omega_a", "omega_b",     "t_hot", "t_cold"};
  return names;
}

// The axis writes this binding; a series must supply the rest.
inline std::string axis_parameter(Axis a) { return to_string(a); }

inline bool dynamics_requested(Axis axis,
                               const std::map<std::string, double>& bind) {
  return axis == Axis::Time || bind.count("tau") || bind.count("mu") ||
         bind.count("time");
}

inline std::vector<std::string> required_parameters(
    Quantity q, Axis axis, const std::map<std::string, double>& bind) {
  std::vector<std::string> req;
  if (is_cycle_quantity(q)) {
    req = {"delta0", "omega_a", "omega_b", "t_hot", "t_cold"};
  } else {
    req = {"delta0", "omega", "temperature"};
  }
  if (dynamics_requested(axis, bind)) {
    req.push_back("tau");
    req.push_back("mu");
    req.push_back("time");
  }
  std::vector<std::string> out;
  const std::string axis_name = axis_parameter(axis);
  for (const auto& name : req) {
    if (name != axis_name) out.push_back(name);
  }
  return out;
}

struct ParamSet {
  std::map<std::string, double> v;

  double get(const std::string& key) const {
    const auto it = v.find(key);
    if (it == v.end()) {
      throw ConfigError("internal: parameter '" + key + "' missing");
    }
    return it->second;
  }
};

// Evaluates one quantity at one fully bound parameter point.  Returns one
// value per subcolumn; undefined results become empty cells.
inline std::vector<std::optional<double>> evaluate(
    Quantity q, const ParamSet& p, bool dynamic,
    std::atomic<long>& gqd_fallbacks) {
  const auto channel = [&p]() {
    return DephasingChannel{p.get("tau"), p.get("mu")};
  };
  if (is_cycle_quantity(q)) {
    CycleSpec spec;
    spec.omega_a = p.get("omega_a");
    spec.omega_b = p.get("omega_b");
    spec.t_hot = p.get("t_hot");
    spec.t_cold = p.get("t_cold");
    spec.delta0 = p.get("delta0");
    if (dynamic) {
      spec.channel = channel();
      spec.time = p.get("time");
    }
    const CycleResult r = stirling_cycle(spec);
    if (q == Quantity::CycleHeats) {
      return {r.q_hot, r.q_cold, r.work};
    }
    if (q == Quantity::Work) return {r.work};
    if (r.efficiency && std::isfinite(*r.efficiency)) {
      return {*r.efficiency};
    }
    return {std::nullopt};
  }

  XState st = steady_state({.delta0 = p.get("delta0"),
                            .omega = p.get("omega"),
                            .temperature = p.get("temperature")});
  if (dynamic) {
    st = evolve(st, p.get("time"), channel());
  }
  double value = 0.0;
  switch (q) {
    case Quantity::Steering: value = steering(st).s_ab; break;
    case Quantity::SteeringBA: value = steering(st).s_ba; break;
    case Quantity::Asymmetry: value = steering(st).asymmetry; break;
    case Quantity::Eof: value = entanglement_of_formation(concurrence(st)); break;
    case Quantity::Concurrence: value = concurrence(st); break;
    case Quantity::Gqd: {
      const GqdResult g = gqd_trace_norm(st);
      if (g.from_fallback) ++gqd_fallbacks;
      value = g.value;
      break;
    }
    case Quantity::Coherence: value = coherence_l1(st); break;
    case Quantity::Entropy: value = entropy(st); break;
    case Quantity::Energy: value = internal_energy(st, p.get("omega")); break;
    default:
      throw ConfigError("internal: unhandled quantity");
  }
  if (!std::isfinite(value)) return {std::nullopt};
  return {value};
}

inline std::vector<double> linspace(const AxisRange& r) {
  std::vector<double> v(static_cast<std::size_t>(r.points));
  for (int i = 0; i < r.points; ++i) {
    v[static_cast<std::size_t>(i)] =
        r.min + (r.max - r.min) * static_cast<double>(i) /
                    static_cast<double>(r.points - 1);
  }
  return v;
}

inline void check_range(const AxisRange& r, const std::string& who,
                        std::vector<std::string>& problems) {
  if (r.points < 2) {
    problems.push_back(who + ": points must be >= 2");
  }
  if (!(r.min < r.max)) {
    problems.push_back(who + ": min must be < max");
  }
}

inline std::string series_column_name(const SeriesSpec& series, Quantity q,
                                      const std::string& subcolumn) {
  std::string base;
  if (series.quantity) {
    base = to_string(q);
    if (!series.label.empty()) base += "[" + series.label + "]";
  } else {
    base = series.label;
  }
  if (!subcolumn.empty()) {
    if (base.empty()) return subcolumn;
    return subcolumn + "[" + base + "]";
  }
  return base.empty() ? std::string("value") : base;
}

inline std::string format_binding(const std::map<std::string, double>& bind) {
  std::string out;
  for (const auto& [key, value] : bind) {
    if (!out.empty()) out += " ";
    out += key + "=" + format_sig12(value);
  }
  return out;
}

}  // namespace detail

// Collects every config problem (unbound parameters, bad ranges, unsupported
// axis/quantity pairings) instead of stopping at the first.
inline std::vector<std::string> validate_config(const SweepConfig& cfg) {
  std::vector<std::string> problems;
  detail::check_range(cfg.range, "axis-range", problems);
  if (cfg.series.empty()) {
    problems.push_back("at least one series is required");
  }
  for (std::size_t i = 0; i < cfg.series.size(); ++i) {
    const SeriesSpec& series = cfg.series[i];
    const Quantity q = series.quantity.value_or(cfg.quantity);
    const std::string who = "series " + std::to_string(i + 1);
    if (is_cycle_quantity(q)) {
      if (cfg.axis == Axis::Temperature || cfg.axis == Axis::Omega) {
        problems.push_back(who + ": axis '" + to_string(cfg.axis) +
                           "' is not supported for quantity '" + to_string(q) +
                           "'");
      }
    } else if (cfg.axis == Axis::OmegaB) {
      problems.push_back(who + ": axis 'omega_b' requires a cycle quantity");
    }
    for (const auto& [key, value] : series.bind) {
      (void)value;
      if (!detail::known_parameters().count(key)) {
        problems.push_back(who + ": unknown parameter '" + key + "'");
      }
    }
    for (const auto& name :
         detail::required_parameters(q, cfg.axis, series.bind)) {
      if (!series.bind.count(name)) {
        problems.push_back(who + ": unbound parameter '" + name + "'");
      }
    }
  }
  return problems;
}

inline void require_valid(const SweepConfig& cfg) {
  const auto problems = validate_config(cfg);
  if (problems.empty()) return;
  std::string what = "invalid sweep config:";
  for (const auto& p : problems) what += "\n  - " + p;
  throw ConfigError(what);
}

inline Dataset run_sweep(const SweepConfig& cfg, RunMetadata& meta) {
  require_valid(cfg);
  const std::vector<double> axis_values = detail::linspace(cfg.range);

  Dataset data;
  data.columns.push_back({to_string(cfg.axis), {}});
  auto& axis_col = data.columns.front().values;
  axis_col.reserve(axis_values.size());
  for (double v : axis_values) axis_col.push_back(v);

  struct Curve {
    const SeriesSpec* series;
    Quantity quantity;
    std::size_t first_column;
  };
  std::vector<Curve> curves;
  for (const SeriesSpec& series : cfg.series) {
    const Quantity q = series.quantity.value_or(cfg.quantity);
    curves.push_back({&series, q, data.columns.size()});
    for (const auto& sub : subcolumns(q)) {
      Column col;
      col.name = detail::series_column_name(series, q, sub);
      col.values.assign(axis_values.size(), std::nullopt);
      data.columns.push_back(std::move(col));
    }
  }

  std::atomic<long> gqd_fallbacks{0};
  const std::string axis_name = detail::axis_parameter(cfg.axis);
  parallel_for(axis_values.size(), [&](std::size_t row) {
    for (const Curve& curve : curves) {
      detail::ParamSet p{curve.series->bind};
      p.v[axis_name] = axis_values[row];
      const bool dynamic =
          detail::dynamics_requested(cfg.axis, curve.series->bind);
      const auto cells =
          detail::evaluate(curve.quantity, p, dynamic, gqd_fallbacks);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        data.columns[curve.first_column + k].values[row] = cells[k];
      }
    }
  });

  meta.timestamp = now_iso8601_utc();
  meta.parameters.emplace_back("quantity", to_string(cfg.quantity));
  meta.parameters.emplace_back("axis", to_string(cfg.axis));
  meta.parameters.emplace_back(
      "axis-range", format_sig12(cfg.range.min) + " .. " +
                        format_sig12(cfg.range.max) + " (" +
                        std::to_string(cfg.range.points) + " points)");
  for (std::size_t i = 0; i < cfg.series.size(); ++i) {
    const SeriesSpec& series = cfg.series[i];
    std::string desc = detail::format_binding(series.bind);
    if (series.quantity) {
      desc = "quantity=" + to_string(*series.quantity) +
             (desc.empty() ? "" : " " + desc);
    }
    std::string key = "series." + std::to_string(i + 1);
    if (!series.label.empty()) key += "." + series.label;
    meta.parameters.emplace_back(key, desc);
  }
  meta.gqd_fallback_count = gqd_fallbacks.load();
  return data;
}

inline std::vector<std::string> validate_config(const HeatmapConfig& cfg) {
  std::vector<std::string> problems;
  detail::check_range(cfg.range1, "range1", problems);
  detail::check_range(cfg.range2, "range2", problems);
  if (is_cycle_quantity(cfg.quantity)) {
    problems.push_back("heatmaps support steady-state quantities only");
  }
  const auto steady_axis = [](Axis a) {
    return a == Axis::Temperature || a == Axis::Omega || a == Axis::Delta0;
  };
  if (!steady_axis(cfg.axis1) || !steady_axis(cfg.axis2)) {
    problems.push_back("heatmap axes must be temperature, omega, or delta0");
  }
  if (cfg.axis1 == cfg.axis2) {
    problems.push_back("heatmap axes must differ");
  }
  for (const auto& [key, value] : cfg.fixed.bind) {
    (void)value;
    if (!detail::known_parameters().count(key)) {
      problems.push_back("unknown parameter '" + key + "'");
    }
  }
  for (const auto& name : {"delta0", "omega", "temperature"}) {
    if (name == to_string(cfg.axis1) || name == to_string(cfg.axis2)) continue;
    if (!cfg.fixed.bind.count(name)) {
      problems.push_back("unbound parameter '" + std::string(name) + "'");
    }
  }
  return problems;
}

inline Dataset run_heatmap(const HeatmapConfig& cfg, RunMetadata& meta) {
  {
    const auto problems = validate_config(cfg);
    if (!problems.empty()) {
      std::string what = "invalid heatmap config:";
      for (const auto& p : problems) what += "\n  - " + p;
      throw ConfigError(what);
    }
  }
  const auto v1 = detail::linspace(cfg.range1);
  const auto v2 = detail::linspace(cfg.range2);

  Dataset data;
  data.columns.push_back({to_string(cfg.axis1), {}});
  data.columns.push_back({to_string(cfg.axis2), {}});
  data.columns.push_back({to_string(cfg.quantity), {}});
  const std::size_t total = v1.size() * v2.size();
  for (auto& col : data.columns) col.values.assign(total, std::nullopt);

  std::atomic<long> gqd_fallbacks{0};
  parallel_for(total, [&](std::size_t idx) {
    const std::size_t i = idx / v2.size();
    const std::size_t j = idx % v2.size();
    detail::ParamSet p{cfg.fixed.bind};
    p.v[to_string(cfg.axis1)] = v1[i];
    p.v[to_string(cfg.axis2)] = v2[j];
    const auto cells =
        detail::evaluate(cfg.quantity, p, /*dynamic=*/false, gqd_fallbacks);
    data.columns[0].values[idx] = v1[i];
    data.columns[1].values[idx] = v2[j];
    data.columns[2].values[idx] = cells.front();
  });

  meta.timestamp = now_iso8601_utc();
  meta.parameters.emplace_back("quantity", to_string(cfg.quantity));
  meta.parameters.emplace_back("axis1", to_string(cfg.axis1));
  meta.parameters.emplace_back("axis2", to_string(cfg.axis2));
  meta.parameters.emplace_back(
      "range1", format_sig12(cfg.range1.min) + " .. " +
                    format_sig12(cfg.range1.max) + " (" +
                    std::to_string(cfg.range1.points) + " points)");
  meta.parameters.emplace_back(
      "range2", format_sig12(cfg.range2.min) + " .. " +
                    format_sig12(cfg.range2.max) + " (" +
                    std::to_string(cfg.range2.points) + " points)");
  meta.parameters.emplace_back("fixed", detail::format_binding(cfg.fixed.bind));
  meta.gqd_fallback_count = gqd_fallbacks.load();
  return data;
}

}  // namespace udw
