// Tests for the dataset serialisation, the sweep/heatmap engines, the figure
// presets, and the parallel helper they share.
#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

#include <udw/dataset.hpp>
#include <udw/parallel.hpp>
#include <udw/presets.hpp>
#include <udw/sweep.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unistd.h>
#include <variant>
#include <vector>

using udw::Axis;
using udw::AxisRange;
using udw::Column;
using udw::ConfigError;
using udw::Dataset;
using udw::FigurePreset;
using udw::figure_preset;
using udw::HeatmapConfig;
using udw::OutputFormat;
using udw::Quantity;
using udw::run_heatmap;
using udw::run_sweep;
using udw::RunMetadata;
using udw::SeriesSpec;
using udw::SweepConfig;
using udw::UnknownFigureError;
using udw::validate_config;

namespace {

SeriesSpec make_series(std::map<std::string, double> bind,
                       std::string label = {},
                       std::optional<Quantity> quantity = std::nullopt) {
  SeriesSpec s;
  s.label = std::move(label);
  s.bind = std::move(bind);
  s.quantity = quantity;
  return s;
}

bool mentions(const std::vector<std::string>& problems,
              const std::string& needle) {
  return std::any_of(problems.begin(), problems.end(),
                     [&needle](const std::string& p) {
                       return p.find(needle) != std::string::npos;
                     });
}

std::filesystem::path temp_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("udw_sweep_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("quantity, axis, and format names round-trip") {
  for (Quantity q :
       {Quantity::Steering, Quantity::SteeringBA, Quantity::Asymmetry,
        Quantity::Eof, Quantity::Concurrence, Quantity::Gqd,
        Quantity::Coherence, Quantity::Entropy, Quantity::Energy,
        Quantity::CycleHeats, Quantity::Work, Quantity::Efficiency}) {
    const auto parsed = udw::parse_quantity(udw::to_string(q));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == q);
  }
  for (Axis a : {Axis::Temperature, Axis::Omega, Axis::Delta0, Axis::Time,
                 Axis::OmegaB}) {
    const auto parsed = udw::parse_axis(udw::to_string(a));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == a);
  }
  CHECK_FALSE(udw::parse_quantity("bogus").has_value());
  CHECK_FALSE(udw::parse_axis("bogus").has_value());
  CHECK(udw::parse_format("csv") == OutputFormat::Csv);
  CHECK(udw::parse_format("json") == OutputFormat::Json);
  CHECK_FALSE(udw::parse_format("yaml").has_value());
}

TEST_CASE("sweep config validation collects every problem") {
  SECTION("unbound steady-state parameters are all named") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Steering;
    cfg.axis = Axis::Temperature;
    cfg.range = {0.1, 1.0, 10};
    cfg.series.push_back(make_series({}));
    const auto problems = validate_config(cfg);
    CHECK(mentions(problems, "unbound parameter 'delta0'"));
    CHECK(mentions(problems, "unbound parameter 'omega'"));
    CHECK_FALSE(mentions(problems, "'temperature'"));  // the axis provides it
  }

  SECTION("range problems") {
    SweepConfig cfg;
    cfg.range = {1.0, 1.0, 1};
    cfg.series.push_back(make_series({{"delta0", -1.0}, {"omega", 1.0}}));
    const auto problems = validate_config(cfg);
    CHECK(mentions(problems, "points must be >= 2"));
    CHECK(mentions(problems, "min must be < max"));
  }

  SECTION("cycle quantities reject steady axes and vice versa") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Work;
    cfg.axis = Axis::Temperature;
    cfg.range = {0.1, 1.0, 10};
    cfg.series.push_back(make_series({{"delta0", -1.5},
                                      {"omega_a", 1.0},
                                      {"omega_b", 0.5},
                                      {"t_hot", 1.0},
                                      {"t_cold", 0.5}}));
    CHECK(mentions(validate_config(cfg), "not supported for quantity 'work'"));

    cfg.axis = Axis::OmegaB;
    CHECK(validate_config(cfg).empty());

    SweepConfig steady;
    steady.quantity = Quantity::Eof;
    steady.axis = Axis::OmegaB;
    steady.range = {0.1, 1.0, 10};
    steady.series.push_back(make_series(
        {{"delta0", -1.0}, {"omega", 1.0}, {"temperature", 0.5}}));
    CHECK(mentions(validate_config(steady),
                   "axis 'omega_b' requires a cycle quantity"));
  }

  SECTION("time axis needs the channel parameters") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Coherence;
    cfg.axis = Axis::Time;
    cfg.range = {0.0, 10.0, 5};
    cfg.series.push_back(make_series(
        {{"delta0", -1.0}, {"omega", 1.0}, {"temperature", 0.5}}));
    const auto problems = validate_config(cfg);
    CHECK(mentions(problems, "unbound parameter 'tau'"));
    CHECK(mentions(problems, "unbound parameter 'mu'"));
  }

  SECTION("unknown parameters and empty series lists") {
    SweepConfig cfg;
    cfg.range = {0.1, 1.0, 10};
    CHECK(mentions(validate_config(cfg), "at least one series"));
    cfg.series.push_back(make_series(
        {{"delta0", -1.0}, {"omega", 1.0}, {"bogus", 3.0}}));
    CHECK(mentions(validate_config(cfg), "unknown parameter 'bogus'"));
  }

  SECTION("require_valid throws with the collected report") {
    SweepConfig cfg;
    cfg.range = {0.1, 1.0, 1};
    CHECK_THROWS_AS(udw::require_valid(cfg), ConfigError);
    try {
      udw::require_valid(cfg);
    } catch (const ConfigError& e) {
      const std::string what = e.what();
      CHECK(what.find("invalid sweep config") != std::string::npos);
      CHECK(what.find("points must be >= 2") != std::string::npos);
    }
  }
}

TEST_CASE("sweep engine produces the documented datasets") {
  SECTION("coherence plateau example") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Coherence;
    cfg.axis = Axis::Temperature;
    cfg.range = {0.01, 1000.0, 200};
    cfg.series.push_back(
        make_series({{"delta0", 1.0}, {"omega", 1.0}}, "omega=1"));
    RunMetadata meta;
    const Dataset data = run_sweep(cfg, meta);
    REQUIRE(data.columns.size() == 2);
    CHECK(data.columns[0].name == "temperature");
    CHECK(data.columns[1].name == "omega=1");
    REQUIRE(data.rows() == 200);
    CHECK(*data.columns[0].values.front() == within(0.01, 1e-12));
    CHECK(*data.columns[0].values.back() == within(1000.0, 1e-9));
    const double plateau = *data.columns[1].values.back();
    CHECK(plateau == within(1.0 / 3.0, 1e-3));
    CHECK(plateau == within(0.3333332222222500, 1e-9));
    CHECK_FALSE(meta.timestamp.empty());
    CHECK(meta.gqd_fallback_count == 0);
  }

  SECTION("steering window closes with temperature") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Steering;
    cfg.axis = Axis::Temperature;
    cfg.range = {0.1, 0.5, 2};
    cfg.series.push_back(make_series({{"delta0", -1.9}, {"omega", 0.2}}));
    RunMetadata meta;
    const Dataset data = run_sweep(cfg, meta);
    REQUIRE(data.rows() == 2);
    CHECK(*data.columns[1].values[0] == within(0.0670255158400717, 1e-12));
    CHECK(*data.columns[1].values[1] == 0.0);
  }

  SECTION("shielded ensembles freeze every row of a time sweep") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Entropy;
    cfg.axis = Axis::Time;
    cfg.range = {0.0, 20.0, 41};
    cfg.series.push_back(make_series({{"delta0", -2.0},
                                      {"omega", 1.0},
                                      {"temperature", 0.1},
                                      {"tau", 0.1},
                                      {"mu", 1.0}}));
    RunMetadata meta;
    const Dataset data = run_sweep(cfg, meta);
    const double first = *data.columns[1].values[0];
    for (const auto& cell : data.columns[1].values) {
      CHECK(*cell == within(first, 1e-13));
    }
  }

  SECTION("gqd fallbacks are counted in the metadata") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Gqd;
    cfg.axis = Axis::Delta0;
    cfg.range = {-3.0, 1.0, 2};
    cfg.series.push_back(make_series({{"omega", 1.0}, {"temperature", 0.5}}));
    RunMetadata meta;
    const Dataset data = run_sweep(cfg, meta);
    CHECK(meta.gqd_fallback_count >= 1);
    CHECK(*data.columns[1].values[0] == within(0.5, 1e-6));  // singlet end
  }

  SECTION("cycle heats expand into three anchored columns") {
    SweepConfig cfg;
    cfg.quantity = Quantity::CycleHeats;
    cfg.axis = Axis::OmegaB;
    cfg.range = {0.25, 0.75, 3};
    cfg.series.push_back(make_series({{"delta0", -1.5},
                                      {"omega_a", 1.0},
                                      {"t_hot", 1.0},
                                      {"t_cold", 0.5}}));
    RunMetadata meta;
    const Dataset data = run_sweep(cfg, meta);
    REQUIRE(data.columns.size() == 4);
    CHECK(data.columns[0].name == "omega_b");
    CHECK(data.columns[1].name == "q_hot");
    CHECK(data.columns[2].name == "q_cold");
    CHECK(data.columns[3].name == "work");
    // middle row is the omega_b = 0.5 golden cycle
    CHECK(*data.columns[1].values[1] == within(0.17382092418874468, 1e-12));
    CHECK(*data.columns[2].values[1] == within(-0.12119847235432698, 1e-12));
    CHECK(*data.columns[3].values[1] == within(0.05262245183441771, 1e-12));
  }

  SECTION("undefined efficiencies become empty cells") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Efficiency;
    cfg.axis = Axis::OmegaB;
    cfg.range = {0.25, 0.75, 2};
    cfg.series.push_back(make_series({{"delta0", -3.0},
                                      {"omega_a", 1.0},
                                      {"t_hot", 1.0},
                                      {"t_cold", 0.5}}));
    RunMetadata meta;
    const Dataset data = run_sweep(cfg, meta);
    CHECK_FALSE(data.columns[1].values[0].has_value());
    CHECK_FALSE(data.columns[1].values[1].has_value());
  }

  SECTION("column naming honours labels and per-series overrides") {
    SweepConfig cfg;
    cfg.quantity = Quantity::Steering;
    cfg.axis = Axis::Temperature;
    cfg.range = {0.1, 1.0, 2};
    const std::map<std::string, double> bind{{"delta0", -1.9}, {"omega", 1.0}};
    cfg.series.push_back(make_series(bind, "curve-a"));
    cfg.series.push_back(make_series(bind, "", Quantity::Gqd));
    cfg.series.push_back(make_series(bind, "hot", Quantity::Eof));
    RunMetadata meta;
    const Dataset data = run_sweep(cfg, meta);
    REQUIRE(data.columns.size() == 4);
    CHECK(data.columns[1].name == "curve-a");
    CHECK(data.columns[2].name == "gqd");
    CHECK(data.columns[3].name == "eof[hot]");
  }
}

TEST_CASE("csv serialisation is pure header plus rows") {
  Dataset data;
  data.columns.push_back({"x", {1.0, 2.0}});
  data.columns.push_back({"y", {0.5, std::nullopt}});

  std::ostringstream out;
  udw::emit_csv(data, out);
  CHECK(out.str() == "x,y\n1,0.5\n2,\n");

  SECTION("empty datasets are rejected") {
    std::ostringstream sink;
    CHECK_THROWS_AS(udw::emit_csv(Dataset{}, sink), std::invalid_argument);
    CHECK_THROWS_AS(udw::emit_json(Dataset{}, RunMetadata{}, sink),
                    std::invalid_argument);
  }
}

TEST_CASE("values print with twelve significant digits") {
  CHECK(udw::format_sig12(0.1) == "0.1");
  CHECK(udw::format_sig12(1.0 / 3.0) == "0.333333333333");
  CHECK(udw::format_sig12(1e-300) == "1e-300");
  CHECK(udw::format_sig12(-0.05262245183441771) == "-0.0526224518344");
  CHECK(udw::format_sig12(12345.0) == "12345");
}

TEST_CASE("file emission and metadata sidecars") {
  SweepConfig cfg;
  cfg.quantity = Quantity::Steering;
  cfg.axis = Axis::Temperature;
  cfg.range = {0.1, 0.5, 3};
  cfg.series.push_back(make_series({{"delta0", -1.9}, {"omega", 0.2}}, "s"));

  SECTION("csv files carry no metadata; the sidecar does") {
    const auto path = temp_dir() / "steering.csv";
    cfg.output_path = path.string();
    RunMetadata meta;
    const Dataset data = run_sweep(cfg, meta);
    udw::emit(data, meta, OutputFormat::Csv, cfg.output_path);

    const std::string body = slurp(path);
    CHECK(body.rfind("temperature,s\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 4);  // header + 3 rows

    const auto sidecar = path.string() + ".meta.json";
    REQUIRE(std::filesystem::exists(sidecar));
    const auto meta_doc = nlohmann::json::parse(slurp(sidecar));
    CHECK(meta_doc.at("tool") == "udw");
    CHECK(meta_doc.at("corrections").at("steady_state_swap_applied") == true);
    CHECK(meta_doc.at("corrections").at("gqd_fallback_count") == 0);
    CHECK(meta_doc.at("parameters").at("quantity") == "steering");
    CHECK(meta_doc.at("parameters").contains("series.1.s"));
  }

  SECTION("json embeds metadata and nulls for undefined cells") {
    SweepConfig eff;
    eff.quantity = Quantity::Efficiency;
    eff.axis = Axis::OmegaB;
    eff.range = {0.25, 0.75, 2};
    eff.series.push_back(make_series({{"delta0", -3.0},
                                      {"omega_a", 1.0},
                                      {"t_hot", 1.0},
                                      {"t_cold", 0.5}}));
    const auto path = temp_dir() / "efficiency.json";
    eff.output_path = path.string();
    RunMetadata meta;
    const Dataset data = run_sweep(eff, meta);
    udw::emit(data, meta, OutputFormat::Json, eff.output_path);

    const auto doc = nlohmann::json::parse(slurp(path));
    REQUIRE(doc.contains("metadata"));
    REQUIRE(doc.contains("columns"));
    CHECK(doc.at("metadata").at("version") == udw::kVersion);
    const auto& value_col = doc.at("columns").at(1);
    CHECK(value_col.at("name") == "value");
    CHECK(value_col.at("values").at(0).is_null());
  }

  SECTION("reruns are deterministic") {
    RunMetadata meta1, meta2;
    const Dataset d1 = run_sweep(cfg, meta1);
    const Dataset d2 = run_sweep(cfg, meta2);
    std::ostringstream csv1, csv2;
    udw::emit_csv(d1, csv1);
    udw::emit_csv(d2, csv2);
    CHECK(csv1.str() == csv2.str());

    std::ostringstream json1, json2;
    udw::emit_json(d1, meta1, json1);
    udw::emit_json(d2, meta2, json2);
    auto doc1 = nlohmann::json::parse(json1.str());
    auto doc2 = nlohmann::json::parse(json2.str());
    doc1["metadata"].erase("timestamp");
    doc2["metadata"].erase("timestamp");
    CHECK(doc1 == doc2);
  }

  SECTION("unwritable paths raise IoError") {
    RunMetadata meta;
    const Dataset data = run_sweep(cfg, meta);
    CHECK_THROWS_AS(udw::emit(data, meta, OutputFormat::Csv,
                              "/nonexistent-udw-dir/out.csv"),
                    udw::IoError);
  }
}

TEST_CASE("heatmaps emit long-format grids") {
  SECTION("axis1 varies slowest") {
    HeatmapConfig cfg;
    cfg.quantity = Quantity::Steering;
    cfg.axis1 = Axis::Delta0;
    cfg.axis2 = Axis::Temperature;
    cfg.range1 = {-3.0, -1.0, 3};
    cfg.range2 = {0.1, 0.2, 2};
    cfg.fixed = make_series({{"omega", 1.0}});
    RunMetadata meta;
    const Dataset data = run_heatmap(cfg, meta);
    REQUIRE(data.columns.size() == 3);
    CHECK(data.columns[0].name == "delta0");
    CHECK(data.columns[1].name == "temperature");
    CHECK(data.columns[2].name == "steering");
    REQUIRE(data.rows() == 6);
    const double d0_values[] = {-3.0, -3.0, -2.0, -2.0, -1.0, -1.0};
    const double t_values[] = {0.1, 0.2, 0.1, 0.2, 0.1, 0.2};
    for (int r = 0; r < 6; ++r) {
      CHECK(*data.columns[0].values[static_cast<std::size_t>(r)] ==
            within(d0_values[r], 1e-15));
      CHECK(*data.columns[1].values[static_cast<std::size_t>(r)] ==
            within(t_values[r], 1e-15));
    }
    // the singlet rows saturate the steering bound
    CHECK(*data.columns[2].values[0] == within(1.0, 1e-12));
  }

  SECTION("validation rejects bad axis pairs and cycle quantities") {
    HeatmapConfig cfg;
    cfg.quantity = Quantity::Work;
    cfg.axis1 = Axis::Delta0;
    cfg.axis2 = Axis::Delta0;
    cfg.range1 = {-3.0, 1.0, 3};
    cfg.range2 = {-3.0, 1.0, 3};
    const auto problems = validate_config(cfg);
    CHECK(mentions(problems, "steady-state quantities only"));
    CHECK(mentions(problems, "axes must differ"));
    CHECK(mentions(problems, "unbound parameter 'omega'"));

    cfg.quantity = Quantity::Steering;
    cfg.axis2 = Axis::Time;
    CHECK(mentions(validate_config(cfg),
                   "axes must be temperature, omega, or delta0"));
  }
}

TEST_CASE("figure presets") {
  SECTION("every advertised preset builds a valid configuration") {
    for (const std::string& id : udw::preset_ids()) {
      const FigurePreset preset = figure_preset(id);
      CHECK(preset.id == id);
      CHECK_FALSE(preset.defaults_filled.empty());
      const auto problems = std::visit(
          [](const auto& cfg) { return validate_config(cfg); }, preset.config);
      CAPTURE(id);
      CHECK(problems.empty());
    }
  }

  SECTION("unknown ids are rejected") {
    CHECK_THROWS_AS(figure_preset("bogus"), UnknownFigureError);
    CHECK_THROWS_AS(figure_preset("10"), UnknownFigureError);
  }

  SECTION("the fast-noise dynamics preset binds the channel") {
    const FigurePreset preset = figure_preset("7");
    const auto& cfg = std::get<SweepConfig>(preset.config);
    CHECK(cfg.axis == Axis::Time);
    REQUIRE(cfg.series.size() == 16);  // 4 quantifiers x 4 shielding values
    for (const auto& series : cfg.series) {
      REQUIRE(series.quantity.has_value());
      CHECK(series.bind.at("tau") == 0.1);
      CHECK(series.bind.at("delta0") == -2.0);
      CHECK(series.bind.count("mu") == 1);
    }
  }

  SECTION("the cycle preset pins the documented bath temperatures") {
    const FigurePreset preset = figure_preset("11a");
    const auto& cfg = std::get<SweepConfig>(preset.config);
    CHECK(cfg.quantity == Quantity::CycleHeats);
    CHECK(cfg.axis == Axis::OmegaB);
    REQUIRE(cfg.series.size() == 1);
    CHECK(cfg.series[0].bind.at("t_hot") == 1.0);
    CHECK(cfg.series[0].bind.at("t_cold") == 0.5);
    CHECK(mentions(preset.defaults_filled, "t_cold=0.5"));
  }

  SECTION("the steering-asymmetry preset runs and shows a symmetric family") {
    const FigurePreset preset = figure_preset("1c");
    auto cfg = std::get<SweepConfig>(preset.config);
    cfg.range.points = 40;  // keep the unit test light
    RunMetadata meta;
    const Dataset data = run_sweep(cfg, meta);
    REQUIRE(data.columns.size() == 4);
    CHECK(data.columns[1].name == "steering");
    CHECK(data.columns[2].name == "steering-ba");
    CHECK(data.columns[3].name == "asymmetry");
    for (std::size_t r = 0; r < data.rows(); ++r) {
      CHECK(*data.columns[1].values[r] == *data.columns[2].values[r]);
      CHECK(*data.columns[3].values[r] == 0.0);
    }
  }
}

TEST_CASE("parallel helper") {
  SECTION("covers every index exactly once for any worker count") {
    for (unsigned workers : {1u, 2u, 3u, 7u}) {
      std::vector<int> hits(101, 0);
      udw::parallel_for(
          hits.size(), [&hits](std::size_t i) { ++hits[i]; }, workers);
      CHECK(std::count(hits.begin(), hits.end(), 1) == 101);
    }
    udw::parallel_for(0, [](std::size_t) { FAIL("body must not run"); }, 4);
  }

  SECTION("worker exceptions propagate") {
    CHECK_THROWS_AS(udw::parallel_for(
                        10,
                        [](std::size_t i) {
                          if (i == 7) throw std::runtime_error("boom");
                        },
                        4),
                    std::runtime_error);
  }

  SECTION("UDW_THREADS overrides the worker count") {
    ::setenv("UDW_THREADS", "3", 1);
    CHECK(udw::worker_count() == 3);
    ::setenv("UDW_THREADS", "0", 1);
    CHECK(udw::worker_count() == 1);
    ::setenv("UDW_THREADS", "9999", 1);
    CHECK(udw::worker_count() == 256);
    ::unsetenv("UDW_THREADS");
    CHECK(udw::worker_count() >= 1);
  }
}
