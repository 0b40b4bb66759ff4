#pragma once

#include <cstdio>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "udw/version.hpp"

// Column-major datasets and their serialisation.  CSV files are pure
// tabular data (header + rows); the run metadata travels in a JSON sidecar
// next to the CSV, or inline under the "metadata" key for JSON output.

namespace udw {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& path, const std::string& what)
      : std::runtime_error("io error on '" + path + "': " + what) {}
};

enum class OutputFormat { Csv, Json };

inline std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

inline std::string to_string(OutputFormat f) {
  return f == OutputFormat::Csv ? "csv" : "json";
}

struct Column {
  std::string name;
  std::vector<std::optional<double>> values;  // nullopt = undefined cell
};

struct Dataset {
  std::vector<Column> columns;

  std::size_t rows() const {
    return columns.empty() ? 0 : columns.front().values.size();
  }
};

struct RunMetadata {
  std::string tool = kToolName;
  std::string version = kVersion;
  std::string timestamp;  // ISO 8601 UTC, set when the run starts
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string log_base_note =
      "steering/eof/coherence in bits (log2); entropy and heats in nats (ln)";
  bool steady_state_swap_applied = true;
  long gqd_fallback_count = 0;
  std::vector<std::string> defaults_filled;
};

inline std::string now_iso8601_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

// Values are printed with up to 12 significant digits, enough to round-trip
// a double to well below every tolerance used here.
inline std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline nlohmann::ordered_json metadata_json(const RunMetadata& meta) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta.parameters) {
    params[key] = value;
  }
  return nlohmann::ordered_json{
      {"tool", meta.tool},
      {"version", meta.version},
      {"timestamp", meta.timestamp},
      {"parameters", params},
      {"annotations", {{"log_base", meta.log_base_note}}},
      {"corrections",
       {{"steady_state_swap_applied", meta.steady_state_swap_applied},
        {"gqd_fallback_count", meta.gqd_fallback_count}}},
      {"defaults_filled", meta.defaults_filled}};
}

inline void emit_csv(const Dataset& data, std::ostream& out) {
  if (data.columns.empty() || data.rows() == 0) {
    throw std::invalid_argument("emit_csv: dataset is empty");
  }
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    if (c) out << ',';
    out << data.columns[c].name;
  }
  out << '\n';
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
      if (c) out << ',';
      const auto& cell = data.columns[c].values[r];
      if (cell) out << format_sig12(*cell);
    }
    out << '\n';
  }
}

inline void emit_json(const Dataset& data, const RunMetadata& meta,
                      std::ostream& out) {
  if (data.columns.empty() || data.rows() == 0) {
    throw std::invalid_argument("emit_json: dataset is empty");
  }
  nlohmann::ordered_json columns = nlohmann::ordered_json::array();
  for (const auto& col : data.columns) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& cell : col.values) {
      if (cell) {
        values.push_back(*cell);
      } else {
        values.push_back(nullptr);
      }
    }
    columns.push_back({{"name", col.name}, {"values", values}});
  }
  const nlohmann::ordered_json doc{{"metadata", metadata_json(meta)},
                                   {"columns", columns}};
  out << doc.dump(2) << '\n';
}

// Writes the dataset to path.  CSV output additionally writes the metadata
// block to "<path>.meta.json" so the tabular file stays parser-friendly.
inline void emit(const Dataset& data, const RunMetadata& meta, OutputFormat f,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError(path, "cannot open for writing");
  }
  if (f == OutputFormat::Csv) {
    emit_csv(data, out);
  } else {
    emit_json(data, meta, out);
  }
  out.flush();
  if (!out) {
    throw IoError(path, "write failed");
  }
  if (f == OutputFormat::Csv) {
    const std::string side = path + ".meta.json";
    std::ofstream meta_out(side);
    if (!meta_out) {
      throw IoError(side, "cannot open for writing");
    }
    meta_out << metadata_json(meta).dump(2) << '\n';
    meta_out.flush();
    if (!meta_out) {
      throw IoError(side, "write failed");
    }
  }
}

}  // namespace udw
