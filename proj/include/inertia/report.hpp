// Copyright 2026 inertia-eval contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Aggregated metric reports with JSON/Markdown/CSV serialization. The JSON
// form is the toolkit's interchange format (schema_version 1, see
// docs/report.schema.json) and round-trips exactly.

#ifndef INERTIA_REPORT_HPP_
#define INERTIA_REPORT_HPP_

#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "inertia/corpus.hpp"
#include "inertia/errors.hpp"

namespace inertia {

inline constexpr std::array<const char*, 8> kMetricRegistry = {
    "bleu",       "consistency", "robustness", "stability",
    "exact_match", "nfr",        "nfi",        "complexity"};

inline bool is_known_metric(const std::string& name) {
  for (const char* m : kMetricRegistry) {
    if (name == m) return true;
  }
  return false;
}

// 64-bit FNV-1a, used to fingerprint input files in report metadata.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

inline std::string fnv1a64_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string(buf);
}

inline std::string digest_file(const std::string& path) {
  return fnv1a64_hex(detail::read_file_bytes(path));
}

struct CiInterval {
  double low = 0.0;
  double high = 0.0;

  bool operator==(const CiInterval&) const = default;
};

struct MetricRow {
  std::string system;
  std::string metric;
  double value = 0.0;
  std::optional<CiInterval> ci;

  bool operator==(const MetricRow&) const = default;
};

struct InputDigest {
  std::string path;
  std::string fnv1a64;

  bool operator==(const InputDigest&) const = default;
};

struct InertiaReport {
  std::vector<MetricRow> rows;
  std::string command;                    // producing subcommand, may be empty
  nlohmann::json config = nlohmann::json::object();  // flag echo
  std::vector<InputDigest> inputs;
  std::optional<std::string> timestamp;   // only when explicitly stamped

  bool operator==(const InertiaReport&) const = default;
};

enum class ReportFormat { kJson, kMarkdown, kCsv };

namespace report_detail {

inline std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return std::string(buf);
}

inline std::string full_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace report_detail

inline nlohmann::json report_to_json(const InertiaReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const MetricRow& row : report.rows) {
    nlohmann::json r{{"system", row.system},
                     {"metric", row.metric},
                     {"value", row.value}};
    if (row.ci) r["ci"] = {{"low", row.ci->low}, {"high", row.ci->high}};
    rows.push_back(std::move(r));
  }
  nlohmann::json inputs = nlohmann::json::array();
  for (const InputDigest& in : report.inputs) {
    inputs.push_back({{"path", in.path}, {"fnv1a64", in.fnv1a64}});
  }
  nlohmann::json metadata{{"command", report.command},
                          {"config", report.config},
                          {"inputs", std::move(inputs)}};
  if (report.timestamp) metadata["timestamp"] = *report.timestamp;
  return nlohmann::json{{"schema_version", 1},
                        {"rows", std::move(rows)},
                        {"metadata", std::move(metadata)}};
}

inline InertiaReport report_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("schema_version") ||
      doc["schema_version"] != 1) {
    throw DataError("report: missing or unsupported schema_version");
  }
  InertiaReport report;
  for (const auto& r : doc.at("rows")) {
    MetricRow row;
    row.system = r.at("system").get<std::string>();
    row.metric = r.at("metric").get<std::string>();
    row.value = r.at("value").get<double>();
    if (r.contains("ci")) {
      row.ci = CiInterval{r["ci"].at("low").get<double>(),
                          r["ci"].at("high").get<double>()};
    }
    report.rows.push_back(std::move(row));
  }
  if (doc.contains("metadata")) {
    const auto& meta = doc["metadata"];
    if (meta.contains("command")) report.command = meta["command"].get<std::string>();
    if (meta.contains("config")) report.config = meta["config"];
    if (meta.contains("inputs")) {
      for (const auto& in : meta["inputs"]) {
        report.inputs.push_back(InputDigest{in.at("path").get<std::string>(),
                                            in.at("fnv1a64").get<std::string>()});
      }
    }
    if (meta.contains("timestamp")) {
      report.timestamp = meta["timestamp"].get<std::string>();
    }
  }
  return report;
}

inline InertiaReport parse_report(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("report: invalid JSON: ") + e.what());
  }
  try {
    return report_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("report: malformed document: ") + e.what());
  }
}

// Rows render in insertion order. Markdown shows CIs as "value ±half-width";
// CSV and JSON carry explicit low/high.
inline std::string emit(const InertiaReport& report, ReportFormat format) {
  if (report.rows.empty()) throw DataError("empty report");
  for (const MetricRow& row : report.rows) {
    if (!is_known_metric(row.metric)) {
      throw DataError("unknown metric name: " + row.metric);
    }
  }
  switch (format) {
    case ReportFormat::kJson:
      return report_to_json(report).dump(2) + "\n";
    case ReportFormat::kMarkdown: {
      std::string out = "| system | metric | value |\n|---|---|---|\n";
      for (const MetricRow& row : report.rows) {
        out += "| " + row.system + " | " + row.metric + " | " +
               report_detail::fixed4(row.value);
        if (row.ci) {
          out += " ±" + report_detail::fixed4(0.5 * (row.ci->high - row.ci->low));
        }
        out += " |\n";
      }
      return out;
    }
    case ReportFormat::kCsv: {
      std::string out = "system,metric,value,ci_low,ci_high\n";
      for (const MetricRow& row : report.rows) {
        out += row.system + "," + row.metric + "," +
               report_detail::full_precision(row.value) + ",";
        if (row.ci) {
          out += report_detail::full_precision(row.ci->low) + "," +
                 report_detail::full_precision(row.ci->high);
        } else {
          out += ",";
        }
        out += "\n";
      }
      return out;
    }
  }
  throw UsageError("emit: unknown format");
}

}  // namespace inertia

#endif  // INERTIA_REPORT_HPP_
