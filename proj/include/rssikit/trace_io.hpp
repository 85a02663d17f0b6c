#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "rssikit/analysis.hpp"
#include "rssikit/channel_sim.hpp"
#include "rssikit/detector.hpp"
#include "rssikit/errors.hpp"
#include "rssikit/trace.hpp"

namespace rssikit {

// Every file this toolkit writes starts with a `# schema=<name>-v<major>`
// comment (or a schema_version field in JSON). Readers accept any file whose
// major version matches and reject the rest; files without the comment are
// treated as version 1.
inline constexpr int kSchemaMajor = 1;

struct RowError {
  std::size_t line = 0;
  std::string message;
};

struct ParseResult {
  Trace trace;
  std::vector<RowError> row_errors;
  std::vector<std::string> warnings;
};

// Trace CSV: header `timestamp_ms,node_id,radio,environment,rssi_dbm`,
// comma-separated, LF or CRLF. Malformed rows and rows outside the RSSI
// sanity bounds are collected with their line numbers; parsing continues.
// Out-of-order rows within a link are sorted with a warning. A missing or
// misnamed header column throws InputError.
ParseResult parse_trace_csv(std::istream& in);
ParseResult parse_trace_csv_file(const std::string& path);

void write_trace_csv(std::ostream& out, const Trace& trace);
void write_trace_csv_file(const std::string& path, const Trace& trace);

// Labels CSV: `timestamp_ms,offset_db`.
std::vector<InjectionLabel> parse_labels_csv(std::istream& in);
std::vector<InjectionLabel> parse_labels_csv_file(const std::string& path);
void write_labels_csv(std::ostream& out, const std::vector<InjectionLabel>& labels);
void write_labels_csv_file(const std::string& path,
                           const std::vector<InjectionLabel>& labels);

// Events CSV: `timestamp_ms,node_id,rssi_dbm,ema_prev_dbm,z_dbm,threshold_dbm,k`
// plus a trailing `method` column when method is non-empty (baseline output).
void write_events_csv(std::ostream& out, const std::vector<OutlierEvent>& events,
                      const std::string& method = "");
void write_events_csv_file(const std::string& path,
                           const std::vector<OutlierEvent>& events,
                           const std::string& method = "");

// JSON reports. Key order is fixed and documented in the README; doubles use
// shortest round-trip formatting, so identical inputs give identical bytes.
std::string summary_json(const DetectResult& result);

struct AnalyzeReport {
  // one stationarity report per link, keyed by node_id
  std::vector<std::pair<std::string, StationarityReport>> stationarity;
  std::string anova_group_key;
  std::vector<std::string> anova_group_names;
  std::optional<AnovaResult> anova;
  std::vector<std::string> warnings;
};

std::string report_json(const AnalyzeReport& report);
std::string comparison_json(const ComparisonReport& report);

// Box-plot-ready CSV: `method,radio,env,rate`.
void write_boxplot_csv(std::ostream& out, const ComparisonReport& report);
void write_boxplot_csv_file(const std::string& path, const ComparisonReport& report);

void write_text_file(const std::string& path, const std::string& content);

// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

}  // namespace rssikit
