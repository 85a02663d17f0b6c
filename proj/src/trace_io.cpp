#include "rssikit/trace_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rssikit {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// `# schema=<name>-v<major>` comment; throws on a major-version mismatch.
bool check_schema_comment(const std::string& line, const std::string& name) {
  if (line.rfind("#", 0) != 0) return false;
  const std::string prefix = "# schema=" + name + "-v";
  if (line.rfind(prefix, 0) == 0) {
    const int major = std::atoi(line.c_str() + prefix.size());
    if (major != kSchemaMajor)
      throw InputError("unsupported " + name + " schema version v" +
                       std::to_string(major));
  }
  return true;  // any comment line is skipped
}

bool parse_int64(const std::string& s, std::int64_t& out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_number(const std::string& s, double& out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

constexpr const char* kTraceHeader = "timestamp_ms,node_id,radio,environment,rssi_dbm";
constexpr const char* kLabelsHeader = "timestamp_ms,offset_db";
constexpr const char* kEventsHeader =
    "timestamp_ms,node_id,rssi_dbm,ema_prev_dbm,z_dbm,threshold_dbm,k";

void expect_header(const std::string& got, const std::string& want,
                   const char* what) {
  const auto got_fields = split_csv_line(got);
  const auto want_fields = split_csv_line(want);
  for (std::size_t i = 0; i < want_fields.size(); ++i) {
    if (i >= got_fields.size() || got_fields[i] != want_fields[i])
      throw InputError(std::string(what) + ": missing or misnamed column '" +
                       want_fields[i] + "' in header");
  }
  if (got_fields.size() != want_fields.size())
    throw InputError(std::string(what) + ": unexpected extra header columns");
}

}  // namespace

ParseResult parse_trace_csv(std::istream& in) {
  ParseResult result;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (check_schema_comment(line, "trace")) continue;
    if (!header_seen) {
      expect_header(line, kTraceHeader, "trace csv");
      header_seen = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 5) {
      result.row_errors.push_back({line_no, "expected 5 fields, got " +
                                                std::to_string(fields.size())});
      continue;
    }
    RssiSample s;
    if (!parse_int64(fields[0], s.timestamp_ms)) {
      result.row_errors.push_back({line_no, "non-integer timestamp_ms"});
      continue;
    }
    if (s.timestamp_ms < 0) {
      result.row_errors.push_back({line_no, "negative timestamp_ms"});
      continue;
    }
    s.node_id = fields[1];
    s.radio = fields[2];
    s.environment = fields[3];
    if (s.node_id.empty()) {
      result.row_errors.push_back({line_no, "empty node_id"});
      continue;
    }
    if (!parse_number(fields[4], s.rssi_dbm)) {
      result.row_errors.push_back({line_no, "non-numeric rssi_dbm"});
      continue;
    }
    if (s.rssi_dbm < kRssiMinDbm || s.rssi_dbm > kRssiMaxDbm) {
      result.row_errors.push_back(
          {line_no, "rssi_dbm outside sanity bounds [-130, 10]"});
      continue;
    }
    result.trace.samples.push_back(std::move(s));
  }
  if (!header_seen) throw InputError("trace csv: missing header row");
  if (result.trace.sort_links())
    result.warnings.push_back("rows out of order within a link; sorted by timestamp");
  return result;
}

ParseResult parse_trace_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open trace file: " + path);
  return parse_trace_csv(in);
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
  out << "# schema=trace-v" << kSchemaMajor << "\n" << kTraceHeader << "\n";
  for (const auto& s : trace.samples) {
    out << s.timestamp_ms << ',' << s.node_id << ',' << s.radio << ','
        << s.environment << ',' << format_double(s.rssi_dbm) << "\n";
  }
}

void write_trace_csv_file(const std::string& path, const Trace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write trace file: " + path);
  write_trace_csv(out, trace);
}

std::vector<InjectionLabel> parse_labels_csv(std::istream& in) {
  std::vector<InjectionLabel> labels;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (check_schema_comment(line, "labels")) continue;
    if (!header_seen) {
      expect_header(line, kLabelsHeader, "labels csv");
      header_seen = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    InjectionLabel label;
    double offset = 0.0;
    if (fields.size() != 2 || !parse_int64(fields[0], label.timestamp_ms) ||
        !parse_number(fields[1], offset))
      throw InputError("labels csv: malformed row at line " + std::to_string(line_no));
    label.offset_db = offset;
    labels.push_back(label);
  }
  if (!header_seen) throw InputError("labels csv: missing header row");
  return labels;
}

std::vector<InjectionLabel> parse_labels_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open labels file: " + path);
  return parse_labels_csv(in);
}

void write_labels_csv(std::ostream& out, const std::vector<InjectionLabel>& labels) {
  out << "# schema=labels-v" << kSchemaMajor << "\n" << kLabelsHeader << "\n";
  for (const auto& l : labels)
    out << l.timestamp_ms << ',' << format_double(l.offset_db) << "\n";
}

void write_labels_csv_file(const std::string& path,
                           const std::vector<InjectionLabel>& labels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write labels file: " + path);
  write_labels_csv(out, labels);
}

void write_events_csv(std::ostream& out, const std::vector<OutlierEvent>& events,
                      const std::string& method) {
  out << "# schema=events-v" << kSchemaMajor << "\n"
      << kEventsHeader << (method.empty() ? "" : ",method") << "\n";
  for (const auto& e : events) {
    out << e.timestamp_ms << ',' << e.node_id << ',' << format_double(e.raw_rssi)
        << ',' << format_double(e.ema_prev) << ',' << format_double(e.z) << ','
        << format_double(e.threshold) << ',' << format_double(e.k);
    if (!method.empty()) out << ',' << method;
    out << "\n";
  }
}

void write_events_csv_file(const std::string& path,
                           const std::vector<OutlierEvent>& events,
                           const std::string& method) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write events file: " + path);
  write_events_csv(out, events, method);
}

namespace {

// NaN is not representable in JSON; degenerate estimates come out as null.
ordered_json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

ordered_json warnings_json(const std::vector<StreamWarning>& warnings) {
  ordered_json arr = ordered_json::array();
  for (const auto& w : warnings) {
    ordered_json j;
    j["node_id"] = w.node_id;
    j["message"] = w.message;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

std::string summary_json(const DetectResult& result) {
  ordered_json root;
  root["schema_version"] = kSchemaMajor;
  ordered_json links = ordered_json::array();
  for (const auto& s : result.summaries) {
    ordered_json j;
    j["node_id"] = s.node_id;
    j["n_samples"] = s.n_samples;
    j["n_outliers"] = s.n_outliers;
    j["rate"] = json_number(s.rate);
    j["alpha"] = json_number(s.alpha);
    j["k"] = json_number(s.k);
    j["sigma_z"] = json_number(s.sigma_z);
    j["eta_z"] = json_number(s.eta_z);
    links.push_back(std::move(j));
  }
  root["links"] = std::move(links);
  root["warnings"] = warnings_json(result.warnings);
  return root.dump(2) + "\n";
}

std::string report_json(const AnalyzeReport& report) {
  ordered_json root;
  root["schema_version"] = kSchemaMajor;

  ordered_json stat = ordered_json::array();
  for (const auto& [node_id, rep] : report.stationarity) {
    ordered_json j;
    j["node_id"] = node_id;
    j["global_delta_mean"] = json_number(rep.global_delta_mean);
    j["global_delta_var"] = json_number(rep.global_delta_var);
    j["global_n"] = rep.global_n;
    ordered_json entries = ordered_json::array();
    for (const auto& e : rep.entries) {
      ordered_json je;
      je["window_s"] = e.window_s;
      je["delta_mean"] = json_number(e.delta_mean);
      je["delta_var"] = json_number(e.delta_var);
      je["n_samples"] = e.n_samples;
      je["n_windows"] = e.n_windows;
      ordered_json hist = ordered_json::array();
      for (const auto& [bin, count] : e.histogram) {
        ordered_json jb;
        jb["bin_dbm"] = bin;
        jb["count"] = count;
        hist.push_back(std::move(jb));
      }
      je["histogram"] = std::move(hist);
      entries.push_back(std::move(je));
    }
    j["windows"] = std::move(entries);
    ordered_json warn = ordered_json::array();
    for (const auto& w : rep.warnings) warn.push_back(w);
    j["warnings"] = std::move(warn);
    stat.push_back(std::move(j));
  }
  root["stationarity"] = std::move(stat);

  if (report.anova) {
    ordered_json j;
    j["group_by"] = report.anova_group_key;
    ordered_json names = ordered_json::array();
    for (const auto& n : report.anova_group_names) names.push_back(n);
    j["groups"] = std::move(names);
    j["f_stat"] = json_number(report.anova->f_stat);
    j["df_between"] = report.anova->df_between;
    j["df_within"] = report.anova->df_within;
    j["p_value"] = json_number(report.anova->p_value);
    root["anova"] = std::move(j);
  } else {
    root["anova"] = nullptr;
  }

  ordered_json warn = ordered_json::array();
  for (const auto& w : report.warnings) warn.push_back(w);
  root["warnings"] = std::move(warn);
  return root.dump(2) + "\n";
}

std::string comparison_json(const ComparisonReport& report) {
  ordered_json root;
  root["schema_version"] = kSchemaMajor;

  ordered_json cells = ordered_json::array();
  for (const auto& c : report.cells) {
    ordered_json j;
    j["method"] = c.method;
    j["radio"] = c.radio;
    j["env"] = c.environment;
    j["node_id"] = c.node_id;
    j["detection_rate"] = json_number(c.detection_rate);
    j["precision"] = c.precision ? json_number(*c.precision) : ordered_json(nullptr);
    j["recall"] = c.recall ? json_number(*c.recall) : ordered_json(nullptr);
    j["n_flagged"] = c.n_flagged;
    j["n_injected"] = c.n_injected;
    j["n_true_positive"] = c.n_true_positive;
    j["n_eligible"] = c.n_eligible;
    cells.push_back(std::move(j));
  }
  root["cells"] = std::move(cells);

  ordered_json summaries = ordered_json::array();
  for (const auto& s : report.summaries) {
    ordered_json j;
    j["method"] = s.method;
    j["median"] = json_number(s.median);
    j["q1"] = json_number(s.q1);
    j["q3"] = json_number(s.q3);
    j["min"] = json_number(s.min);
    j["max"] = json_number(s.max);
    summaries.push_back(std::move(j));
  }
  root["summaries"] = std::move(summaries);

  ordered_json warn = ordered_json::array();
  for (const auto& w : report.warnings) warn.push_back(w);
  root["warnings"] = std::move(warn);
  return root.dump(2) + "\n";
}

void write_boxplot_csv(std::ostream& out, const ComparisonReport& report) {
  out << "# schema=boxplot-v" << kSchemaMajor << "\nmethod,radio,env,rate\n";
  for (const auto& c : report.cells) {
    out << c.method << ',' << c.radio << ',' << c.environment << ','
        << format_double(c.detection_rate) << "\n";
  }
}

void write_boxplot_csv_file(const std::string& path, const ComparisonReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write boxplot file: " + path);
  write_boxplot_csv(out, report);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

}  // namespace rssikit
