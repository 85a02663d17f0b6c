// rssikit — streaming RSSI link-quality outlier detection toolkit.
//
// Subcommands:
//   simulate   synthetic channel traces (single link or benchmark suite)
//   detect     adaptive EMA / Chebyshev outlier detection over a trace CSV
//   analyze    stationarity windows and one-way ANOVA
//   compare    adaptive detector vs the four baselines over a labeled suite

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rssikit/analysis.hpp"
#include "rssikit/baselines.hpp"
#include "rssikit/channel_sim.hpp"
#include "rssikit/config_file.hpp"
#include "rssikit/detector.hpp"
#include "rssikit/errors.hpp"
#include "rssikit/parallel.hpp"
#include "rssikit/trace_io.hpp"

namespace fs = std::filesystem;
using namespace rssikit;

namespace {

std::string labels_path_for(const std::string& trace_path) {
  fs::path p(trace_path);
  fs::path stem = p;
  stem.replace_extension();
  return stem.string() + ".labels.csv";
}

std::vector<Injection> parse_inject_spec(const std::string& spec) {
  // "t:offset,t:offset" with t in seconds and offset in dB
  std::vector<Injection> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError("--inject expects 't:offset[,t:offset...]', got '" + item + "'");
    try {
      out.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
    } catch (const std::exception&) {
      throw ConfigError("--inject: cannot parse '" + item + "'");
    }
  }
  return out;
}

std::vector<double> parse_window_list(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("--stationarity: cannot parse window '" + item + "'");
    }
  }
  return out;
}

void apply_alpha_flag(const std::string& spec, AlphaPolicy& policy) {
  if (spec == "calibrated") {
    policy.mode = AlphaMode::calibrated;
    return;
  }
  if (spec.rfind("fixed:", 0) == 0) {
    policy.mode = AlphaMode::fixed;
    try {
      policy.fixed_alpha = std::stod(spec.substr(6));
    } catch (const std::exception&) {
      throw ConfigError("--alpha: cannot parse '" + spec + "'");
    }
    return;
  }
  throw ConfigError("--alpha expects 'calibrated' or 'fixed:<value>'");
}

int run_simulate(const std::string& preset, const std::string& radio,
                 double duration, std::uint64_t seed, const std::string& inject,
                 double distance, const std::string& out_path,
                 const std::string& suite_dir, const ToolConfig& cfg) {
  if (!suite_dir.empty()) {
    auto envs = default_suite_envs();
    auto radios = standard_radios();
    SuiteParams sp = cfg.suite;
    sp.duration_s = duration;
    const auto traces = benchmark_suite(envs, radios, seed, sp, Exec::openmp);
    fs::create_directories(suite_dir);
    for (const auto& lt : traces) {
      const std::string stem = lt.trace.samples.front().node_id;
      const std::string trace_path = (fs::path(suite_dir) / (stem + ".csv")).string();
      write_trace_csv_file(trace_path, lt.trace);
      write_labels_csv_file(labels_path_for(trace_path), lt.labels);
    }
    std::cout << "wrote " << traces.size() << " traces to " << suite_dir << "\n";
    return 0;
  }

  const EnvPreset env = env_preset(preset);
  const RadioProfile rp = radio_profile(radio);
  ChannelParams params;
  params.p_tx = rp.p_tx;
  params.rate_hz = rp.rate_hz;
  params.d = distance > 0.0 ? distance : env.d;
  params.n_exp = env.n_exp;
  params.shadow_sigma = env.shadow_sigma;
  params.shadow_rho = env.shadow_rho;
  params.noise_sigma = std::hypot(env.noise_sigma, rp.noise_sigma);
  params.duration_s = duration;
  params.node_id = env.code + "-" + rp.name;
  params.radio = rp.name;
  params.environment = env.code;
  params.outlier_inject = parse_inject_spec(inject);

  const LabeledTrace lt = simulate_trace(params, seed);
  write_trace_csv_file(out_path, lt.trace);
  write_labels_csv_file(labels_path_for(out_path), lt.labels);
  std::cout << "wrote " << lt.trace.samples.size() << " samples to " << out_path
            << "\n";
  return 0;
}

int run_detect(const std::string& in_path, const std::string& events_path,
               const std::string& summary_path, const ToolConfig& cfg) {
  const ParseResult parsed = parse_trace_csv_file(in_path);
  for (const auto& e : parsed.row_errors)
    std::cerr << in_path << ":" << e.line << ": " << e.message << "\n";
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";

  const DetectResult result =
      detect_stream(parsed.trace, cfg.detector, Exec::openmp);
  if (!events_path.empty()) write_events_csv_file(events_path, result.events);
  if (!summary_path.empty()) write_text_file(summary_path, summary_json(result));
  for (const auto& w : result.warnings)
    std::cerr << "warning: " << w.node_id << ": " << w.message << "\n";
  std::cout << result.events.size() << " outliers across "
            << result.summaries.size() << " links\n";
  return 0;
}

int run_analyze(const std::string& in_path, const std::string& windows_spec,
                const std::string& anova_by, const std::string& out_path) {
  const ParseResult parsed = parse_trace_csv_file(in_path);
  for (const auto& e : parsed.row_errors)
    std::cerr << in_path << ":" << e.line << ": " << e.message << "\n";

  AnalyzeReport report;
  if (!windows_spec.empty()) {
    const std::vector<double> windows = parse_window_list(windows_spec);
    for (const LinkView& link : parsed.trace.links()) {
      std::vector<double> values;
      std::vector<std::int64_t> ts;
      values.reserve(link.samples.size());
      ts.reserve(link.samples.size());
      for (const auto& s : link.samples) {
        values.push_back(s.rssi_dbm);
        ts.push_back(s.timestamp_ms);
      }
      report.stationarity.emplace_back(link.node_id,
                                       stationarity_report(values, ts, windows));
    }
  }

  if (!anova_by.empty()) {
    auto key_of = [&](const RssiSample& s) -> const std::string& {
      if (anova_by == "environment") return s.environment;
      if (anova_by == "radio") return s.radio;
      if (anova_by == "node") return s.node_id;
      throw ConfigError("--anova-by must be environment|radio|node");
    };
    std::map<std::string, std::vector<double>> groups;
    for (const auto& s : parsed.trace.samples) groups[key_of(s)].push_back(s.rssi_dbm);
    if (groups.size() < 2) {
      report.warnings.push_back("anova skipped: fewer than 2 groups for key '" +
                                anova_by + "'");
    } else {
      std::vector<std::vector<double>> group_values;
      for (auto& [name, values] : groups) {
        report.anova_group_names.push_back(name);
        group_values.push_back(std::move(values));
      }
      report.anova_group_key = anova_by;
      report.anova = anova_oneway(group_values);
    }
  }

  write_text_file(out_path, report_json(report));
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_compare(const std::string& suite_dir, const std::string& out_path,
                const std::string& plot_path, const ToolConfig& cfg) {
  std::vector<std::string> trace_paths;
  for (const auto& entry : fs::directory_iterator(suite_dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string p = entry.path().string();
    if (p.size() >= 4 && p.ends_with(".csv") && !p.ends_with(".labels.csv"))
      trace_paths.push_back(p);
  }
  std::sort(trace_paths.begin(), trace_paths.end());
  if (trace_paths.empty())
    throw InputError("no trace csv files found in " + suite_dir);

  std::vector<LabeledTrace> traces;
  std::vector<std::string> warnings;
  for (const auto& p : trace_paths) {
    const std::string lp = labels_path_for(p);
    if (!fs::exists(lp)) {
      warnings.push_back("skipped " + p + ": missing labels file");
      continue;
    }
    LabeledTrace lt;
    lt.trace = parse_trace_csv_file(p).trace;
    lt.labels = parse_labels_csv_file(lp);
    traces.push_back(std::move(lt));
  }
  if (traces.empty()) throw InputError("no labeled traces in " + suite_dir);

  ComparisonReport report = compare_methods(traces, cfg.detector,
                                            cfg.baselines(), Exec::openmp);
  for (auto& w : warnings) report.warnings.push_back(std::move(w));
  write_text_file(out_path, comparison_json(report));
  if (!plot_path.empty()) write_boxplot_csv_file(plot_path, report);
  std::cout << "compared " << traces.size() << " traces, wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RSSI link-quality outlier detection toolkit"};
  app.require_subcommand(1);

  ToolConfig cfg;
  std::string config_path;

  // simulate
  auto* sim = app.add_subcommand("simulate", "generate synthetic RSSI traces");
  std::string sim_preset = "RV";
  std::string sim_radio = "CC2538";
  double sim_duration = 120.0;
  std::uint64_t sim_seed = 1;
  std::string sim_inject;
  std::string sim_out = "trace.csv";
  std::string sim_suite_dir;
  double sim_distance = 0.0;
  sim->add_option("--preset", sim_preset, "environment preset (BG FR GG LK RV PP RA CA)");
  sim->add_option("--radio", sim_radio, "radio profile (CC1200 CC2538 nRF52840 BLE)");
  sim->add_option("--duration", sim_duration, "trace duration in seconds");
  sim->add_option("--seed", sim_seed, "RNG seed");
  sim->add_option("--inject", sim_inject, "injected outliers, 't:offset_db,...'");
  sim->add_option("--distance", sim_distance, "override link distance in meters");
  sim->add_option("-o,--out", sim_out, "output trace csv (labels written alongside)");
  sim->add_option("--suite", sim_suite_dir,
                  "write the 5-env x 4-radio benchmark suite to this directory");

  // detect
  auto* det = app.add_subcommand("detect", "run the adaptive outlier detector");
  std::string det_in;
  std::string det_events = "events.csv";
  std::string det_summary = "summary.json";
  std::string det_alpha_spec;
  std::string det_kmode;
  std::string det_normalize;
  std::string det_sigma_source;
  double det_delta = 0.0;
  int det_warmup = 0;
  det->add_option("-i,--in", det_in, "input trace csv")->required();
  det->add_option("--delta", det_delta, "confidence level in (0,1)");
  det->add_option("--k-mode", det_kmode, "sensitivity formula: literal|derived");
  det->add_option("--alpha", det_alpha_spec, "'calibrated' or 'fixed:<value>'");
  det->add_option("--warmup", det_warmup, "warm-up samples before flagging");
  det->add_option("--normalize", det_normalize, "none|zscore|minmax");
  det->add_option("--sigma-z", det_sigma_source,
                  "spread estimator: zstream|closedform");
  det->add_option("-o,--out", det_events, "events csv output");
  det->add_option("--summary", det_summary, "summary json output");

  // analyze
  auto* ana = app.add_subcommand("analyze", "stationarity and ANOVA reports");
  std::string ana_in;
  std::string ana_windows;
  std::string ana_by;
  std::string ana_out = "report.json";
  ana->add_option("-i,--in", ana_in, "input trace csv")->required();
  ana->add_option("--stationarity", ana_windows,
                  "window sizes in seconds, e.g. 30,60,90,120,150");
  ana->add_option("--anova-by", ana_by, "grouping key: environment|radio|node");
  ana->add_option("-o,--out", ana_out, "report json output");

  // compare
  auto* cmp = app.add_subcommand("compare", "five-method comparison over a suite");
  std::string cmp_suite;
  std::string cmp_out = "comparison.json";
  std::string cmp_plot;
  cmp->add_option("--suite", cmp_suite, "directory of trace + labels csv files")
      ->required();
  cmp->add_option("-o,--out", cmp_out, "comparison json output");
  cmp->add_option("--plot-data", cmp_plot, "box-plot-ready csv output");

  for (auto* sub : {sim, det, ana, cmp})
    sub->add_option("--config", config_path, "key = value config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    // flags override file values
    if (det->count("--delta") > 0) cfg.detector.delta = det_delta;
    if (det->count("--warmup") > 0) cfg.detector.warmup = det_warmup;
    if (!det_kmode.empty()) cfg.detector.k_mode = parse_k_mode(det_kmode);
    if (!det_normalize.empty())
      cfg.detector.normalization = parse_normalization(det_normalize);
    if (!det_sigma_source.empty())
      cfg.detector.sigma_z_source = parse_sigma_z_source(det_sigma_source);
    if (!det_alpha_spec.empty())
      apply_alpha_flag(det_alpha_spec, cfg.detector.alpha_policy);

    if (sim->parsed())
      return run_simulate(sim_preset, sim_radio, sim_duration, sim_seed, sim_inject,
                          sim_distance, sim_out, sim_suite_dir, cfg);
    if (det->parsed()) {
      cfg.detector.validate();
      return run_detect(det_in, det_events, det_summary, cfg);
    }
    if (ana->parsed()) return run_analyze(ana_in, ana_windows, ana_by, ana_out);
    if (cmp->parsed()) return run_compare(cmp_suite, cmp_out, cmp_plot, cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
