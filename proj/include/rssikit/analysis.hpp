#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rssikit/baselines.hpp"
#include "rssikit/channel_sim.hpp"
#include "rssikit/detector.hpp"
#include "rssikit/parallel.hpp"
#include "rssikit/trace.hpp"

namespace rssikit {

// Per-window-size statistics of the first difference of a link's RSSI.
// delta_mean is the mean over all complete windows of that size; delta_var is
// the pooled within-window sample variance, weighted by (n_i - 1). The
// histogram counts the same delta samples in 1 dBm bins centered on integers.
struct StationarityEntry {
  double window_s = 0.0;
  double delta_mean = 0.0;
  double delta_var = 0.0;
  std::uint64_t n_samples = 0;  // delta samples inside counted windows
  std::uint64_t n_windows = 0;
  std::map<int, std::uint64_t> histogram;  // bin center (dBm) -> count
};

struct StationarityReport {
  std::vector<StationarityEntry> entries;
  double global_delta_mean = 0.0;
  double global_delta_var = 0.0;
  std::uint64_t global_n = 0;
  std::vector<std::string> warnings;
};

// Window sizes longer than the series are omitted with a warning. The series
// must be a single link with increasing timestamps.
StationarityReport stationarity_report(std::span<const double> values,
                                       std::span<const std::int64_t> timestamps_ms,
                                       std::span<const double> windows_s);

struct AnovaResult {
  double f_stat = 0.0;  // +inf when within-group variance is zero but groups differ
  std::int64_t df_between = 0;
  std::int64_t df_within = 0;
  double p_value = 1.0;
};

// Classic one-way F test on k groups of samples. Needs at least two groups
// with two samples each.
AnovaResult anova_oneway(std::span<const std::vector<double>> groups);

// Density of z = |R - E| for independent Gaussian R and E, evaluated by
// numeric integration of the two branch integrals (R above / below E) over
// the filtered variable. Grid entries must be non-negative and increasing.
// Grid points are independent, so Exec::openmp evaluates them concurrently.
std::vector<double> z_density_numeric(double mu_r, double var_r, double mu_e,
                                      double var_e, std::span<const double> grid,
                                      Exec exec = Exec::serial);

// The two branches separately; with equal means they contribute equally.
std::pair<double, double> z_density_branches(double mu_r, double var_r,
                                             double mu_e, double var_e, double z);

struct MonteCarloSigmaZ {
  double scale_est = 0.0;     // std of the signed difference R - E
  double mean_abs_est = 0.0;  // E[|R - E|]
  std::uint64_t n_draws = 0;
};

// Sampling check of the deviation scale: draws independent zero-mean normals,
// forms |R - E|. Draws are generated in fixed-size chunks with per-chunk
// seeds and reduced in chunk order, so serial and openmp runs (any thread
// count) give bit-identical estimates. Requires n_draws >= 10^4.
MonteCarloSigmaZ monte_carlo_sigma_z(double sigma_r, double sigma_e,
                                     std::uint64_t n_draws, std::uint64_t seed,
                                     Exec exec = Exec::serial);

// One detector run scored against a trace's injected ground truth.
struct MethodCell {
  std::string method;
  std::string radio;
  std::string environment;
  std::string node_id;
  double detection_rate = 0.0;  // flagged / post-warmup samples
  std::optional<double> precision;
  std::optional<double> recall;
  std::uint64_t n_flagged = 0;
  std::uint64_t n_injected = 0;
  std::uint64_t n_true_positive = 0;
  std::uint64_t n_eligible = 0;
};

struct MethodSummary {
  std::string method;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct ComparisonReport {
  std::vector<MethodCell> cells;
  std::vector<MethodSummary> summaries;  // sorted by method name
  std::vector<std::string> warnings;
};

// Runs the adaptive detector plus every configured baseline over each labeled
// trace and aggregates rate / precision / recall per cell and quartiles per
// method. (trace, method) cells are independent; results live in pre-sized
// slots, so the report is identical under both Exec policies.
ComparisonReport compare_methods(std::span<const LabeledTrace> traces,
                                 const DetectorConfig& detector_config,
                                 std::span<const BaselineConfig> baseline_configs,
                                 Exec exec = Exec::serial);

}  // namespace rssikit
