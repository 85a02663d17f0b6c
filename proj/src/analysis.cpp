#include "rssikit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "rssikit/core_stats.hpp"
#include "rssikit/numerics.hpp"
#include "rssikit/rng.hpp"

namespace rssikit {

StationarityReport stationarity_report(std::span<const double> values,
                                       std::span<const std::int64_t> timestamps_ms,
                                       std::span<const double> windows_s) {
  if (windows_s.empty()) throw InputError("stationarity_report: no window sizes");
  if (values.size() != timestamps_ms.size())
    throw InputError("stationarity_report: values/timestamps size mismatch");

  StationarityReport report;
  if (values.size() < 2) {
    report.warnings.push_back("series too short for differences");
    return report;
  }

  std::vector<double> delta(values.size() - 1);
  std::vector<std::int64_t> delta_ts(values.size() - 1);
  for (std::size_t i = 1; i < values.size(); ++i) {
    delta[i - 1] = values[i] - values[i - 1];
    delta_ts[i - 1] = timestamps_ms[i];
  }

  RunningStats global;
  for (double d : delta) global.add(d);
  report.global_delta_mean = global.mean;
  report.global_delta_var = global.count >= 2 ? global.variance() : 0.0;
  report.global_n = global.count;

  const std::int64_t span_ms = delta_ts.back() - delta_ts.front();
  const std::int64_t t0 = delta_ts.front();
  for (double w_s : windows_s) {
    if (!(w_s > 0.0)) throw ConfigError("window sizes must be positive");
    const auto w_ms = static_cast<std::int64_t>(std::llround(w_s * 1000.0));
    if (span_ms < w_ms) {
      report.warnings.push_back("window " + std::to_string(w_s) +
                                " s longer than series, omitted");
      continue;
    }

    StationarityEntry entry;
    entry.window_s = w_s;
    RunningStats pooled;  // mean over every counted delta sample
    double pooled_num = 0.0;
    double pooled_den = 0.0;

    std::size_t begin = 0;
    while (begin < delta.size()) {
      const std::int64_t w = (delta_ts[begin] - t0) / w_ms;
      std::size_t end = begin;
      while (end < delta.size() && (delta_ts[end] - t0) / w_ms == w) ++end;
      if (end - begin >= 2) {  // windows below two samples carry no variance
        RunningStats win;
        for (std::size_t i = begin; i < end; ++i) {
          win.add(delta[i]);
          pooled.add(delta[i]);
          ++entry.histogram[static_cast<int>(std::llround(delta[i]))];
        }
        pooled_num += win.variance() * static_cast<double>(win.count - 1);
        pooled_den += static_cast<double>(win.count - 1);
        entry.n_samples += win.count;
        ++entry.n_windows;
      }
      begin = end;
    }
    entry.delta_mean = pooled.count > 0 ? pooled.mean : 0.0;
    entry.delta_var = pooled_den > 0.0 ? pooled_num / pooled_den : 0.0;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

AnovaResult anova_oneway(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw InputError("anova_oneway: need at least 2 groups");
  for (const auto& g : groups)
    if (g.size() < 2)
      throw InputError("anova_oneway: every group needs at least 2 samples");

  RunningStats grand;
  std::vector<RunningStats> per_group(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (double x : groups[i]) {
      per_group[i].add(x);
      grand.add(x);
    }
  }

  double ssb = 0.0;
  double ssw = 0.0;
  for (const RunningStats& g : per_group) {
    const double d = g.mean - grand.mean;
    ssb += static_cast<double>(g.count) * d * d;
    ssw += g.m2;
  }

  AnovaResult out;
  out.df_between = static_cast<std::int64_t>(groups.size()) - 1;
  out.df_within =
      static_cast<std::int64_t>(grand.count) - static_cast<std::int64_t>(groups.size());

  if (ssw <= 0.0) {
    if (ssb <= 0.0) {  // all values identical
      out.f_stat = 0.0;
      out.p_value = 1.0;
    } else {  // groups differ but are internally constant
      out.f_stat = std::numeric_limits<double>::infinity();
      out.p_value = 0.0;
    }
    return out;
  }
  out.f_stat = (ssb / static_cast<double>(out.df_between)) /
               (ssw / static_cast<double>(out.df_within));
  out.p_value = f_distribution_sf(out.f_stat, static_cast<double>(out.df_between),
                                  static_cast<double>(out.df_within));
  return out;
}

std::pair<double, double> z_density_branches(double mu_r, double var_r,
                                             double mu_e, double var_e, double z) {
  if (!(var_r > 0.0) || !(var_e > 0.0))
    throw InputError("z_density: variances must be positive");
  if (z < 0.0) throw InputError("z_density: z must be non-negative");
  const double sd_r = std::sqrt(var_r);
  const double sd_e = std::sqrt(var_e);

  // The integrand is the product of two Gaussian bumps in the filtered
  // variable; restrict each branch to the overlap of their 10-sigma supports.
  auto branch = [&](double shift) {  // integrand f_R(E + shift) f_E(E)
    const double lo = std::max(mu_e - 10.0 * sd_e, mu_r - shift - 10.0 * sd_r);
    const double hi = std::min(mu_e + 10.0 * sd_e, mu_r - shift + 10.0 * sd_r);
    if (lo >= hi) return 0.0;
    return integrate(
        [&](double e) {
          return normal_pdf(e + shift, mu_r, var_r) * normal_pdf(e, mu_e, var_e);
        },
        lo, hi, 1e-12);
  };
  return {branch(z), branch(-z)};
}

std::vector<double> z_density_numeric(double mu_r, double var_r, double mu_e,
                                      double var_e, std::span<const double> grid,
                                      Exec exec) {
  if (!(var_r > 0.0) || !(var_e > 0.0))
    throw InputError("z_density_numeric: variances must be positive");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0) throw InputError("z_density_numeric: negative grid entry");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw InputError("z_density_numeric: grid must be increasing");
  }
  std::vector<double> out(grid.size());
  for_index(static_cast<std::int64_t>(grid.size()), exec, [&](std::int64_t i) {
    const auto [above, below] =
        z_density_branches(mu_r, var_r, mu_e, var_e, grid[i]);
    out[i] = above + below;
  });
  return out;
}

MonteCarloSigmaZ monte_carlo_sigma_z(double sigma_r, double sigma_e,
                                     std::uint64_t n_draws, std::uint64_t seed,
                                     Exec exec) {
  if (n_draws < 10000) throw InputError("monte_carlo_sigma_z: need >= 1e4 draws");
  if (sigma_r < 0.0 || sigma_e < 0.0)
    throw InputError("monte_carlo_sigma_z: negative sigma");

  constexpr std::uint64_t kChunk = 1 << 16;
  const std::uint64_t n_chunks = (n_draws + kChunk - 1) / kChunk;
  std::vector<double> sum_sq(n_chunks, 0.0);
  std::vector<double> sum_abs(n_chunks, 0.0);

  for_index(static_cast<std::int64_t>(n_chunks), exec, [&](std::int64_t c) {
    auto gen = rng::engine(rng::derive(seed, static_cast<std::uint64_t>(c)));
    std::normal_distribution<double> normal(0.0, 1.0);
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(begin + kChunk, n_draws);
    double sq = 0.0, ab = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double d = sigma_r * normal(gen) - sigma_e * normal(gen);
      sq += d * d;
      ab += std::abs(d);
    }
    sum_sq[c] = sq;
    sum_abs[c] = ab;
  });

  // fixed-order reduction keeps the result identical across thread counts
  double sq = 0.0, ab = 0.0;
  for (std::uint64_t c = 0; c < n_chunks; ++c) {
    sq += sum_sq[c];
    ab += sum_abs[c];
  }
  MonteCarloSigmaZ out;
  out.n_draws = n_draws;
  out.scale_est = std::sqrt(sq / static_cast<double>(n_draws));
  out.mean_abs_est = ab / static_cast<double>(n_draws);
  return out;
}

namespace {

MethodCell score_run(const LabeledTrace& lt, const std::string& method,
                     const std::vector<OutlierEvent>& events, int warmup) {
  MethodCell cell;
  cell.method = method;
  if (!lt.trace.samples.empty()) {
    cell.radio = lt.trace.samples.front().radio;
    cell.environment = lt.trace.samples.front().environment;
    cell.node_id = lt.trace.samples.front().node_id;
  }
  const auto n = lt.trace.samples.size();
  cell.n_eligible = n > static_cast<std::size_t>(warmup)
                        ? n - static_cast<std::size_t>(warmup)
                        : 0;
  cell.n_flagged = events.size();
  std::set<std::int64_t> injected;
  for (const auto& label : lt.labels) injected.insert(label.timestamp_ms);
  cell.n_injected = injected.size();
  for (const auto& e : events)
    if (injected.count(e.timestamp_ms)) ++cell.n_true_positive;

  cell.detection_rate =
      cell.n_eligible > 0
          ? static_cast<double>(cell.n_flagged) / static_cast<double>(cell.n_eligible)
          : 0.0;
  if (cell.n_flagged > 0)
    cell.precision = static_cast<double>(cell.n_true_positive) /
                     static_cast<double>(cell.n_flagged);
  if (cell.n_injected > 0)
    cell.recall = static_cast<double>(cell.n_true_positive) /
                  static_cast<double>(cell.n_injected);
  return cell;
}

}  // namespace

ComparisonReport compare_methods(std::span<const LabeledTrace> traces,
                                 const DetectorConfig& detector_config,
                                 std::span<const BaselineConfig> baseline_configs,
                                 Exec exec) {
  detector_config.validate();
  for (const auto& b : baseline_configs) b.validate();

  const std::size_t n_methods = 1 + baseline_configs.size();
  const std::size_t n_cells = traces.size() * n_methods;
  std::vector<MethodCell> cells(n_cells);

  for_index(static_cast<std::int64_t>(n_cells), exec, [&](std::int64_t idx) {
    const std::size_t t = static_cast<std::size_t>(idx) / n_methods;
    const std::size_t m = static_cast<std::size_t>(idx) % n_methods;
    const LabeledTrace& lt = traces[t];
    if (m == 0) {
      const DetectResult res = detect_stream(lt.trace, detector_config);
      cells[idx] = score_run(lt, "adaptive_ema", res.events, detector_config.warmup);
    } else {
      const BaselineConfig& cfg = baseline_configs[m - 1];
      const BaselineResult res = baseline_detect(lt.trace, cfg);
      cells[idx] =
          score_run(lt, baseline_method_name(cfg.method), res.events, cfg.warmup);
    }
  });

  ComparisonReport report;
  report.cells = std::move(cells);

  // quartile summary per method, methods sorted by name for stable output
  std::map<std::string, std::vector<double>> rates;
  for (const auto& c : report.cells) rates[c.method].push_back(c.detection_rate);
  for (auto& [method, values] : rates) {
    MethodSummary s;
    s.method = method;
    s.median = quantile(values, 0.5);
    s.q1 = quantile(values, 0.25);
    s.q3 = quantile(values, 0.75);
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    report.summaries.push_back(std::move(s));
  }
  return report;
}

}  // namespace rssikit
