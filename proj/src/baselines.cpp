#include "rssikit/baselines.hpp"

#include <cmath>
#include <deque>

#include "rssikit/core_stats.hpp"
#include "rssikit/ema.hpp"

namespace rssikit {

std::string baseline_method_name(BaselineMethod m) {
  switch (m) {
    case BaselineMethod::basic_ema: return "basic_ema";
    case BaselineMethod::zscore: return "zscore";
    case BaselineMethod::moving_average: return "moving_average";
    case BaselineMethod::mad: return "mad";
  }
  return "unknown";
}

void BaselineConfig::validate() const {
  if (!(threshold > 0.0)) throw ConfigError("baseline threshold must be positive");
  if (window < 2) throw ConfigError("baseline window must be at least 2");
  if (warmup < 1) throw ConfigError("baseline warmup must be at least 1");
  if (method == BaselineMethod::basic_ema) check_alpha(fixed_alpha);
}

namespace {

constexpr double kMadConsistency = 1.4826;  // Gaussian consistency constant

void push_event(BaselineResult& out, const RssiSample& s, double center,
                double z, double threshold, double k) {
  out.events.push_back(
      {s.timestamp_ms, s.node_id, s.rssi_dbm, center, z, threshold, k});
}

// z-score against running (causal) mean and std of all earlier samples.
void run_zscore(const LinkView& link, const BaselineConfig& cfg, BaselineResult& out) {
  RunningStats stats;
  std::uint64_t seen = 0;
  for (const auto& s : link.samples) {
    if (seen >= static_cast<std::uint64_t>(cfg.warmup) && stats.count >= 2) {
      const double sd = std::sqrt(stats.variance());
      if (sd > 0.0) {
        const double z = std::abs(s.rssi_dbm - stats.mean);
        const double threshold = cfg.threshold * sd;
        if (z >= threshold)
          push_event(out, s, stats.mean, z, threshold, cfg.threshold);
      } else {
        ++out.degenerate_steps;
      }
    }
    stats.add(s.rssi_dbm);
    ++seen;
  }
}

// Deviation from the mean of the trailing `window` samples, in units of that
// window's std. The current sample is excluded from its own window.
void run_moving_average(const LinkView& link, const BaselineConfig& cfg,
                        BaselineResult& out) {
  std::deque<double> win;
  std::uint64_t seen = 0;
  for (const auto& s : link.samples) {
    if (seen >= static_cast<std::uint64_t>(cfg.warmup) &&
        win.size() == static_cast<std::size_t>(cfg.window)) {
      RunningStats stats;
      for (double v : win) stats.add(v);
      const double sd = std::sqrt(stats.variance());
      if (sd > 0.0) {
        const double z = std::abs(s.rssi_dbm - stats.mean);
        const double threshold = cfg.threshold * sd;
        if (z >= threshold)
          push_event(out, s, stats.mean, z, threshold, cfg.threshold);
      } else {
        ++out.degenerate_steps;
      }
    }
    win.push_back(s.rssi_dbm);
    if (win.size() > static_cast<std::size_t>(cfg.window)) win.pop_front();
    ++seen;
  }
}

// Deviation from the trailing window's median, in units of 1.4826 * MAD.
void run_mad(const LinkView& link, const BaselineConfig& cfg, BaselineResult& out) {
  std::deque<double> win;
  std::vector<double> buf;
  std::uint64_t seen = 0;
  for (const auto& s : link.samples) {
    if (seen >= static_cast<std::uint64_t>(cfg.warmup) &&
        win.size() == static_cast<std::size_t>(cfg.window)) {
      buf.assign(win.begin(), win.end());
      const double med = median(buf);
      const double spread = kMadConsistency * mad(buf);
      if (spread > 0.0) {
        const double z = std::abs(s.rssi_dbm - med);
        const double threshold = cfg.threshold * spread;
        if (z >= threshold) push_event(out, s, med, z, threshold, cfg.threshold);
      } else {
        ++out.degenerate_steps;
      }
    }
    win.push_back(s.rssi_dbm);
    if (win.size() > static_cast<std::size_t>(cfg.window)) win.pop_front();
    ++seen;
  }
}

// The adaptive pipeline with both adaptations removed: fixed alpha, fixed
// threshold in dBm applied to the deviation directly.
void run_basic_ema(const LinkView& link, const BaselineConfig& cfg,
                   BaselineResult& out) {
  EmaState ema;
  std::uint64_t seen = 0;
  for (const auto& s : link.samples) {
    if (ema.initialized && seen >= static_cast<std::uint64_t>(cfg.warmup)) {
      const double z = std::abs(s.rssi_dbm - ema.value);
      if (z >= cfg.threshold)
        push_event(out, s, ema.value, z, cfg.threshold, cfg.threshold);
    }
    ema.step(s.rssi_dbm, cfg.fixed_alpha);
    ++seen;
  }
}

}  // namespace

BaselineResult baseline_detect(const Trace& trace, const BaselineConfig& config) {
  config.validate();
  BaselineResult out;
  for (const LinkView& link : trace.links()) {
    if (link.samples.size() < static_cast<std::size_t>(config.warmup)) {
      out.warnings.push_back(
          {link.node_id, "fewer samples than warmup, link excluded"});
      continue;
    }
    switch (config.method) {
      case BaselineMethod::zscore: run_zscore(link, config, out); break;
      case BaselineMethod::moving_average: run_moving_average(link, config, out); break;
      case BaselineMethod::mad: run_mad(link, config, out); break;
      case BaselineMethod::basic_ema: run_basic_ema(link, config, out); break;
    }
  }
  if (out.degenerate_steps > 0)
    out.warnings.push_back(
        {"", std::to_string(out.degenerate_steps) + " steps had zero dispersion"});
  return out;
}

}  // namespace rssikit
