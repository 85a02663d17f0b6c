#include "rssikit/detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rssikit {

void DetectorConfig::validate() const {
  if (!(delta > 0.0) || !(delta < 1.0))
    throw ConfigError("delta must lie in (0, 1)");
  if (warmup < 2) throw ConfigError("warmup must be at least 2 samples");
  alpha_policy.validate();
}

double sensitivity_k(double eta_z, double sigma_z, double delta, KMode mode) {
  if (!(sigma_z > 0.0)) throw DegenerateError("sensitivity_k: sigma_z is zero");
  if (!(delta > 0.0) || !(delta < 1.0))
    throw ConfigError("delta must lie in (0, 1)");
  if (eta_z < 0.0) throw InputError("sensitivity_k: negative eta_z");
  const double additive =
      mode == KMode::paper_literal ? sigma_z / std::sqrt(delta) : 1.0 / std::sqrt(delta);
  return eta_z / sigma_z + additive;
}

namespace {

constexpr double kHalfNormalMeanFactor = 0.7978845608028654;  // sqrt(2/pi)

// End-of-stream (or mid-stream) estimates of the deviation mean and spread.
// Returns false while the configured estimator is still undefined.
bool z_moments(const DetectorState& state, const DetectorConfig& config,
               double& eta_z_out, double& sigma_z_out) {
  if (config.sigma_z_source == SigmaZSource::z_stream) {
    if (state.stats_z.count < 2) return false;
    eta_z_out = state.stats_z.mean;
    sigma_z_out = std::sqrt(state.stats_z.variance());
  } else {
    if (state.stats_r.count < 2 || state.stats_e.count < 2) return false;
    sigma_z_out = sigma_z(state.stats_r.variance(), state.stats_e.variance());
    eta_z_out = sigma_z_out * kHalfNormalMeanFactor;
  }
  return true;
}

}  // namespace

StepResult detect_step(DetectorState& state, const RssiSample& sample,
                       const DetectorConfig& config) {
  StepResult result;
  const double r = sample.rssi_dbm;
  if (!std::isfinite(r)) throw InputError("detect_step: non-finite RSSI");

  if (!state.ema.initialized) {
    state.ema.step(r, state.alpha);
    state.stats_r.add(r);
    state.stats_e.add(state.ema.value);
    state.samples_seen = 1;
    return result;  // the first sample defines the filter, never flags
  }

  const double e_prev = state.ema.value;
  const double z = deviation(r, e_prev);

  // Score against statistics of strictly earlier samples.
  double eta_z = 0.0;
  double sz = 0.0;
  if (state.samples_seen >= static_cast<std::uint64_t>(config.warmup) &&
      z_moments(state, config, eta_z, sz) && sz > 0.0) {
    const double k = sensitivity_k(eta_z, sz, config.delta, config.k_mode);
    const double threshold = k * sz;
    if (z >= threshold) {
      result.flagged = true;
      result.event = OutlierEvent{sample.timestamp_ms, sample.node_id, r,
                                  e_prev, z, threshold, k};
    }
  }

  state.ema.step(r, state.alpha);
  state.stats_r.add(r);
  state.stats_e.add(state.ema.value);
  if (!result.flagged || !config.exclude_outliers_from_stats) state.stats_z.add(z);
  ++state.samples_seen;
  return result;
}

Trace normalize_trace(const Trace& trace, Normalization mode,
                      std::vector<StreamWarning>& warnings) {
  Trace out = trace;
  if (mode == Normalization::none) return out;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= out.samples.size(); ++i) {
    if (i < out.samples.size() &&
        out.samples[i].node_id == out.samples[begin].node_id)
      continue;
    const std::span<RssiSample> link(out.samples.data() + begin, i - begin);
    if (mode == Normalization::zscore) {
      RunningStats stats;
      for (const auto& s : link) stats.add(s.rssi_dbm);
      const double sd = stats.count >= 2 ? std::sqrt(stats.variance()) : 0.0;
      if (sd > 0.0) {
        for (auto& s : link) s.rssi_dbm = (s.rssi_dbm - stats.mean) / sd;
      } else {
        warnings.push_back({link.front().node_id,
                            "zero variance, link left unnormalized"});
      }
    } else {  // minmax
      auto [lo, hi] = std::minmax_element(
          link.begin(), link.end(),
          [](const RssiSample& a, const RssiSample& b) { return a.rssi_dbm < b.rssi_dbm; });
      const double span = hi->rssi_dbm - lo->rssi_dbm;
      if (span > 0.0) {
        const double min = lo->rssi_dbm;
        for (auto& s : link) s.rssi_dbm = (s.rssi_dbm - min) / span;
      } else {
        warnings.push_back({link.front().node_id,
                            "zero range, link left unnormalized"});
      }
    }
    begin = i;
  }
  return out;
}

namespace {

struct LinkOutcome {
  std::vector<OutlierEvent> events;
  std::optional<LinkSummary> summary;
  std::vector<StreamWarning> warnings;
};

LinkOutcome run_link(const LinkView& link, const DetectorConfig& config) {
  LinkOutcome out;
  const auto n = link.samples.size();
  if (n < static_cast<std::size_t>(config.warmup)) {
    out.warnings.push_back(
        {link.node_id, "fewer samples than warmup, link excluded"});
    return out;
  }

  DetectorState state;
  LinkSummary summary;
  summary.node_id = link.node_id;
  summary.n_samples = n;

  if (config.alpha_policy.mode == AlphaMode::calibrated) {
    std::vector<double> prefix;
    prefix.reserve(config.warmup);
    for (int i = 0; i < config.warmup; ++i)
      prefix.push_back(link.samples[i].rssi_dbm);
    try {
      const CalibrationResult cal = calibrate_alpha(prefix, config.alpha_policy);
      state.alpha = cal.alpha;
      summary.calibration_iterations = cal.iterations;
      summary.calibration_converged = cal.converged;
      if (!cal.converged)
        out.warnings.push_back({link.node_id, "alpha calibration did not converge"});
    } catch (const DegenerateError&) {
      out.warnings.push_back(
          {link.node_id, "degenerate calibration prefix, link excluded"});
      return out;
    }
  } else {
    state.alpha = config.alpha_policy.fixed_alpha;
  }

  for (const auto& sample : link.samples) {
    StepResult step = detect_step(state, sample, config);
    if (step.flagged) out.events.push_back(std::move(*step.event));
  }

  summary.n_outliers = out.events.size();
  const auto eligible = n - static_cast<std::size_t>(config.warmup);
  summary.rate = eligible > 0
                     ? static_cast<double>(summary.n_outliers) / static_cast<double>(eligible)
                     : 0.0;
  summary.alpha = state.alpha;
  double eta = 0.0, sz = 0.0;
  if (z_moments(state, config, eta, sz) && sz > 0.0) {
    summary.eta_z = eta;
    summary.sigma_z = sz;
    summary.k = sensitivity_k(eta, sz, config.delta, config.k_mode);
  } else {
    summary.eta_z = std::numeric_limits<double>::quiet_NaN();
    summary.sigma_z = std::numeric_limits<double>::quiet_NaN();
    summary.k = std::numeric_limits<double>::quiet_NaN();
  }
  out.summary = std::move(summary);
  return out;
}

}  // namespace

DetectResult detect_stream(const Trace& trace, const DetectorConfig& config,
                           Exec exec) {
  config.validate();
  DetectResult result;
  Trace normalized =
      normalize_trace(trace, config.normalization, result.warnings);
  const std::vector<LinkView> links = normalized.links();

  std::vector<LinkOutcome> outcomes(links.size());
  for_index(static_cast<std::int64_t>(links.size()), exec,
            [&](std::int64_t i) { outcomes[i] = run_link(links[i], config); });

  for (auto& outcome : outcomes) {
    for (auto& e : outcome.events) result.events.push_back(std::move(e));
    if (outcome.summary) result.summaries.push_back(std::move(*outcome.summary));
    for (auto& w : outcome.warnings) result.warnings.push_back(std::move(w));
  }
  return result;
}

}  // namespace rssikit
