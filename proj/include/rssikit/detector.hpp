#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rssikit/core_stats.hpp"
#include "rssikit/ema.hpp"
#include "rssikit/errors.hpp"
#include "rssikit/parallel.hpp"
#include "rssikit/trace.hpp"

namespace rssikit {

// How the printed sensitivity formula treats the additive term. The printed
// form adds sigma_z / sqrt(delta); solving delta = sigma_z^2 / eps^2 for the
// margin eps instead gives an additive 1 / sqrt(delta). Both are shipped;
// they coincide at sigma_z = 1.
enum class KMode { paper_literal, derivation_consistent };

// Where the detector takes eta_z / sigma_z from: the running statistics of
// the observed deviation stream (default), or the closed form
// sigma_z^2 = var(R) + var(E) with the half-normal mean eta_z = sigma_z *
// sqrt(2/pi), which assumes independent equal-mean Gaussian inputs.
enum class SigmaZSource { z_stream, closed_form };

enum class Normalization { none, zscore, minmax };

struct DetectorConfig {
  double delta = 0.05;
  KMode k_mode = KMode::derivation_consistent;
  AlphaPolicy alpha_policy;
  int warmup = 50;
  bool exclude_outliers_from_stats = true;
  Normalization normalization = Normalization::none;
  SigmaZSource sigma_z_source = SigmaZSource::z_stream;

  void validate() const;
};

struct DetectorState {
  EmaState ema;
  RunningStats stats_r;  // raw samples
  RunningStats stats_e;  // filter outputs (feeds the closed-form estimator)
  RunningStats stats_z;  // deviations
  double alpha = 0.5;
  std::uint64_t samples_seen = 0;
};

struct OutlierEvent {
  std::int64_t timestamp_ms = 0;
  std::string node_id;
  double raw_rssi = 0.0;
  double ema_prev = 0.0;
  double z = 0.0;
  double threshold = 0.0;
  double k = 0.0;
};

// |r - e_prev|, the deviation of a fresh measurement from the prediction.
inline double deviation(double r, double e_prev) {
  if (!std::isfinite(r) || !std::isfinite(e_prev))
    throw InputError("deviation: non-finite input");
  return std::abs(r - e_prev);
}

// Half-normal scale of the deviation for independent inputs:
// sqrt(var_r + var_e).
inline double sigma_z(double var_r, double var_e) {
  if (var_r < 0.0 || var_e < 0.0) throw InputError("sigma_z: negative variance");
  return std::sqrt(var_r + var_e);
}

// Threshold multiplier: an outlier is z >= k * sigma_z. Grows with the
// deviation spread (in paper_literal mode) and shrinks with the confidence
// level delta.
double sensitivity_k(double eta_z, double sigma_z, double delta, KMode mode);

struct StepResult {
  bool flagged = false;
  std::optional<OutlierEvent> event;
};

// One causal step: score the sample against statistics of strictly earlier
// samples, then fold it in. The filter is always updated, flagged or not;
// flagged deviations are kept out of the z statistics unless configured
// otherwise. Never flags before `warmup` samples or while the deviation
// spread is still undefined or zero.
StepResult detect_step(DetectorState& state, const RssiSample& sample,
                       const DetectorConfig& config);

struct LinkSummary {
  std::string node_id;
  std::uint64_t n_samples = 0;
  std::uint64_t n_outliers = 0;
  double rate = 0.0;
  double alpha = 0.0;
  double k = 0.0;        // multiplier from the end-of-stream estimates
  double sigma_z = 0.0;  // end-of-stream spread estimate
  double eta_z = 0.0;    // end-of-stream mean deviation
  int calibration_iterations = 0;
  bool calibration_converged = true;
};

struct StreamWarning {
  std::string node_id;
  std::string message;
};

struct DetectResult {
  std::vector<OutlierEvent> events;
  std::vector<LinkSummary> summaries;
  std::vector<StreamWarning> warnings;
};

// Returns a copy of the trace with each link's values transformed. zscore
// maps to zero mean / unit sample variance, minmax to [0, 1]. Degenerate
// links (zero spread) are left untouched and reported.
Trace normalize_trace(const Trace& trace, Normalization mode,
                      std::vector<StreamWarning>& warnings);

// Full pipeline over a multi-link trace: optional normalization, alpha
// calibration on the warm-up prefix, then a sequential fold of detect_step
// per link. Links run independently, so Exec::openmp processes them
// concurrently with identical output. Links shorter than warmup, and links
// whose calibration prefix is degenerate, are skipped with a warning.
DetectResult detect_stream(const Trace& trace, const DetectorConfig& config,
                           Exec exec = Exec::serial);

}  // namespace rssikit
