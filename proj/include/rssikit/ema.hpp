#pragma once

#include <cmath>
#include <span>

#include "rssikit/errors.hpp"

namespace rssikit {

inline void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 1.0) || !std::isfinite(alpha))
    throw ConfigError("alpha must lie in (0, 1]");
}

// First-order IIR low-pass state. The first sample initializes the filter to
// itself; afterwards value = alpha * r + (1 - alpha) * value.
struct EmaState {
  double value = 0.0;
  bool initialized = false;

  double step(double r, double alpha) {
    check_alpha(alpha);
    if (!std::isfinite(r)) throw InputError("EMA input must be finite");
    if (!initialized) {
      value = r;
      initialized = true;
    } else {
      value = alpha * r + (1.0 - alpha) * value;
    }
    return value;
  }
};

// Var(filtered) / Var(raw) for an i.i.d. input in steady state: a / (2 - a).
inline double steady_state_variance_ratio(double alpha) {
  check_alpha(alpha);
  return alpha / (2.0 - alpha);
}

// Inverts the steady-state ratio: alpha = 2 var_e / (var_r + var_e).
// Raw value, no clamping; pair with AlphaPolicy::clamp for the policy view.
inline double estimate_alpha(double var_r, double var_e) {
  if (var_r < 0.0 || var_e < 0.0) throw InputError("variances must be non-negative");
  if (!(var_r + var_e > 0.0))
    throw DegenerateError("estimate_alpha: both variances are zero");
  return 2.0 * var_e / (var_r + var_e);
}

enum class AlphaMode { fixed, calibrated };

struct AlphaPolicy {
  AlphaMode mode = AlphaMode::calibrated;
  double fixed_alpha = 0.5;
  double pilot_alpha = 0.5;
  double clamp_lo = 0.05;
  double clamp_hi = 0.95;
  double tol = 1e-3;
  int max_iter = 20;

  void validate() const;
  double clamp(double alpha) const {
    return alpha < clamp_lo ? clamp_lo : (alpha > clamp_hi ? clamp_hi : alpha);
  }
};

inline double estimate_alpha(double var_r, double var_e, const AlphaPolicy& policy) {
  return policy.clamp(estimate_alpha(var_r, var_e));
}

struct CalibrationResult {
  double alpha = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Picks alpha for a link from its warm-up prefix: filter at the pilot alpha,
// measure Var(raw) and Var(filtered), re-estimate alpha from the ratio,
// re-filter, repeat until |delta alpha| < tol or max_iter. The result is
// always clamped; non-convergence is reported, not thrown. A zero-variance
// prefix is a DegenerateError (a dead link should be surfaced, not filtered).
CalibrationResult calibrate_alpha(std::span<const double> prefix, const AlphaPolicy& policy);

}  // namespace rssikit
