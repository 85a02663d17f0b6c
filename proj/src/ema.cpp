#include "rssikit/ema.hpp"

#include <cmath>
#include <vector>

#include "rssikit/core_stats.hpp"

namespace rssikit {

void AlphaPolicy::validate() const {
  if (!(clamp_lo > 0.0) || !(clamp_lo <= clamp_hi) || !(clamp_hi <= 1.0))
    throw ConfigError("alpha clamp must satisfy 0 < lo <= hi <= 1");
  check_alpha(pilot_alpha);
  if (mode == AlphaMode::fixed) check_alpha(fixed_alpha);
  if (!(tol > 0.0)) throw ConfigError("alpha tolerance must be positive");
  if (max_iter < 1) throw ConfigError("alpha max_iter must be at least 1");
}

namespace {

double filtered_variance(std::span<const double> prefix, double alpha) {
  EmaState ema;
  RunningStats stats;
  for (double r : prefix) stats.add(ema.step(r, alpha));
  return stats.variance();
}

}  // namespace

CalibrationResult calibrate_alpha(std::span<const double> prefix,
                                  const AlphaPolicy& policy) {
  policy.validate();
  if (prefix.size() < 2)
    throw DegenerateError("calibration prefix needs at least 2 samples");

  RunningStats raw;
  for (double r : prefix) raw.add(r);
  const double var_r = raw.variance();
  if (!(var_r > 0.0))
    throw DegenerateError("calibration prefix has zero variance");

  CalibrationResult result;
  double alpha = policy.clamp(policy.pilot_alpha);
  for (int it = 1; it <= policy.max_iter; ++it) {
    result.iterations = it;
    const double var_e = filtered_variance(prefix, alpha);
    const double next = policy.clamp(estimate_alpha(var_r, var_e));
    const bool done = std::abs(next - alpha) < policy.tol;
    alpha = next;
    if (done) {
      result.converged = true;
      break;
    }
  }
  result.alpha = alpha;
  return result;
}

}  // namespace rssikit
