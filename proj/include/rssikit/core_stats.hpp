#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "rssikit/errors.hpp"

namespace rssikit {

// Single-pass mean/variance accumulator (Welford). A pure value: copy it,
// merge it, move it between threads. m2 is the sum of squared deviations and
// stays non-negative under any update sequence.
struct RunningStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    if (!std::isfinite(x)) throw InputError("RunningStats: non-finite sample");
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  // Sample variance (n-1 denominator). Undefined below two samples.
  double variance() const {
    if (count < 2) throw DegenerateError("variance undefined for fewer than 2 samples");
    return m2 / static_cast<double>(count - 1);
  }

  double stddev() const { return std::sqrt(variance()); }

  // Chan's pairwise combination; order of the merge tree does not change the
  // result beyond floating-point noise.
  static RunningStats merged(const RunningStats& a, const RunningStats& b);
};

struct WindowStat {
  double mean = 0.0;
  double variance = 0.0;
  std::uint64_t count = 0;
};

// Partitions a timestamped series into consecutive windows of `window_ms`
// anchored at the first timestamp and returns per-window sample statistics.
// Windows holding fewer than two samples (including a short trailing window)
// are skipped. Timestamps must be strictly increasing.
std::vector<WindowStat> window_stats(std::span<const double> values,
                                     std::span<const std::int64_t> timestamps_ms,
                                     std::int64_t window_ms);

// Order-statistic median; mean of the two central values for even length.
double median(std::span<const double> values);

// Median absolute deviation from the median. No consistency scaling; callers
// that want Gaussian-comparable spread multiply by 1.4826 themselves.
double mad(std::span<const double> values);

// Linear-interpolation quantile (the common "type 7" rule), q in [0, 1].
double quantile(std::span<const double> values, double q);

}  // namespace rssikit
