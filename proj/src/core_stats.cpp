#include "rssikit/core_stats.hpp"

#include <algorithm>
#include <cmath>

namespace rssikit {

RunningStats RunningStats::merged(const RunningStats& a, const RunningStats& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  RunningStats out;
  out.count = a.count + b.count;
  const double na = static_cast<double>(a.count);
  const double nb = static_cast<double>(b.count);
  const double delta = b.mean - a.mean;
  out.mean = a.mean + delta * nb / (na + nb);
  out.m2 = a.m2 + b.m2 + delta * delta * na * nb / (na + nb);
  return out;
}

std::vector<WindowStat> window_stats(std::span<const double> values,
                                     std::span<const std::int64_t> timestamps_ms,
                                     std::int64_t window_ms) {
  if (window_ms <= 0) throw ConfigError("window must be positive");
  if (values.size() != timestamps_ms.size())
    throw InputError("window_stats: values/timestamps size mismatch");
  if (values.empty()) return {};
  for (std::size_t i = 1; i < timestamps_ms.size(); ++i) {
    if (timestamps_ms[i] <= timestamps_ms[i - 1])
      throw InputError("window_stats: timestamps must be strictly increasing");
  }

  std::vector<WindowStat> out;
  const std::int64_t t0 = timestamps_ms.front();
  RunningStats acc;
  std::int64_t current = 0;  // window index
  auto flush = [&] {
    if (acc.count >= 2) out.push_back({acc.mean, acc.variance(), acc.count});
    acc = RunningStats{};
  };
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::int64_t w = (timestamps_ms[i] - t0) / window_ms;
    if (w != current) {
      flush();
      current = w;
    }
    acc.add(values[i]);
  }
  flush();
  return out;
}

double median(std::span<const double> values) {
  if (values.empty()) throw InputError("median of empty input");
  std::vector<double> v(values.begin(), values.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    // even length: mean of the two central order statistics
    const double lo = *std::max_element(v.begin(), v.begin() + mid);
    m = (lo + m) / 2.0;
  }
  return m;
}

double mad(std::span<const double> values) {
  const double m = median(values);
  std::vector<double> dev(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) dev[i] = std::abs(values[i] - m);
  return median(dev);
}

double quantile(std::span<const double> values, double q) {
  if (values.empty()) throw InputError("quantile of empty input");
  if (q < 0.0 || q > 1.0) throw InputError("quantile level outside [0, 1]");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= v.size()) return v.back();
  const double frac = pos - static_cast<double>(lo);
  return v[lo] + frac * (v[lo + 1] - v[lo]);
}

}  // namespace rssikit
