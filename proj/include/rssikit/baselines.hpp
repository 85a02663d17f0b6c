#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rssikit/detector.hpp"
#include "rssikit/trace.hpp"

namespace rssikit {

enum class BaselineMethod { basic_ema, zscore, moving_average, mad };

std::string baseline_method_name(BaselineMethod m);

// The four comparison detectors behind one entry point. All are causal:
// every statistic a sample is scored against comes from strictly earlier
// samples. `threshold` is in multiples of the method's dispersion measure,
// except basic_ema where it is an absolute deviation in dBm.
struct BaselineConfig {
  BaselineMethod method = BaselineMethod::zscore;
  double threshold = 3.0;
  int window = 25;         // moving_average, mad
  double fixed_alpha = 0.5;  // basic_ema
  int warmup = 50;

  void validate() const;
};

struct BaselineResult {
  std::vector<OutlierEvent> events;
  std::uint64_t degenerate_steps = 0;  // zero-dispersion steps that could not score
  std::vector<StreamWarning> warnings;
};

BaselineResult baseline_detect(const Trace& trace, const BaselineConfig& config);

}  // namespace rssikit
