#pragma once

#include <iosfwd>
#include <string>

#include "rssikit/analysis.hpp"
#include "rssikit/baselines.hpp"
#include "rssikit/channel_sim.hpp"
#include "rssikit/detector.hpp"

namespace rssikit {

// All tunables reachable from a config file. CLI flags override whatever the
// file sets; the file overrides the built-in defaults.
struct ToolConfig {
  DetectorConfig detector;
  BaselineConfig zscore{.method = BaselineMethod::zscore, .threshold = 3.0};
  BaselineConfig moving_average{.method = BaselineMethod::moving_average,
                                .threshold = 3.0,
                                .window = 25};
  BaselineConfig mad{.method = BaselineMethod::mad, .threshold = 3.0, .window = 25};
  BaselineConfig basic_ema{.method = BaselineMethod::basic_ema,
                           .threshold = 2.0,
                           .fixed_alpha = 0.5};
  SuiteParams suite;

  std::vector<BaselineConfig> baselines() const {
    return {basic_ema, zscore, moving_average, mad};
  }
};

// Line-oriented `key = value` file with `[section]` headers, `#` or `;`
// comments. Unknown sections or keys are a ConfigError: a typo must not
// silently fall back to a default. Sections: [detector], [alpha],
// [baseline.zscore], [baseline.moving_average], [baseline.mad],
// [baseline.basic_ema], [suite].
void load_config(std::istream& in, ToolConfig& config);
void load_config_file(const std::string& path, ToolConfig& config);

// Enum spellings shared by the config file and CLI flags.
KMode parse_k_mode(const std::string& s);
Normalization parse_normalization(const std::string& s);
SigmaZSource parse_sigma_z_source(const std::string& s);

}  // namespace rssikit
