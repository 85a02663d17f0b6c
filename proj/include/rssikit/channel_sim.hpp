#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rssikit/errors.hpp"
#include "rssikit/parallel.hpp"
#include "rssikit/trace.hpp"

namespace rssikit {

// Log-distance path loss: pl0 + 10 * n_exp * log10(d / d0). Requires
// d >= d0 > 0.
double path_loss(double d, double d0, double n_exp, double pl0);

struct Injection {
  double time_s = 0.0;
  double offset_db = 0.0;
};

struct InjectionLabel {
  std::int64_t timestamp_ms = 0;
  double offset_db = 0.0;
};

// Synthetic channel: rssi = p_tx - path_loss + shadow + noise, where shadow
// is AR(1) with stationary std shadow_sigma (innovation scaled by
// sqrt(1 - rho^2), started at 0) and noise is white Gaussian. Injections add
// offset_db at the sample nearest to time_s and are recorded as labels.
struct ChannelParams {
  double p_tx = 0.0;        // dBm
  double pl0 = 40.0;        // dB at the reference distance
  double d0 = 1.0;          // m
  double d = 10.0;          // m
  double n_exp = 2.0;       // path loss exponent
  double shadow_sigma = 0.0;  // dB
  double shadow_rho = 0.0;    // AR(1) coefficient in [0, 1)
  double noise_sigma = 0.0;   // dB
  double rate_hz = 25.0;
  double duration_s = 60.0;
  std::vector<Injection> outlier_inject;

  std::string node_id = "sim0";
  std::string radio = "SIM";
  std::string environment = "NA";

  void validate() const;
};

struct LabeledTrace {
  Trace trace;
  std::vector<InjectionLabel> labels;
};

// Deterministic for a fixed (params, seed): same inputs, bit-identical trace.
LabeledTrace simulate_trace(const ChannelParams& params, std::uint64_t seed);

// Packet rates follow the deployed node configurations; TX power is 0 dBm on
// all four platforms. noise_sigma encodes the per-packet RSSI measurement
// roughness of each radio.
struct RadioProfile {
  std::string name;
  double rate_hz = 0.0;
  double p_tx = 0.0;
  double noise_sigma = 0.0;
};

RadioProfile radio_profile(const std::string& name);
std::vector<RadioProfile> standard_radios();  // CC1200, CC2538, nRF52840, BLE

// Environment preset: shadowing depth/correlation, extra ambient noise, and
// path-loss law. Codes follow the deployment sites (bridge, forest, garden,
// lake, river, park, Rhine area, campus). The numbers are tuning knobs
// chosen to reproduce the qualitative contrast between cluttered and open
// sites, not field measurements.
struct EnvPreset {
  std::string code;
  double shadow_sigma = 1.0;
  double shadow_rho = 0.95;
  double noise_sigma = 0.3;
  double n_exp = 2.0;
  double d = 10.0;
};

EnvPreset env_preset(const std::string& code);
std::vector<EnvPreset> standard_envs();       // all eight codes
std::vector<EnvPreset> default_suite_envs();  // BG, FR, GG, LK, RV

struct SuiteParams {
  double duration_s = 120.0;
  // Injected outliers per trace, as a fraction of the sample count; keeps the
  // injected ground-truth rate comparable across packet rates.
  double inject_fraction = 0.01;
  double inject_min_db = 6.0;
  double inject_max_db = 14.0;
};

// Cartesian product of presets and radios. Each cell's seed is derived from
// (env code, radio name, seed), so reordering the input lists cannot change
// any trace. Cells are independent; Exec::openmp fills them concurrently.
std::vector<LabeledTrace> benchmark_suite(std::span<const EnvPreset> envs,
                                          std::span<const RadioProfile> radios,
                                          std::uint64_t seed,
                                          const SuiteParams& suite = {},
                                          Exec exec = Exec::serial);

}  // namespace rssikit
