// Independent reference implementations used only by tests. Everything here
// is deliberately naive (two-pass sums, full-history recomputation) so a bug
// in the streaming code cannot hide in a shared helper.
#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

double mean(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v);  // two-pass, n-1

struct ReplayConfig {
  double alpha = 0.5;
  double delta = 0.05;
  bool paper_literal = false;   // additive sigma_z/sqrt(delta) vs 1/sqrt(delta)
  bool exclude_flagged = true;  // keep flagged deviations out of the z history
  bool closed_form = false;     // sigma_z from var(R)+var(E) instead of z history
  int warmup = 50;
};

// Sample-by-sample replay of the adaptive detection pipeline: EMA recurrence,
// absolute deviation, threshold from the history's naive statistics. Returns
// one flag per input sample.
std::vector<char> replay_flags(const std::vector<double>& rssi,
                               const ReplayConfig& config);

// Half-normal density with scale sigma (the std of the underlying signed
// difference), f(z) = 2 phi(z; sigma) for z >= 0.
double half_normal_pdf(double z, double sigma);

}  // namespace oracle
