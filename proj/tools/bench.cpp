// Serial vs OpenMP timing for the batch kernels. Both paths must produce
// identical results; the harness checks that while it times them.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "rssikit/analysis.hpp"
#include "rssikit/channel_sim.hpp"
#include "rssikit/detector.hpp"
#include "rssikit/parallel.hpp"

using namespace rssikit;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Row {
  std::string name;
  double serial_ms;
  double openmp_ms;
  bool identical;
};

template <typename F>
Row run(const std::string& name, F&& kernel) {
  auto t0 = Clock::now();
  auto serial = kernel(Exec::serial);
  const double serial_ms = ms_since(t0);
  t0 = Clock::now();
  auto parallel = kernel(Exec::openmp);
  const double openmp_ms = ms_since(t0);
  return {name, serial_ms, openmp_ms, serial == parallel};
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", max_threads());
  std::vector<Row> rows;

  rows.push_back(run("monte_carlo_sigma_z (2e7 draws)", [](Exec exec) {
    const auto r = monte_carlo_sigma_z(2.0, 1.0, 20'000'000, 42, exec);
    return std::pair{r.scale_est, r.mean_abs_est};
  }));

  rows.push_back(run("benchmark_suite (20 traces, 300 s)", [](Exec exec) {
    SuiteParams sp;
    sp.duration_s = 300.0;
    const auto traces =
        benchmark_suite(default_suite_envs(), standard_radios(), 7, sp, exec);
    std::vector<double> checks;
    for (const auto& lt : traces)
      for (const auto& s : lt.trace.samples) checks.push_back(s.rssi_dbm);
    return checks;
  }));

  {
    SuiteParams sp;
    sp.duration_s = 300.0;
    const auto traces =
        benchmark_suite(default_suite_envs(), standard_radios(), 7, sp, Exec::openmp);
    Trace merged;
    for (const auto& lt : traces)
      merged.samples.insert(merged.samples.end(), lt.trace.samples.begin(),
                            lt.trace.samples.end());
    merged.sort_links();
    rows.push_back(run("detect_stream (20 links)", [&](Exec exec) {
      DetectorConfig cfg;
      const auto result = detect_stream(merged, cfg, exec);
      std::vector<double> checks;
      for (const auto& s : result.summaries) {
        checks.push_back(s.rate);
        checks.push_back(s.alpha);
        checks.push_back(s.k);
      }
      return checks;
    }));
  }

  rows.push_back(run("z_density_numeric (512-point grid)", [](Exec exec) {
    std::vector<double> grid(512);
    for (std::size_t i = 0; i < grid.size(); ++i)
      grid[i] = static_cast<double>(i) * 12.0 / static_cast<double>(grid.size());
    return z_density_numeric(-70.0, 2.0, -70.0, 1.0, grid, exec);
  }));

  std::printf("%-38s %12s %12s %9s %10s\n", "kernel", "serial (ms)", "openmp (ms)",
              "speedup", "identical");
  for (const auto& r : rows) {
    std::printf("%-38s %12.1f %12.1f %8.2fx %10s\n", r.name.c_str(), r.serial_ms,
                r.openmp_ms, r.serial_ms / r.openmp_ms,
                r.identical ? "yes" : "NO");
  }

  for (const auto& r : rows)
    if (!r.identical) {
      std::fprintf(stderr, "mismatch between serial and openmp results: %s\n",
                   r.name.c_str());
      return 1;
    }
  return 0;
}
