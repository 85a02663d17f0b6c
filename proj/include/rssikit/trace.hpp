#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rssikit {

// Sanity bounds for raw RSSI. The lower edge sits below the most sensitive
// radio's floor (-123 dBm), the upper edge above any supported TX power.
inline constexpr double kRssiMinDbm = -130.0;
inline constexpr double kRssiMaxDbm = 10.0;

struct RssiSample {
  std::int64_t timestamp_ms = 0;
  std::string node_id;
  std::string radio;
  std::string environment;
  double rssi_dbm = 0.0;
};

// One directed link's samples: a contiguous, time-ordered slice of a Trace.
struct LinkView {
  std::string node_id;
  std::span<const RssiSample> samples;
};

// Samples grouped by node_id, time-ordered within each link.
struct Trace {
  std::vector<RssiSample> samples;

  // Groups by (node_id, timestamp). Stable, so equal timestamps keep file
  // order. Returns true when any link's timestamps were out of order.
  bool sort_links();

  std::vector<LinkView> links() const;

  std::vector<double> values(std::size_t begin, std::size_t end) const;
};

}  // namespace rssikit
