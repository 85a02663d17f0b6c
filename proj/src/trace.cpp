#include "rssikit/trace.hpp"

#include <algorithm>

namespace rssikit {

bool Trace::sort_links() {
  bool disorder = false;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].node_id == samples[i - 1].node_id &&
        samples[i].timestamp_ms < samples[i - 1].timestamp_ms) {
      disorder = true;
      break;
    }
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const RssiSample& a, const RssiSample& b) {
                     if (a.node_id != b.node_id) return a.node_id < b.node_id;
                     return a.timestamp_ms < b.timestamp_ms;
                   });
  return disorder;
}

std::vector<LinkView> Trace::links() const {
  std::vector<LinkView> out;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= samples.size(); ++i) {
    if (i == samples.size() || samples[i].node_id != samples[begin].node_id) {
      out.push_back({samples[begin].node_id,
                     std::span<const RssiSample>(samples.data() + begin, i - begin)});
      begin = i;
    }
  }
  return out;
}

std::vector<double> Trace::values(std::size_t begin, std::size_t end) const {
  std::vector<double> out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) out.push_back(samples[i].rssi_dbm);
  return out;
}

}  // namespace rssikit
