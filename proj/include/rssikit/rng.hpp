#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rssikit::rng {

// splitmix64 finalizer; used to decorrelate derived seeds.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable sub-stream seed: independent streams for (trace noise, injection
// placement, ...) derived from one user-facing seed.
inline std::uint64_t derive(std::uint64_t base, std::uint64_t stream) {
  return mix(base ^ mix(stream));
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seed for a (label_a, label_b) grid cell. Depends only on the labels and the
// base seed, never on list order.
inline std::uint64_t cell_seed(std::uint64_t base, std::string_view label_a,
                               std::string_view label_b) {
  return mix(base ^ mix(fnv1a(label_a)) ^ mix(fnv1a(label_b) << 1));
}

inline std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace rssikit::rng
