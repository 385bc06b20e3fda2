#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace sppn::rng {

// SplitMix64 finalizer: full-avalanche mix of a 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a, used to turn purpose tags into substream constants at compile time.
constexpr std::uint64_t hash_tag(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline constexpr std::uint64_t kTagHppp = hash_tag("hppp-deploy");
inline constexpr std::uint64_t kTagLinkFading = hash_tag("link-fading");
inline constexpr std::uint64_t kTagAcoAnt = hash_tag("aco-ant");
inline constexpr std::uint64_t kTagRisPhases = hash_tag("ris-phases");

// Deterministic SplitMix64 stream. Streams are cheap to construct, so every
// consumer derives its own from (seed, tag, indices) and none are shared.
class Stream {
 public:
  explicit Stream(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Exponential with mean 1.
  double exp1() { return -std::log1p(-next_double()); }

  // Exact Poisson draw by CDF inversion; large means are split into chunks
  // (a sum of independent Poisson counts is Poisson with the summed mean).
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t state_;
};

// Independent substream for (seed, tag, indices): same inputs, same stream.
Stream substream(std::uint64_t seed, std::uint64_t tag, std::uint64_t a = 0,
                 std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace sppn::rng
