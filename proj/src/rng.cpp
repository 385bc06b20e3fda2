#include "sppn/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace sppn::rng {

namespace {

// Sequential CDF inversion: u ~ U(0,1), walk the Poisson CDF until it passes
// u. Only called with mean small enough that exp(-mean) is representable.
std::uint64_t poisson_inversion(double mean, Stream& stream) {
  if (mean <= 0.0) return 0;
  const double u = stream.next_double();
  double p = std::exp(-mean);
  double cum = p;
  std::uint64_t k = 0;
  // The cap absorbs floating-point tail loss; u < 1 makes it unreachable in
  // practice.
  const std::uint64_t cap =
      static_cast<std::uint64_t>(mean + 12.0 * std::sqrt(mean) + 60.0);
  while (u > cum && k < cap) {
    ++k;
    p *= mean / static_cast<double>(k);
    cum += p;
  }
  return k;
}

}  // namespace

std::uint64_t Stream::poisson(double mean) {
  if (!std::isfinite(mean) || mean < 0.0)
    throw std::invalid_argument("poisson: mean must be finite and >= 0");
  std::uint64_t total = 0;
  while (mean > 400.0) {
    total += poisson_inversion(400.0, *this);
    mean -= 400.0;
  }
  total += poisson_inversion(mean, *this);
  return total;
}

Stream substream(std::uint64_t seed, std::uint64_t tag, std::uint64_t a, std::uint64_t b,
                 std::uint64_t c) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ tag);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return Stream(h);
}

}  // namespace sppn::rng
