#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sppn/rng.hpp"

using namespace sppn;

TEST_CASE("substreams are deterministic and tag-separated") {
  auto a1 = rng::substream(42, rng::kTagHppp, 3);
  auto a2 = rng::substream(42, rng::kTagHppp, 3);
  auto b = rng::substream(42, rng::kTagLinkFading, 3);
  auto c = rng::substream(43, rng::kTagHppp, 3);
  const auto x = a1.next_u64();
  CHECK(x == a2.next_u64());
  CHECK(x != b.next_u64());
  CHECK(x != c.next_u64());
}

TEST_CASE("next_double lies in [0, 1)") {
  auto s = rng::substream(7, rng::hash_tag("unit"));
  for (int i = 0; i < 10000; ++i) {
    const double u = s.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("exp1 has mean ~1") {
  auto s = rng::substream(11, rng::hash_tag("exp"));
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += s.exp1();
  CHECK(sum / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("poisson: zero mean gives zero") {
  auto s = rng::substream(1, rng::hash_tag("p0"));
  CHECK(s.poisson(0.0) == 0);
}

TEST_CASE("poisson: negative or non-finite mean is rejected") {
  auto s = rng::substream(1, rng::hash_tag("pbad"));
  CHECK_THROWS_AS(s.poisson(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(s.poisson(std::nan("")), std::invalid_argument);
}

TEST_CASE("poisson: small-mean sample mean") {
  auto s = rng::substream(5, rng::hash_tag("psmall"));
  const int n = 40000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += static_cast<double>(s.poisson(5.0));
  // std of the sample mean is sqrt(5/n) ~ 0.011
  CHECK(sum / n == doctest::Approx(5.0).epsilon(0.02));
}

TEST_CASE("poisson: chunked large mean keeps mean and variance") {
  auto s = rng::substream(9, rng::hash_tag("plarge"));
  const int n = 20000;
  const double mean = 1000.0;  // forces the chunked path
  std::vector<double> draws(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    draws[i] = static_cast<double>(s.poisson(mean));
    sum += draws[i];
  }
  const double m = sum / n;
  double var = 0.0;
  for (double d : draws) var += (d - m) * (d - m);
  var /= n - 1;
  CHECK(m == doctest::Approx(mean).epsilon(0.01));
  CHECK(var == doctest::Approx(mean).epsilon(0.05));
}
