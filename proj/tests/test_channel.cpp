#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "sppn/channel.hpp"
#include "sppn/errors.hpp"
#include "sppn/scenario.hpp"

using namespace sppn;

namespace {

RadioParams default_radio() {
  RadioParams r;
  r.reference_distance_m = 1.0;
  r.reference_gain = 1.0;
  r.min_distance_m = 1.0;
  return r;
}

PhaseProfile phases_of(std::vector<double> v) {
  PhaseProfile p;
  p.phases = std::move(v);
  return p;
}

}  // namespace

TEST_CASE("path_gain at the reference distance is the reference gain") {
  RadioParams r = default_radio();
  r.pathloss_exponent = 3.7;
  CHECK(path_gain(1.0, r) == doctest::Approx(1.0));
}

TEST_CASE("path_gain follows inverse-square at alpha = 2") {
  RadioParams r = default_radio();
  r.pathloss_exponent = 2.0;
  CHECK(path_gain(2.0, r) == doctest::Approx(0.25));
}

TEST_CASE("path_gain clips below min distance") {
  RadioParams r = default_radio();
  CHECK(path_gain(0.0, r) == doctest::Approx(1.0));
  CHECK_THROWS_AS(path_gain(-1.0, r), std::invalid_argument);
}

TEST_CASE("fading: None is unit gain") {
  auto s = rng::substream(1, rng::kTagLinkFading);
  CHECK(sample_fading(FadingModel::None, s) == 1.0);
}

TEST_CASE("fading: Rayleigh power gain is Exp(1)") {
  auto s = rng::substream(1234, rng::kTagLinkFading);
  const int n = 1000000;
  double sum = 0.0;
  int above_ln2 = 0;
  for (int i = 0; i < n; ++i) {
    const double g = sample_fading(FadingModel::Rayleigh, s);
    sum += g;
    if (g > std::log(2.0)) ++above_ln2;
  }
  const double mean = sum / n;
  CHECK(mean >= 0.997);
  CHECK(mean <= 1.003);
  const double median_frac = static_cast<double>(above_ln2) / n;
  CHECK(median_frac >= 0.498);
  CHECK(median_frac <= 0.502);
}

TEST_CASE("link_fading is deterministic per (seed, trial, link)") {
  const NodeRef a{NodeRole::IsacTransmitter, 0};
  const NodeRef b{NodeRole::Eavesdropper, 2};
  CHECK(link_fading(FadingModel::Rayleigh, 5, 17, a, b) ==
        link_fading(FadingModel::Rayleigh, 5, 17, a, b));
  CHECK(link_fading(FadingModel::Rayleigh, 5, 17, a, b) !=
        link_fading(FadingModel::Rayleigh, 5, 18, a, b));
  CHECK(link_fading(FadingModel::None, 5, 17, a, b) == 1.0);
}

TEST_CASE("omni beam has unit gain everywhere") {
  const BeamPattern omni = BeamPattern::omni();
  CHECK(beam_gain(omni, 0.0, 2.9) == 1.0);
  CHECK(beam_gain(omni, -1.0, 1.0) == 1.0);
}

TEST_CASE("sector beam: main lobe, side lobe and normalization") {
  // half beamwidth pi/8 -> full beamwidth pi/4, fraction 1/8 of the circle
  const BeamPattern p = BeamPattern::sector(4.0, kPi / 8.0);
  CHECK(beam_gain(p, 0.0, 0.1) == doctest::Approx(4.0));
  CHECK(beam_gain(p, 0.0, kPi) == doctest::Approx(4.0 / 7.0));
  // wrap-around: toward = steering + 2pi is still on the main lobe
  CHECK(beam_gain(p, 0.1, 0.1 + kTwoPi) == doctest::Approx(4.0));
}

TEST_CASE("sector beam: normalization identity holds for random patterns") {
  auto s = rng::substream(99, rng::hash_tag("beam"));
  for (int i = 0; i < 500; ++i) {
    const double half = s.uniform(0.05, 2.5);
    const double frac = half / kPi;
    const double main = s.uniform(1.0 + 1e-3, 0.999 / frac);
    const BeamPattern p = BeamPattern::sector(main, half);
    const double b = 2.0 * half / kTwoPi;
    const double energy = p.main_gain * b + p.side_gain * (1.0 - b);
    CHECK(std::fabs(energy - 1.0) <= 1e-12);
    CHECK(p.main_gain > p.side_gain);
    CHECK(p.side_gain > 0.0);
  }
}

TEST_CASE("sector beam: gains that leave no side energy are rejected") {
  // main 8 over 1/8 of the circle absorbs all energy: side gain would be 0
  CHECK_THROWS_AS(BeamPattern::sector(8.0, kPi / 8.0), std::invalid_argument);
  CHECK_THROWS_AS(BeamPattern::sector(0.5, kPi / 8.0), std::invalid_argument);
}

TEST_CASE("steering vector: broadside is all ones") {
  RisArray a;
  a.n_elements = 6;
  a.grid_cols = 3;
  const auto v = steering_vector(a, 0.0);
  for (const auto& e : v) {
    CHECK(e.real() == doctest::Approx(1.0));
    CHECK(e.imag() == doctest::Approx(0.0));
  }
}

TEST_CASE("steering vector: half-wavelength pair at endfire") {
  RisArray a;
  a.n_elements = 2;
  a.grid_cols = 2;
  const auto v = steering_vector(a, kPi / 2.0);
  CHECK(std::arg(v[0]) == doctest::Approx(0.0));
  CHECK(std::fabs(std::arg(v[1])) == doctest::Approx(kPi));
}

TEST_CASE("steering vector: four-element line at 30 degrees") {
  RisArray a;
  a.n_elements = 4;
  a.grid_cols = 4;
  const auto v = steering_vector(a, kPi / 6.0);  // per-element increment pi/2
  const double expected[] = {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0};
  for (int n = 0; n < 4; ++n) {
    CHECK(std::abs(v[n]) == doctest::Approx(1.0));
    CHECK(wrap_phase(std::arg(v[n])) == doctest::Approx(expected[n]).epsilon(1e-12));
  }
}

TEST_CASE("steering vector: planar grid repeats the row pattern") {
  RisArray a;  // 8x8 default
  const auto v = steering_vector(a, 0.7);
  for (int n = 8; n < 64; ++n) CHECK(v[n] == v[n % 8]);
}

TEST_CASE("cascaded power: zero channel, coherent sum, linearity") {
  const std::vector<std::complex<double>> zeros(4, {0.0, 0.0});
  const std::vector<std::complex<double>> ones4(4, {1.0, 0.0});
  CHECK(cascaded_power(1.0, {0, 0}, zeros, ones4, phases_of({0, 0, 0, 0})) == 0.0);

  const std::vector<std::complex<double>> ones64(64, {1.0, 0.0});
  PhaseProfile aligned;
  aligned.phases.assign(64, 0.0);
  CHECK(cascaded_power(1.0, {0, 0}, ones64, ones64, aligned) == doctest::Approx(4096.0));

  auto s = rng::substream(4, rng::hash_tag("cascade"));
  std::vector<std::complex<double>> h(8), g(8);
  PhaseProfile phi;
  for (int i = 0; i < 8; ++i) {
    h[i] = std::polar(s.uniform(0.1, 2.0), s.uniform(0.0, kTwoPi));
    g[i] = std::polar(s.uniform(0.1, 2.0), s.uniform(0.0, kTwoPi));
    phi.phases.push_back(s.uniform(0.0, kTwoPi));
  }
  const double p1 = cascaded_power(1.0, {0.3, -0.2}, h, g, phi);
  const double p2 = cascaded_power(2.0, {0.3, -0.2}, h, g, phi);
  CHECK(p2 == 2.0 * p1);
}

TEST_CASE("cascaded power: dimension mismatch is rejected") {
  const std::vector<std::complex<double>> three(3, {1.0, 0.0});
  const std::vector<std::complex<double>> four(4, {1.0, 0.0});
  CHECK_THROWS_AS(cascaded_power(1.0, {0, 0}, three, four, phases_of({0, 0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(cascaded_power(1.0, {0, 0}, four, four, phases_of({0, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("cascaded power: quotient by P is power-invariant") {
  auto s = rng::substream(6, rng::hash_tag("quot"));
  std::vector<std::complex<double>> h(16), g(16);
  PhaseProfile phi;
  for (int i = 0; i < 16; ++i) {
    h[i] = std::polar(s.uniform(0.1, 1.0), s.uniform(0.0, kTwoPi));
    g[i] = std::polar(s.uniform(0.1, 1.0), s.uniform(0.0, kTwoPi));
    phi.phases.push_back(s.uniform(0.0, kTwoPi));
  }
  const double base = cascaded_power(1.0, {0.1, 0.4}, h, g, phi);
  for (double p : {0.25, 3.0, 1e6}) {
    const double q = cascaded_power(p, {0.1, 0.4}, h, g, phi) / p;
    CHECK(std::fabs(q / base - 1.0) <= 1e-12);
  }
}

TEST_CASE("cascaded power never beats the coherent ceiling") {
  auto s = rng::substream(8, rng::hash_tag("tri"));
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + static_cast<std::size_t>(s.next_u64() % 12);
    std::vector<std::complex<double>> h(n), g(n);
    PhaseProfile phi;
    const std::complex<double> direct =
        std::polar(s.uniform(0.0, 2.0), s.uniform(0.0, kTwoPi));
    double ceiling_amp = std::abs(direct);
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = std::polar(s.uniform(0.0, 2.0), s.uniform(0.0, kTwoPi));
      g[i] = std::polar(s.uniform(0.0, 2.0), s.uniform(0.0, kTwoPi));
      phi.phases.push_back(s.uniform(0.0, kTwoPi));
      ceiling_amp += std::abs(g[i]) * std::abs(h[i]);
    }
    const double ceiling = ceiling_amp * ceiling_amp;
    CHECK(cascaded_power(1.0, direct, h, g, phi) <= ceiling * (1.0 + 1e-12) + 1e-300);
  }
}

TEST_CASE("channel realization: missing links never default silently") {
  ChannelRealization real;
  const NodeRef tx{NodeRole::IsacTransmitter, 0};
  const NodeRef eve{NodeRole::Eavesdropper, 0};
  real.set(tx, eve, 0.5);
  CHECK(real.gain(tx, eve) == 0.5);
  CHECK_THROWS_AS(real.gain(eve, tx), InternalError);  // direction matters
  CHECK_THROWS_AS(real.gain(tx, {NodeRole::Eavesdropper, 1}), InternalError);
}
