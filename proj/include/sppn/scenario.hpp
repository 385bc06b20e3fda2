#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sppn/channel.hpp"
#include "sppn/geometry.hpp"
#include "sppn/rng.hpp"
#include "sppn/types.hpp"

namespace sppn {

struct RadioParams {
  double tx_power_w = 1.0;
  double jam_power_w = 0.5;
  double noise_power_w = 1e-9;
  double pathloss_exponent = 3.0;    // alpha, in [2, 6]
  double reference_distance_m = 1.0; // d0
  double reference_gain = 1.0;       // c0, linear gain at d0
  double min_distance_m = 1.0;       // path loss is clipped below this range
  void validate() const;
};

struct RisDeployment {
  Point2D position;
  RisArray array;
  // When false the transmitter-to-probe direct path is zeroed and only the
  // reflected path contributes (blocked line of sight).
  bool include_direct_path = true;
};

// Immutable world description. Optimizers carry candidate placements and
// phase profiles separately; nothing in here changes after build_scenario.
struct Scenario {
  Region region;
  std::vector<Point2D> transmitters;
  std::vector<Point2D> receivers;
  std::vector<Point2D> sensing_targets;
  std::vector<Point2D> private_users;
  std::vector<Point2D> eavesdroppers;
  std::optional<RisDeployment> ris;
  RadioParams radio;
  double sinr_threshold = 1.0;  // tau, linear
  FadingModel fading = FadingModel::Rayleigh;
  BeamPattern jammer_pattern = BeamPattern::sector(4.0, kPi / 8.0);
  std::uint64_t rng_seed = 0;

  const std::vector<Point2D>& nodes(NodeRole role) const;
};

// Per-role deployment: fixed positions, or a homogeneous PPP density.
struct RoleConfig {
  std::vector<Point2D> positions;
  std::optional<double> density;  // points per m^2
};

struct ScenarioConfig {
  Region region{0.0, 200.0, 0.0, 200.0};
  RoleConfig transmitters;
  RoleConfig receivers;
  RoleConfig sensing_targets;
  RoleConfig private_users;
  RoleConfig eavesdroppers;
  std::optional<RisDeployment> ris;
  RadioParams radio;
  double sinr_threshold = 1.0;
  FadingModel fading = FadingModel::Rayleigh;
  BeamPattern jammer_pattern = BeamPattern::sector(4.0, kPi / 8.0);
  std::uint64_t seed = 0;
};

// Homogeneous Poisson point process over `region`: the count is Poisson with
// mean density*area, positions are i.i.d. uniform. Deterministic per stream.
std::vector<Point2D> sample_hppp(double density, const Region& region, rng::Stream& stream);

// Validates the config, samples HPPP-deployed roles with per-role substreams
// of the scenario seed, and copies fixed positions verbatim.
Scenario build_scenario(const ScenarioConfig& config);

// Position of a non-jammer node; throws on a bad index.
Point2D node_position(NodeRef ref, const Scenario& scenario);

}  // namespace sppn
