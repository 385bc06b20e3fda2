#include "sppn/scenario.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sppn/errors.hpp"

namespace sppn {

void RadioParams::validate() const {
  if (!(tx_power_w > 0.0) || !(jam_power_w > 0.0) || !(noise_power_w > 0.0))
    throw ValidationError("radio: powers must be positive");
  if (!(pathloss_exponent >= 2.0) || !(pathloss_exponent <= 6.0))
    throw ValidationError("radio: pathloss exponent must lie in [2, 6]");
  if (!(reference_distance_m > 0.0)) throw ValidationError("radio: d0 must be positive");
  if (!(reference_gain > 0.0)) throw ValidationError("radio: reference gain must be positive");
  if (!(min_distance_m > 0.0)) throw ValidationError("radio: min distance must be positive");
}

const std::vector<Point2D>& Scenario::nodes(NodeRole role) const {
  switch (role) {
    case NodeRole::IsacTransmitter: return transmitters;
    case NodeRole::CommReceiver: return receivers;
    case NodeRole::SensingTarget: return sensing_targets;
    case NodeRole::PrivateUser: return private_users;
    case NodeRole::Eavesdropper: return eavesdroppers;
    default: break;
  }
  throw InternalError("scenario: role has no position list");
}

std::vector<Point2D> sample_hppp(double density, const Region& region, rng::Stream& stream) {
  if (!std::isfinite(density) || density < 0.0)
    throw std::invalid_argument("sample_hppp: density must be finite and >= 0");
  region.validate();
  const double mean = density * region.area();
  const std::uint64_t count = mean > 0.0 ? stream.poisson(mean) : 0;
  std::vector<Point2D> points;
  points.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double x = stream.uniform(region.x_min, region.x_max);
    const double y = stream.uniform(region.y_min, region.y_max);
    points.push_back({x, y});
  }
  return points;
}

namespace {

std::vector<Point2D> resolve_role(const RoleConfig& cfg, NodeRole role, const Region& region,
                                  std::uint64_t seed) {
  if (cfg.density && !cfg.positions.empty()) {
    std::ostringstream msg;
    msg << role_name(role) << ": give either positions or density, not both";
    throw ValidationError(msg.str());
  }
  if (cfg.density) {
    if (!std::isfinite(*cfg.density) || *cfg.density < 0.0) {
      std::ostringstream msg;
      msg << role_name(role) << ": density must be finite and >= 0";
      throw ValidationError(msg.str());
    }
    auto stream = rng::substream(seed, rng::kTagHppp, static_cast<std::uint64_t>(role));
    return sample_hppp(*cfg.density, region, stream);
  }
  for (std::size_t i = 0; i < cfg.positions.size(); ++i) {
    const Point2D p = cfg.positions[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !region.contains(p)) {
      std::ostringstream msg;
      msg << role_name(role) << "[" << i << "] at (" << p.x << ", " << p.y
          << ") lies outside the region";
      throw ValidationError(msg.str());
    }
  }
  return cfg.positions;
}

}  // namespace

Scenario build_scenario(const ScenarioConfig& config) {
  try {
    config.region.validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  config.radio.validate();
  if (!std::isfinite(config.sinr_threshold) || !(config.sinr_threshold > 0.0))
    throw ValidationError("scenario: SINR threshold must be positive");

  Scenario sc;
  sc.region = config.region;
  sc.radio = config.radio;
  sc.sinr_threshold = config.sinr_threshold;
  sc.fading = config.fading;
  sc.jammer_pattern = config.jammer_pattern;
  sc.rng_seed = config.seed;

  sc.transmitters =
      resolve_role(config.transmitters, NodeRole::IsacTransmitter, sc.region, sc.rng_seed);
  sc.receivers = resolve_role(config.receivers, NodeRole::CommReceiver, sc.region, sc.rng_seed);
  sc.sensing_targets =
      resolve_role(config.sensing_targets, NodeRole::SensingTarget, sc.region, sc.rng_seed);
  sc.private_users =
      resolve_role(config.private_users, NodeRole::PrivateUser, sc.region, sc.rng_seed);
  sc.eavesdroppers =
      resolve_role(config.eavesdroppers, NodeRole::Eavesdropper, sc.region, sc.rng_seed);

  if (config.ris) {
    if (!sc.region.contains(config.ris->position))
      throw ValidationError("ris: position lies outside the region");
    try {
      config.ris->array.validate();
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    sc.ris = config.ris;
  }
  return sc;
}

Point2D node_position(NodeRef ref, const Scenario& scenario) {
  if (ref.role == NodeRole::Ris) {
    if (!scenario.ris) throw InternalError("node_position: scenario has no RIS");
    return scenario.ris->position;
  }
  if (ref.role == NodeRole::Jammer)
    throw InternalError("node_position: jammer positions live in a Placement");
  const auto& list = scenario.nodes(ref.role);
  if (ref.index >= list.size()) {
    std::ostringstream msg;
    msg << "node_position: " << role_name(ref.role) << "[" << ref.index << "] out of range";
    throw InternalError(msg.str());
  }
  return list[ref.index];
}

}  // namespace sppn
