#include "sppn/channel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sppn/errors.hpp"
#include "sppn/scenario.hpp"

namespace sppn {

BeamPattern BeamPattern::sector(double main_gain, double half_beamwidth) {
  if (!std::isfinite(main_gain) || !std::isfinite(half_beamwidth))
    throw std::invalid_argument("sector beam: parameters must be finite");
  if (half_beamwidth <= 0.0 || half_beamwidth >= kPi)
    throw std::invalid_argument("sector beam: half beamwidth must lie in (0, pi)");
  const double frac = half_beamwidth / kPi;  // full beamwidth / 2pi
  const double side = (1.0 - main_gain * frac) / (1.0 - frac);
  if (!(side > 0.0) || !(main_gain > side))
    throw std::invalid_argument(
        "sector beam: normalization requires 1 < main_gain < pi/half_beamwidth");
  BeamPattern p;
  p.kind = Kind::Sector;
  p.main_gain = main_gain;
  p.side_gain = side;
  p.half_beamwidth = half_beamwidth;
  return p;
}

double beam_gain(const BeamPattern& pattern, double steering, double toward) {
  if (!std::isfinite(steering) || !std::isfinite(toward))
    throw std::invalid_argument("beam_gain: angles must be finite");
  if (pattern.kind == BeamPattern::Kind::Omni) return 1.0;
  const double offset = std::fabs(wrap_angle(toward - steering));
  return offset <= pattern.half_beamwidth ? pattern.main_gain : pattern.side_gain;
}

void RisArray::validate() const {
  if (n_elements < 1) throw std::invalid_argument("ris array: need at least one element");
  if (grid_cols < 1 || n_elements % grid_cols != 0)
    throw std::invalid_argument("ris array: element count must be a multiple of grid_cols");
  if (!(element_spacing > 0.0) || !std::isfinite(element_spacing))
    throw std::invalid_argument("ris array: element spacing must be positive");
  if (!std::isfinite(orientation))
    throw std::invalid_argument("ris array: orientation must be finite");
}

void PhaseProfile::validate() const {
  for (double p : phases) {
    if (!std::isfinite(p) || p < 0.0 || p >= kTwoPi)
      throw std::invalid_argument("phase profile: phases must lie in [0, 2pi)");
  }
}

std::vector<std::complex<double>> steering_vector(const RisArray& array, double direction) {
  array.validate();
  if (!std::isfinite(direction))
    throw std::invalid_argument("steering_vector: direction must be finite");
  const double step = kTwoPi * array.element_spacing * std::sin(direction);
  std::vector<std::complex<double>> v(static_cast<std::size_t>(array.n_elements));
  for (int n = 0; n < array.n_elements; ++n) {
    const int col = n % array.grid_cols;  // in-plane position index
    v[static_cast<std::size_t>(n)] = std::polar(1.0, step * col);
  }
  return v;
}

double path_gain(double distance_m, const RadioParams& radio) {
  if (!(distance_m >= 0.0))
    throw std::invalid_argument("path_gain: distance must be >= 0");
  const double d = std::fmax(distance_m, radio.min_distance_m);
  return radio.reference_gain *
         std::pow(d / radio.reference_distance_m, -radio.pathloss_exponent);
}

double sample_fading(FadingModel model, rng::Stream& stream) {
  return model == FadingModel::None ? 1.0 : stream.exp1();
}

double link_fading(FadingModel model, std::uint64_t seed, std::uint64_t trial, NodeRef src,
                   NodeRef dst) {
  if (model == FadingModel::None) return 1.0;
  auto stream = rng::substream(seed, rng::kTagLinkFading, trial, node_key(src), node_key(dst));
  return stream.exp1();
}

double cascaded_power(double power_w, std::complex<double> direct,
                      std::span<const std::complex<double>> tx_to_ris,
                      std::span<const std::complex<double>> ris_to_dest,
                      const PhaseProfile& phases) {
  if (tx_to_ris.size() != ris_to_dest.size() || phases.size() != tx_to_ris.size())
    throw std::invalid_argument("cascaded_power: vector lengths differ");
  if (!(power_w >= 0.0))
    throw std::invalid_argument("cascaded_power: power must be >= 0");
  std::complex<double> sum = direct;
  for (std::size_t n = 0; n < tx_to_ris.size(); ++n)
    sum += std::conj(ris_to_dest[n]) * std::polar(1.0, phases.phases[n]) * tx_to_ris[n];
  return power_w * std::norm(sum);
}

void ChannelRealization::set(NodeRef src, NodeRef dst, double gain) {
  gains_[rng::mix64(node_key(src)) ^ node_key(dst)] = gain;
}

double ChannelRealization::gain(NodeRef src, NodeRef dst) const {
  auto it = gains_.find(rng::mix64(node_key(src)) ^ node_key(dst));
  if (it == gains_.end()) {
    std::ostringstream msg;
    msg << "channel realization has no gain for link " << role_name(src.role) << "["
        << src.index << "] -> " << role_name(dst.role) << "[" << dst.index << "]";
    throw InternalError(msg.str());
  }
  return it->second;
}

}  // namespace sppn
