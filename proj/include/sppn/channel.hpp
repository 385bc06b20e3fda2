#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "sppn/geometry.hpp"
#include "sppn/rng.hpp"
#include "sppn/types.hpp"

namespace sppn {

struct RadioParams;  // scenario.hpp

enum class FadingModel { None, Rayleigh };

// Two-level flat-top sector beam. The side gain is fixed by the energy
// normalization  main*(bw/2pi) + side*(1 - bw/2pi) = 1  with bw the full
// beamwidth, so a sector pattern radiates the same total power as an omni.
struct BeamPattern {
  enum class Kind { Omni, Sector };
  Kind kind = Kind::Omni;
  double main_gain = 1.0;
  double side_gain = 1.0;
  double half_beamwidth = 0.0;  // radians; Sector only

  static BeamPattern omni() { return {}; }
  static BeamPattern sector(double main_gain, double half_beamwidth);
};

// Gain seen in direction `toward` by a pattern whose main lobe points at
// `steering` (both world bearings).
double beam_gain(const BeamPattern& pattern, double steering, double toward);

// Uniformly spaced reflective array, laid out row-major on a grid of
// n_elements/grid_cols rows by grid_cols columns. Only the column index
// contributes phase for in-plane directions, so a planar panel behaves as
// stacked copies of one row; a linear array is the grid_cols == n_elements
// special case.
struct RisArray {
  int n_elements = 64;
  int grid_cols = 8;
  double element_spacing = 0.5;  // carrier wavelengths
  double orientation = 0.0;      // world bearing of the array broadside, radians
  void validate() const;
};

struct PhaseProfile {
  std::vector<double> phases;  // each in [0, 2pi)
  std::size_t size() const { return phases.size(); }
  void validate() const;
};

// Unit-modulus array response for a plane wave `direction` radians off
// broadside. Broadside gives the all-ones vector.
std::vector<std::complex<double>> steering_vector(const RisArray& array, double direction);

// Log-distance path gain c0 * (max(d, d_min) / d0)^-alpha.
double path_gain(double distance_m, const RadioParams& radio);

// One power-fading draw: None -> 1, Rayleigh -> Exp(1).
double sample_fading(FadingModel model, rng::Stream& stream);

// Power-fading draw for a directed link, independent per (seed, trial, link)
// and therefore identical no matter which worker evaluates the trial.
double link_fading(FadingModel model, std::uint64_t seed, std::uint64_t trial, NodeRef src,
                   NodeRef dst);

// Received power P * |direct + sum_n conj(ris_to_dest[n]) * e^{j phi_n} *
// tx_to_ris[n]|^2 through the direct and RIS-reflected paths.
double cascaded_power(double power_w, std::complex<double> direct,
                      std::span<const std::complex<double>> tx_to_ris,
                      std::span<const std::complex<double>> ris_to_dest,
                      const PhaseProfile& phases);

// Per-trial Monte Carlo state: fading gains for the directed links one metric
// evaluation needs. Querying a link that was never sampled throws instead of
// silently defaulting.
class ChannelRealization {
 public:
  void set(NodeRef src, NodeRef dst, double gain);
  double gain(NodeRef src, NodeRef dst) const;
  std::size_t size() const { return gains_.size(); }

 private:
  std::unordered_map<std::uint64_t, double> gains_;
};

}  // namespace sppn
