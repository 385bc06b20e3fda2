#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "sppn/channel.hpp"
#include "sppn/placement.hpp"
#include "sppn/scenario.hpp"

namespace sppn {

// Which legitimate link's signal the eavesdropper captures. Both variants use
// the same jamming interference term.
enum class EavesdropChannel { Information, Sensing };

struct PseEstimate {
  double mean = 0.0;       // probability of successful eavesdropping
  double std_error = 0.0;  // sqrt(mean*(1-mean)/trials)
  std::uint64_t trials = 0;
};

struct ImpactReport {
  double mean_legit_sinr_loss_db = 0.0;
  double legit_outage_delta = 0.0;  // change in outage fraction at tau
};

// Transmitter indices whose signal the given channel eavesdrops on: the
// transmitters serving receivers (Information) or illuminating sensing
// targets (Sensing) under nearest-transmitter association. When the anchoring
// role is absent every transmitter carries the signal of interest.
std::vector<std::size_t> channel_sources(const Scenario& scenario, EavesdropChannel channel);

// Position lookup that also covers jammers in the given placement.
Point2D node_position(NodeRef ref, const Scenario& scenario, const Placement& placement);

// SINR budget at `dest` for the signal of `source`:
//   P_t * fade * path_gain(source->dest)
//   / (sum_j P_j * beam_gain(j, toward dest) * fade_j * path_gain(j->dest) + noise).
double sinr_at(NodeRef dest, NodeRef source, const Scenario& scenario,
               const Placement& placement, const ChannelRealization& realization);

// Fading draws for every link one PSE trial needs, keyed by (seed, trial,
// link) so any evaluation order reproduces them.
ChannelRealization sample_trial_realization(const Scenario& scenario, const Placement& placement,
                                            EavesdropChannel channel, std::uint64_t seed,
                                            std::uint64_t trial);

// Monte Carlo probability that ANY eavesdropper's SINR on the given channel
// reaches the scenario threshold (worst case for the defender). Deterministic
// per seed and independent of the worker count.
PseEstimate estimate_pse(const Scenario& scenario, const Placement& placement,
                         EavesdropChannel channel, std::uint64_t trials, std::uint64_t seed,
                         int workers = 1);

// Per-eavesdropper reporting variant of the same trials.
std::vector<PseEstimate> estimate_pse_per_eavesdropper(const Scenario& scenario,
                                                       const Placement& placement,
                                                       EavesdropChannel channel,
                                                       std::uint64_t trials, std::uint64_t seed,
                                                       int workers = 1);

// Paired-trial audit of what the jammers cost legitimate receivers: same
// fading draws with and without the placement, mean dB SINR loss and outage
// change at tau.
ImpactReport measure_legit_impact(const Scenario& scenario, const Placement& placement,
                                  std::uint64_t trials, std::uint64_t seed, int workers = 1);

// Deterministic received power at a probe point from the ISAC transmitter
// through the direct and RIS-reflected paths. Linear in the transmit power.
double beampattern_gain(double power_w, const Scenario& scenario, const PhaseProfile& phases,
                        Point2D probe);

// LoS channel pieces used by both beampattern_gain and the RIS optimizer.
std::vector<std::complex<double>> ris_incident_channel(const Scenario& scenario);
struct RisPathTerms {
  std::vector<std::complex<double>> response;  // RIS -> destination, with sqrt path gain
  std::complex<double> direct;                 // transmitter -> destination amplitude
};
RisPathTerms ris_departure_terms(const Scenario& scenario, Point2D dest);

}  // namespace sppn
