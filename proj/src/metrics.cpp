#include "sppn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sppn/errors.hpp"
#include "sppn/parallel.hpp"

namespace sppn {

namespace {

std::size_t nearest_transmitter(const Scenario& sc, Point2D anchor) {
  std::size_t best = 0;
  double best_d = distance(sc.transmitters[0], anchor);
  for (std::size_t i = 1; i < sc.transmitters.size(); ++i) {
    const double d = distance(sc.transmitters[i], anchor);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

// Distance/beam factors of every link a trial needs; fading multiplies in per
// trial.
struct LinkBudget {
  std::vector<NodeRef> dest_refs;
  std::vector<NodeRef> source_refs;
  std::vector<NodeRef> jammer_refs;
  std::vector<std::vector<double>> signal_pg;  // [dest][source] path gain
  std::vector<std::vector<double>> interf_pg;  // [dest][jammer] beam * path gain
};

LinkBudget make_budget(const Scenario& sc, const Placement& pl, NodeRole dest_role,
                       const std::vector<Point2D>& dests,
                       const std::vector<std::size_t>& sources) {
  LinkBudget b;
  for (std::size_t e = 0; e < dests.size(); ++e) b.dest_refs.push_back({dest_role, e});
  for (std::size_t s : sources) b.source_refs.push_back({NodeRole::IsacTransmitter, s});
  for (std::size_t j = 0; j < pl.jammers.size(); ++j) b.jammer_refs.push_back({NodeRole::Jammer, j});

  b.signal_pg.resize(dests.size());
  b.interf_pg.resize(dests.size());
  for (std::size_t e = 0; e < dests.size(); ++e) {
    b.signal_pg[e].reserve(sources.size());
    for (std::size_t s : sources)
      b.signal_pg[e].push_back(path_gain(distance(sc.transmitters[s], dests[e]), sc.radio));
    b.interf_pg[e].reserve(pl.jammers.size());
    for (const JammerNode& jam : pl.jammers) {
      const double gain = beam_gain(jam.pattern, jam.steering, bearing(jam.position, dests[e]));
      b.interf_pg[e].push_back(gain * path_gain(distance(jam.position, dests[e]), sc.radio));
    }
  }
  return b;
}

// SINR of destination e in trial t, maximized over the channel's sources.
double trial_best_sinr(const Scenario& sc, const LinkBudget& b, std::size_t e, std::uint64_t seed,
                       std::uint64_t t) {
  double interference = sc.radio.noise_power_w;
  for (std::size_t j = 0; j < b.jammer_refs.size(); ++j) {
    const double fade = link_fading(sc.fading, seed, t, b.jammer_refs[j], b.dest_refs[e]);
    interference += sc.radio.jam_power_w * b.interf_pg[e][j] * fade;
  }
  double best_signal = 0.0;
  for (std::size_t s = 0; s < b.source_refs.size(); ++s) {
    const double fade = link_fading(sc.fading, seed, t, b.source_refs[s], b.dest_refs[e]);
    best_signal = std::max(best_signal, sc.radio.tx_power_w * b.signal_pg[e][s] * fade);
  }
  return best_signal / interference;
}

void check_pse_preconditions(const Scenario& sc, std::uint64_t trials) {
  if (trials < 1) throw std::invalid_argument("estimate_pse: trials must be >= 1");
  if (sc.eavesdroppers.empty())
    throw std::invalid_argument("estimate_pse: scenario has no eavesdroppers");
  if (sc.transmitters.empty())
    throw std::invalid_argument("estimate_pse: scenario has no transmitters");
}

PseEstimate finish_estimate(std::uint64_t hits, std::uint64_t trials) {
  const double mean = static_cast<double>(hits) / static_cast<double>(trials);
  const double se = std::sqrt(mean * (1.0 - mean) / static_cast<double>(trials));
  return {mean, se, trials};
}

}  // namespace

std::vector<std::size_t> channel_sources(const Scenario& scenario, EavesdropChannel channel) {
  if (scenario.transmitters.empty())
    throw std::invalid_argument("channel_sources: scenario has no transmitters");
  const auto& anchors = channel == EavesdropChannel::Information ? scenario.receivers
                                                                 : scenario.sensing_targets;
  if (anchors.empty()) {
    std::vector<std::size_t> all(scenario.transmitters.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::set<std::size_t> serving;
  for (Point2D a : anchors) serving.insert(nearest_transmitter(scenario, a));
  return {serving.begin(), serving.end()};
}

Point2D node_position(NodeRef ref, const Scenario& scenario, const Placement& placement) {
  if (ref.role == NodeRole::Jammer) {
    if (ref.index >= placement.jammers.size())
      throw InternalError("node_position: jammer index out of range");
    return placement.jammers[ref.index].position;
  }
  return node_position(ref, scenario);
}

double sinr_at(NodeRef dest, NodeRef source, const Scenario& scenario, const Placement& placement,
               const ChannelRealization& realization) {
  const Point2D dest_pos = node_position(dest, scenario, placement);
  const Point2D src_pos = node_position(source, scenario, placement);
  const double signal = scenario.radio.tx_power_w * realization.gain(source, dest) *
                        path_gain(distance(src_pos, dest_pos), scenario.radio);
  double interference = scenario.radio.noise_power_w;
  for (std::size_t j = 0; j < placement.jammers.size(); ++j) {
    const JammerNode& jam = placement.jammers[j];
    interference += scenario.radio.jam_power_w *
                    beam_gain(jam.pattern, jam.steering, bearing(jam.position, dest_pos)) *
                    realization.gain({NodeRole::Jammer, j}, dest) *
                    path_gain(distance(jam.position, dest_pos), scenario.radio);
  }
  return signal / interference;
}

ChannelRealization sample_trial_realization(const Scenario& scenario, const Placement& placement,
                                            EavesdropChannel channel, std::uint64_t seed,
                                            std::uint64_t trial) {
  ChannelRealization real;
  const auto sources = channel_sources(scenario, channel);
  for (std::size_t e = 0; e < scenario.eavesdroppers.size(); ++e) {
    const NodeRef eve{NodeRole::Eavesdropper, e};
    for (std::size_t s : sources) {
      const NodeRef src{NodeRole::IsacTransmitter, s};
      real.set(src, eve, link_fading(scenario.fading, seed, trial, src, eve));
    }
    for (std::size_t j = 0; j < placement.jammers.size(); ++j) {
      const NodeRef jam{NodeRole::Jammer, j};
      real.set(jam, eve, link_fading(scenario.fading, seed, trial, jam, eve));
    }
  }
  return real;
}

PseEstimate estimate_pse(const Scenario& scenario, const Placement& placement,
                         EavesdropChannel channel, std::uint64_t trials, std::uint64_t seed,
                         int workers) {
  check_pse_preconditions(scenario, trials);
  const auto sources = channel_sources(scenario, channel);
  const LinkBudget budget =
      make_budget(scenario, placement, NodeRole::Eavesdropper, scenario.eavesdroppers, sources);
  const double tau = scenario.sinr_threshold;

  std::vector<std::uint8_t> hit(trials, 0);
  parallel_for(trials, workers, [&](std::size_t t) {
    for (std::size_t e = 0; e < scenario.eavesdroppers.size(); ++e) {
      if (trial_best_sinr(scenario, budget, e, seed, t) >= tau) {
        hit[t] = 1;
        return;
      }
    }
  });
  const std::uint64_t hits = std::accumulate(hit.begin(), hit.end(), std::uint64_t{0});
  return finish_estimate(hits, trials);
}

std::vector<PseEstimate> estimate_pse_per_eavesdropper(const Scenario& scenario,
                                                       const Placement& placement,
                                                       EavesdropChannel channel,
                                                       std::uint64_t trials, std::uint64_t seed,
                                                       int workers) {
  check_pse_preconditions(scenario, trials);
  const auto sources = channel_sources(scenario, channel);
  const LinkBudget budget =
      make_budget(scenario, placement, NodeRole::Eavesdropper, scenario.eavesdroppers, sources);
  const double tau = scenario.sinr_threshold;
  const std::size_t ne = scenario.eavesdroppers.size();

  std::vector<std::uint8_t> hit(trials * ne, 0);
  parallel_for(trials, workers, [&](std::size_t t) {
    for (std::size_t e = 0; e < ne; ++e)
      hit[t * ne + e] = trial_best_sinr(scenario, budget, e, seed, t) >= tau ? 1 : 0;
  });
  std::vector<PseEstimate> out;
  out.reserve(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) hits += hit[t * ne + e];
    out.push_back(finish_estimate(hits, trials));
  }
  return out;
}

ImpactReport measure_legit_impact(const Scenario& scenario, const Placement& placement,
                                  std::uint64_t trials, std::uint64_t seed, int workers) {
  if (trials < 1) throw std::invalid_argument("measure_legit_impact: trials must be >= 1");
  if (scenario.receivers.empty())
    throw std::invalid_argument("measure_legit_impact: scenario has no receivers");
  if (scenario.transmitters.empty())
    throw std::invalid_argument("measure_legit_impact: scenario has no transmitters");

  // Each receiver listens to its nearest transmitter.
  std::vector<std::size_t> serving;
  serving.reserve(scenario.receivers.size());
  for (Point2D r : scenario.receivers) serving.push_back(nearest_transmitter(scenario, r));

  const std::size_t nr = scenario.receivers.size();
  std::vector<double> signal_pg(nr);
  std::vector<std::vector<double>> interf_pg(nr);
  for (std::size_t r = 0; r < nr; ++r) {
    signal_pg[r] =
        path_gain(distance(scenario.transmitters[serving[r]], scenario.receivers[r]), scenario.radio);
    interf_pg[r].reserve(placement.jammers.size());
    for (const JammerNode& jam : placement.jammers) {
      const double gain =
          beam_gain(jam.pattern, jam.steering, bearing(jam.position, scenario.receivers[r]));
      interf_pg[r].push_back(gain *
                             path_gain(distance(jam.position, scenario.receivers[r]), scenario.radio));
    }
  }

  const double tau = scenario.sinr_threshold;
  std::vector<double> loss_db(trials, 0.0);
  std::vector<double> outage_delta(trials, 0.0);
  parallel_for(trials, workers, [&](std::size_t t) {
    double loss = 0.0;
    double outage = 0.0;
    for (std::size_t r = 0; r < nr; ++r) {
      const NodeRef rx{NodeRole::CommReceiver, r};
      const NodeRef tx{NodeRole::IsacTransmitter, serving[r]};
      const double fade_s = link_fading(scenario.fading, seed, t, tx, rx);
      double interference = 0.0;
      for (std::size_t j = 0; j < placement.jammers.size(); ++j) {
        const double fade_j = link_fading(scenario.fading, seed, t, {NodeRole::Jammer, j}, rx);
        interference += scenario.radio.jam_power_w * interf_pg[r][j] * fade_j;
      }
      const double signal = scenario.radio.tx_power_w * signal_pg[r] * fade_s;
      const double with_jam = signal / (interference + scenario.radio.noise_power_w);
      const double without_jam = signal / scenario.radio.noise_power_w;
      loss += 10.0 * std::log10(without_jam / with_jam);
      outage += (with_jam < tau ? 1.0 : 0.0) - (without_jam < tau ? 1.0 : 0.0);
    }
    loss_db[t] = loss / static_cast<double>(nr);
    outage_delta[t] = outage / static_cast<double>(nr);
  });

  ImpactReport report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    report.mean_legit_sinr_loss_db += loss_db[t];
    report.legit_outage_delta += outage_delta[t];
  }
  report.mean_legit_sinr_loss_db /= static_cast<double>(trials);
  report.legit_outage_delta /= static_cast<double>(trials);
  return report;
}

std::vector<std::complex<double>> ris_incident_channel(const Scenario& scenario) {
  if (!scenario.ris) throw std::invalid_argument("scenario has no RIS");
  if (scenario.transmitters.empty())
    throw std::invalid_argument("scenario has no transmitters");
  const RisDeployment& ris = *scenario.ris;
  const Point2D tx = scenario.transmitters.front();
  const double dir = wrap_angle(bearing(ris.position, tx) - ris.array.orientation);
  auto v = steering_vector(ris.array, dir);
  const double amp = std::sqrt(path_gain(distance(tx, ris.position), scenario.radio));
  for (auto& e : v) e *= amp;
  return v;
}

RisPathTerms ris_departure_terms(const Scenario& scenario, Point2D dest) {
  if (!scenario.ris) throw std::invalid_argument("scenario has no RIS");
  if (scenario.transmitters.empty())
    throw std::invalid_argument("scenario has no transmitters");
  const RisDeployment& ris = *scenario.ris;
  const double dir = wrap_angle(bearing(ris.position, dest) - ris.array.orientation);
  RisPathTerms terms;
  terms.response = steering_vector(ris.array, dir);
  const double amp = std::sqrt(path_gain(distance(ris.position, dest), scenario.radio));
  for (auto& e : terms.response) e *= amp;
  terms.direct = {0.0, 0.0};
  if (ris.include_direct_path) {
    const Point2D tx = scenario.transmitters.front();
    terms.direct = std::sqrt(path_gain(distance(tx, dest), scenario.radio));
  }
  return terms;
}

double beampattern_gain(double power_w, const Scenario& scenario, const PhaseProfile& phases,
                        Point2D probe) {
  if (!scenario.ris)
    throw std::invalid_argument("beampattern_gain: scenario has no RIS");
  const auto incident = ris_incident_channel(scenario);
  const auto terms = ris_departure_terms(scenario, probe);
  return cascaded_power(power_w, terms.direct, incident, terms.response, phases);
}

}  // namespace sppn
