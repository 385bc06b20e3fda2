#include "sppn/ris_opt.hpp"

#include <cmath>
#include <stdexcept>

#include "sppn/errors.hpp"
#include "sppn/metrics.hpp"

namespace sppn {

void RisProblem::validate() const {
  const std::size_t n = tx_to_ris.size();
  if (ris_to_user.size() != n || ris_to_target.size() != n)
    throw std::invalid_argument("ris problem: channel vector lengths differ");
  if (!(tradeoff_weight >= 0.0) || !std::isfinite(tradeoff_weight))
    throw std::invalid_argument("ris problem: tradeoff weight must be >= 0");
  if (!(power_w >= 0.0) || !std::isfinite(power_w))
    throw std::invalid_argument("ris problem: power must be >= 0");
}

RisEval evaluate(const RisProblem& problem, const PhaseProfile& phases) {
  problem.validate();
  if (phases.size() != problem.size())
    throw std::invalid_argument("ris evaluate: phase count does not match problem size");
  RisEval e;
  e.g_user = cascaded_power(problem.power_w, problem.direct_user, problem.tx_to_ris,
                            problem.ris_to_user, phases);
  e.g_target = cascaded_power(problem.power_w, problem.direct_target, problem.tx_to_ris,
                              problem.ris_to_target, phases);
  e.objective = e.g_user - problem.tradeoff_weight * e.g_target;
  return e;
}

namespace {

constexpr double kDegenerateZ = 1e-15;

struct CrossTerms {
  std::vector<std::complex<double>> w_user;    // conj(a_user,n) * h_t,n
  std::vector<std::complex<double>> w_target;  // conj(a_target,n) * h_t,n
};

CrossTerms cross_terms(const RisProblem& p) {
  CrossTerms ct;
  ct.w_user.reserve(p.size());
  ct.w_target.reserve(p.size());
  for (std::size_t n = 0; n < p.size(); ++n) {
    ct.w_user.push_back(std::conj(p.ris_to_user[n]) * p.tx_to_ris[n]);
    ct.w_target.push_back(std::conj(p.ris_to_target[n]) * p.tx_to_ris[n]);
  }
  return ct;
}

std::complex<double> full_sum(std::complex<double> direct,
                              const std::vector<std::complex<double>>& w,
                              const std::vector<double>& phases) {
  std::complex<double> s = direct;
  for (std::size_t n = 0; n < w.size(); ++n) s += w[n] * std::polar(1.0, phases[n]);
  return s;
}

// The positive factor 2P is dropped from z_n: it changes neither arg(z_n) nor
// the minimizer, and leaving it out makes the iterates power-invariant.
std::complex<double> element_coefficient(const RisProblem& p, const CrossTerms& ct,
                                         std::complex<double> s_user_excl,
                                         std::complex<double> s_target_excl, std::size_t n) {
  return std::conj(s_user_excl) * ct.w_user[n] -
         p.tradeoff_weight * (std::conj(s_target_excl) * ct.w_target[n]);
}

}  // namespace

RisResult coordinate_descent(const RisProblem& problem, const PhaseProfile& init, double tol,
                             int max_sweeps) {
  problem.validate();
  if (init.size() != problem.size())
    throw std::invalid_argument("coordinate_descent: init size does not match problem");
  if (!(tol > 0.0)) throw std::invalid_argument("coordinate_descent: tol must be positive");
  if (max_sweeps < 1) throw std::invalid_argument("coordinate_descent: need at least one sweep");

  const CrossTerms ct = cross_terms(problem);
  std::vector<double> phases(problem.size());
  for (std::size_t n = 0; n < problem.size(); ++n) phases[n] = wrap_phase(init.phases[n]);

  RisResult best;
  best.phases.phases = phases;
  {
    const RisEval e = evaluate(problem, best.phases);
    best.g_user = e.g_user;
    best.g_target = e.g_target;
    best.objective = e.objective;
  }
  double prev_j = best.objective;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    // Sums are rebuilt each sweep so incremental drift cannot accumulate.
    std::complex<double> s_user = full_sum(problem.direct_user, ct.w_user, phases);
    std::complex<double> s_target = full_sum(problem.direct_target, ct.w_target, phases);
    for (std::size_t n = 0; n < problem.size(); ++n) {
      const std::complex<double> e_old = std::polar(1.0, phases[n]);
      const std::complex<double> su = s_user - ct.w_user[n] * e_old;
      const std::complex<double> st = s_target - ct.w_target[n] * e_old;
      const std::complex<double> z = element_coefficient(problem, ct, su, st, n);
      if (std::abs(z) >= kDegenerateZ) phases[n] = wrap_phase(kPi - std::arg(z));
      const std::complex<double> e_new = std::polar(1.0, phases[n]);
      s_user = su + ct.w_user[n] * e_new;
      s_target = st + ct.w_target[n] * e_new;
    }

    PhaseProfile candidate;
    candidate.phases = phases;
    const RisEval e = evaluate(problem, candidate);
    if (e.objective < best.objective) {
      best.phases = candidate;
      best.g_user = e.g_user;
      best.g_target = e.g_target;
      best.objective = e.objective;
    }
    best.trace.push_back(best.objective);
    if (prev_j - e.objective < tol * (std::fabs(prev_j) + 1e-12)) break;
    prev_j = e.objective;
  }
  return best;
}

PhaseProfile single_element_update(const RisProblem& problem, const PhaseProfile& phases,
                                   std::size_t element) {
  problem.validate();
  if (phases.size() != problem.size())
    throw std::invalid_argument("single_element_update: size mismatch");
  if (element >= problem.size())
    throw std::invalid_argument("single_element_update: element out of range");

  const CrossTerms ct = cross_terms(problem);
  const std::complex<double> e_old = std::polar(1.0, phases.phases[element]);
  const std::complex<double> su =
      full_sum(problem.direct_user, ct.w_user, phases.phases) - ct.w_user[element] * e_old;
  const std::complex<double> st =
      full_sum(problem.direct_target, ct.w_target, phases.phases) - ct.w_target[element] * e_old;
  const std::complex<double> z = element_coefficient(problem, ct, su, st, element);
  if (std::abs(z) < kDegenerateZ) return phases;

  PhaseProfile updated = phases;
  updated.phases[element] = wrap_phase(kPi - std::arg(z));
  // The closed form can only lower J; the guard rejects sub-ulp regressions.
  if (evaluate(problem, updated).objective <= evaluate(problem, phases).objective)
    return updated;
  return phases;
}

RisResult exhaustive_quantized(const RisProblem& problem, int bits) {
  problem.validate();
  if (bits < 1) throw std::invalid_argument("exhaustive_quantized: bits must be >= 1");
  const std::size_t n = problem.size();
  if (static_cast<double>(n) * bits > 20.0)
    throw std::invalid_argument("exhaustive_quantized: refusing a lattice above 2^20 profiles");

  const std::uint64_t levels = std::uint64_t{1} << bits;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= levels;

  std::vector<double> level_phase(levels);
  for (std::uint64_t l = 0; l < levels; ++l)
    level_phase[l] = kTwoPi * static_cast<double>(l) / static_cast<double>(levels);

  RisResult best;
  PhaseProfile candidate;
  candidate.phases.assign(n, 0.0);
  bool first = true;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      candidate.phases[i] = level_phase[c % levels];
      c /= levels;
    }
    const RisEval e = evaluate(problem, candidate);
    if (first || e.objective < best.objective) {
      best.phases = candidate;
      best.g_user = e.g_user;
      best.g_target = e.g_target;
      best.objective = e.objective;
      first = false;
    }
  }
  best.trace.push_back(best.objective);
  return best;
}

PhaseProfile baseline_phases(PhaseInit kind, const RisProblem& problem, std::uint64_t seed) {
  problem.validate();
  PhaseProfile profile;
  profile.phases.assign(problem.size(), 0.0);
  switch (kind) {
    case PhaseInit::Zero:
      break;
    case PhaseInit::Random: {
      auto stream = rng::substream(seed, rng::kTagRisPhases);
      for (double& p : profile.phases) p = stream.uniform(0.0, kTwoPi);
      break;
    }
    case PhaseInit::AlignTarget: {
      for (std::size_t n = 0; n < problem.size(); ++n) {
        const std::complex<double> w = std::conj(problem.ris_to_target[n]) * problem.tx_to_ris[n];
        if (std::abs(w) >= kDegenerateZ) profile.phases[n] = wrap_phase(-std::arg(w));
      }
      break;
    }
  }
  return profile;
}

RisProblem build_ris_problem(const Scenario& scenario, const RisSettings& settings,
                             double power_w) {
  if (!scenario.ris) throw std::invalid_argument("build_ris_problem: scenario has no RIS");
  if (settings.user_index >= scenario.private_users.size())
    throw std::invalid_argument("build_ris_problem: private user index out of range");
  if (settings.target_index >= scenario.sensing_targets.size())
    throw std::invalid_argument("build_ris_problem: sensing target index out of range");

  RisProblem p;
  p.tx_to_ris = ris_incident_channel(scenario);
  const RisPathTerms user = ris_departure_terms(scenario, scenario.private_users[settings.user_index]);
  const RisPathTerms target =
      ris_departure_terms(scenario, scenario.sensing_targets[settings.target_index]);
  p.ris_to_user = user.response;
  p.ris_to_target = target.response;
  p.direct_user = user.direct;
  p.direct_target = target.direct;
  p.tradeoff_weight = settings.tradeoff_weight;
  p.power_w = power_w;
  return p;
}

}  // namespace sppn
