#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "sppn/channel.hpp"
#include "sppn/scenario.hpp"

namespace sppn {

// One RIS phase-design instance: suppress the beampattern toward a private
// user while keeping the desired sensing target illuminated.
struct RisProblem {
  std::vector<std::complex<double>> tx_to_ris;     // includes sqrt path gain
  std::vector<std::complex<double>> ris_to_user;   // RIS response toward the user
  std::vector<std::complex<double>> ris_to_target; // RIS response toward the target
  std::complex<double> direct_user{0.0, 0.0};
  std::complex<double> direct_target{0.0, 0.0};
  double tradeoff_weight = 1.0;  // lambda_w >= 0
  double power_w = 1.0;

  std::size_t size() const { return tx_to_ris.size(); }
  void validate() const;
};

struct RisEval {
  double g_user = 0.0;
  double g_target = 0.0;
  double objective = 0.0;  // J = g_user - lambda_w * g_target
};

RisEval evaluate(const RisProblem& problem, const PhaseProfile& phases);

struct RisResult {
  PhaseProfile phases;
  double g_user = 0.0;
  double g_target = 0.0;
  double objective = 0.0;
  std::vector<double> trace;  // best J after each sweep, non-increasing
};

// Element-wise coordinate descent. Holding the other phases fixed, J as a
// function of phi_n is c + Re(z_n e^{j phi_n}) with
//   z_n = conj(s_user,n) w_user,n - lambda_w conj(s_target,n) w_target,n,
// w_x,n = conj(a_x,n) h_t,n and s_x,n the sum excluding element n, so each
// update applies the exact minimizer phi_n = pi - arg(z_n). Elements with
// |z_n| < 1e-15 are left unchanged. Stops when a full sweep improves J by
// less than tol*(|J| + 1e-12), or at max_sweeps.
RisResult coordinate_descent(const RisProblem& problem, const PhaseProfile& init,
                             double tol = 1e-8, int max_sweeps = 200);

// Applies one closed-form element update (recomputing the sums from scratch)
// and keeps the old phase unless the update improves J.
PhaseProfile single_element_update(const RisProblem& problem, const PhaseProfile& phases,
                                   std::size_t element);

// Exact minimum of J over the lattice {2 pi k / 2^bits}^N. Refuses when
// 2^(N*bits) exceeds 2^20.
RisResult exhaustive_quantized(const RisProblem& problem, int bits);

enum class PhaseInit { Random, Zero, AlignTarget };

// Random: i.i.d. uniform on [0, 2pi). Zero: all zeros. AlignTarget:
// phi_n = -arg(conj(a_target,n) h_t,n), coherent toward the target.
PhaseProfile baseline_phases(PhaseInit kind, const RisProblem& problem, std::uint64_t seed);

// Optimizer-facing settings read from the [ris] config section.
struct RisSettings {
  double tradeoff_weight = 1.0;
  PhaseInit init = PhaseInit::AlignTarget;
  double tolerance = 1e-8;
  int max_sweeps = 200;
  std::size_t user_index = 0;    // into scenario.private_users
  std::size_t target_index = 0;  // into scenario.sensing_targets
};

// Assembles the LoS problem for a scenario's RIS, protected user and desired
// sensing target.
RisProblem build_ris_problem(const Scenario& scenario, const RisSettings& settings,
                             double power_w);

}  // namespace sppn
