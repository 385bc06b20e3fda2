#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sppn/metrics.hpp"
#include "sppn/placement.hpp"
#include "sppn/scenario.hpp"

namespace sppn {

// Candidate jammer sites: centers of a rectangular tiling of the region,
// optionally augmented with extra hand-picked cells.
struct CandidateGrid {
  std::vector<Point2D> cells;
  double resolution = 0.0;  // meters; 0 for point collections

  static CandidateGrid regular(const Region& region, double resolution_m);
  CandidateGrid with_extra_cells(std::span<const Point2D> extra) const;
};

struct AcoParams {
  int n_ants = 8;
  int n_iterations = 15;
  double evaporation = 0.5;       // rho in (0, 1]
  double pheromone_init = 1.0;    // tau0 > 0
  double heuristic_weight = 2.0;  // beta >= 0
  double exploitation_prob = 0.5; // q0 in [0, 1]
  double penalty_weight = 0.5;    // mu >= 0
  double impact_budget_db = 0.5;  // dB of legit SINR loss tolerated penalty-free
  void validate() const;
};

struct PlacementObjective {
  double pse = 0.0;        // mean of Information and Sensing channel PSE
  double impact_db = 0.0;  // mean legitimate SINR loss
  double penalized = 0.0;  // J = pse + mu * max(0, impact_db - budget)

  static PlacementObjective from(double pse, double impact_db, const AcoParams& params);
};

// Deterministic baseline: k jammers equally spaced on a ring of radius
// 0.4*min(region width, height) around the private-user centroid (region
// center when there are no private users), each steered at its nearest
// eavesdropper, or radially outward when there are none.
Placement fixed_placement(const Scenario& scenario, int k);

// Penalized objective of a placement under common random numbers: PSE averaged
// over both eavesdrop channels plus the over-budget impact penalty.
PlacementObjective evaluate_placement(const Scenario& scenario, const Placement& placement,
                                      const AcoParams& params, std::uint64_t trials,
                                      std::uint64_t seed, int workers = 1);

struct AcoResult {
  Placement placement;
  PlacementObjective objective;
  std::vector<double> trace;  // best J after each iteration, non-increasing
};

// Ant-colony search over k-subsets of grid cells. Cell desirability combines
// pheromone with a 1/(1 + distance to nearest eavesdropper) heuristic; the
// global best deposits 1/(J + 1e-6) after each evaporation step. The ring
// baseline (snapped to the grid) seeds the incumbent, so the returned J never
// exceeds a fixed placement the grid can express. Deterministic per seed.
AcoResult aco_optimize(const Scenario& scenario, int k, const CandidateGrid& grid,
                       const AcoParams& params, std::uint64_t trials, std::uint64_t seed,
                       int workers = 1);

struct BruteForceResult {
  Placement placement;
  PlacementObjective objective;
};

// Exact minimizer of J over all k-subsets, with the same common-random-number
// evaluation ACO uses. Refuses when C(cells, k) exceeds 1e5.
BruteForceResult brute_force_placement(const Scenario& scenario, int k, const CandidateGrid& grid,
                                       const AcoParams& params, std::uint64_t trials,
                                       std::uint64_t seed, int workers = 1);

}  // namespace sppn
