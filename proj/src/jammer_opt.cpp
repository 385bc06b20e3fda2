#include "sppn/jammer_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "sppn/errors.hpp"

namespace sppn {

CandidateGrid CandidateGrid::regular(const Region& region, double resolution_m) {
  region.validate();
  if (!(resolution_m > 0.0) || !std::isfinite(resolution_m))
    throw std::invalid_argument("candidate grid: resolution must be positive");
  const std::size_t nx = static_cast<std::size_t>(std::ceil(region.width() / resolution_m));
  const std::size_t ny = static_cast<std::size_t>(std::ceil(region.height() / resolution_m));
  CandidateGrid grid;
  grid.resolution = resolution_m;
  grid.cells.reserve(nx * ny);
  for (std::size_t j = 0; j < ny; ++j) {
    const double y_lo = region.y_min + static_cast<double>(j) * resolution_m;
    const double y_hi = std::min(y_lo + resolution_m, region.y_max);
    for (std::size_t i = 0; i < nx; ++i) {
      const double x_lo = region.x_min + static_cast<double>(i) * resolution_m;
      const double x_hi = std::min(x_lo + resolution_m, region.x_max);
      grid.cells.push_back({0.5 * (x_lo + x_hi), 0.5 * (y_lo + y_hi)});
    }
  }
  return grid;
}

CandidateGrid CandidateGrid::with_extra_cells(std::span<const Point2D> extra) const {
  CandidateGrid out = *this;
  for (Point2D p : extra) {
    if (std::find(out.cells.begin(), out.cells.end(), p) == out.cells.end())
      out.cells.push_back(p);
  }
  return out;
}

void AcoParams::validate() const {
  if (n_ants < 1) throw std::invalid_argument("aco: need at least one ant");
  if (n_iterations < 1) throw std::invalid_argument("aco: need at least one iteration");
  if (!(evaporation > 0.0) || !(evaporation <= 1.0))
    throw std::invalid_argument("aco: evaporation must lie in (0, 1]");
  if (!(pheromone_init > 0.0)) throw std::invalid_argument("aco: pheromone init must be positive");
  if (!(heuristic_weight >= 0.0)) throw std::invalid_argument("aco: heuristic weight must be >= 0");
  if (!(exploitation_prob >= 0.0) || !(exploitation_prob <= 1.0))
    throw std::invalid_argument("aco: exploitation probability must lie in [0, 1]");
  if (!(penalty_weight >= 0.0)) throw std::invalid_argument("aco: penalty weight must be >= 0");
  if (!std::isfinite(impact_budget_db))
    throw std::invalid_argument("aco: impact budget must be finite");
}

PlacementObjective PlacementObjective::from(double pse, double impact_db,
                                            const AcoParams& params) {
  PlacementObjective o;
  o.pse = pse;
  o.impact_db = impact_db;
  o.penalized = pse + params.penalty_weight * std::max(0.0, impact_db - params.impact_budget_db);
  return o;
}

namespace {

// Steering rule shared by every constructed placement: main lobe at the
// nearest eavesdropper, or radially outward from `center` when there is none.
double steer_from(Point2D position, const Scenario& sc, Point2D center) {
  if (sc.eavesdroppers.empty()) {
    const double b = bearing(center, position);
    return std::isfinite(b) ? b : 0.0;
  }
  std::size_t best = 0;
  double best_d = distance(position, sc.eavesdroppers[0]);
  for (std::size_t i = 1; i < sc.eavesdroppers.size(); ++i) {
    const double d = distance(position, sc.eavesdroppers[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return bearing(position, sc.eavesdroppers[best]);
}

Point2D protected_centroid(const Scenario& sc) {
  if (sc.private_users.empty()) return sc.region.center();
  Point2D c{0.0, 0.0};
  for (Point2D p : sc.private_users) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<double>(sc.private_users.size());
  c.y /= static_cast<double>(sc.private_users.size());
  return c;
}

Placement placement_from_cells(const std::vector<int>& cells, const CandidateGrid& grid,
                               const Scenario& sc) {
  Placement pl;
  pl.jammers.reserve(cells.size());
  const Point2D center = sc.region.center();
  for (int c : cells) {
    const Point2D pos = grid.cells[static_cast<std::size_t>(c)];
    pl.jammers.push_back({pos, steer_from(pos, sc, center), sc.jammer_pattern});
  }
  return pl;
}

double binomial_coefficient(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i)
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

}  // namespace

Placement fixed_placement(const Scenario& scenario, int k) {
  if (k < 0) throw std::invalid_argument("fixed_placement: jammer count must be >= 0");
  Placement pl;
  if (k == 0) return pl;
  const Point2D center = protected_centroid(scenario);
  const double radius = 0.4 * std::min(scenario.region.width(), scenario.region.height());
  pl.jammers.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double angle = kTwoPi * static_cast<double>(i) / static_cast<double>(k);
    Point2D pos{center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
    pos = scenario.region.clamp(pos);
    const double steering =
        scenario.eavesdroppers.empty() ? angle : steer_from(pos, scenario, center);
    pl.jammers.push_back({pos, steering, scenario.jammer_pattern});
  }
  return pl;
}

PlacementObjective evaluate_placement(const Scenario& scenario, const Placement& placement,
                                      const AcoParams& params, std::uint64_t trials,
                                      std::uint64_t seed, int workers) {
  if (trials < 1) throw std::invalid_argument("evaluate_placement: trials must be >= 1");
  params.validate();
  const PseEstimate info =
      estimate_pse(scenario, placement, EavesdropChannel::Information, trials, seed, workers);
  const PseEstimate sense =
      estimate_pse(scenario, placement, EavesdropChannel::Sensing, trials, seed, workers);
  const double pse = 0.5 * (info.mean + sense.mean);
  const double impact =
      measure_legit_impact(scenario, placement, trials, seed, workers).mean_legit_sinr_loss_db;
  return PlacementObjective::from(pse, impact, params);
}

namespace {

// Common-random-number evaluation memo: one deterministic J per cell subset.
class CandidateCache {
 public:
  CandidateCache(const Scenario& sc, const CandidateGrid& grid, const AcoParams& params,
                 std::uint64_t trials, std::uint64_t seed, int workers)
      : sc_(sc), grid_(grid), params_(params), trials_(trials), seed_(seed), workers_(workers) {}

  const PlacementObjective& evaluate(std::vector<int> cells) {
    std::sort(cells.begin(), cells.end());
    auto it = cache_.find(cells);
    if (it == cache_.end()) {
      const Placement pl = placement_from_cells(cells, grid_, sc_);
      it = cache_.emplace(cells, evaluate_placement(sc_, pl, params_, trials_, seed_, workers_))
               .first;
    }
    return it->second;
  }

 private:
  const Scenario& sc_;
  const CandidateGrid& grid_;
  const AcoParams& params_;
  std::uint64_t trials_;
  std::uint64_t seed_;
  int workers_;
  std::map<std::vector<int>, PlacementObjective> cache_;
};

constexpr double kPheromoneFloor = 1e-12;

std::vector<int> nearest_cells_to(const std::vector<Point2D>& targets,
                                  const CandidateGrid& grid) {
  std::vector<int> chosen;
  chosen.reserve(targets.size());
  for (Point2D t : targets) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < grid.cells.size(); ++c) {
      if (std::find(chosen.begin(), chosen.end(), static_cast<int>(c)) != chosen.end()) continue;
      const double d = distance(grid.cells[c], t);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(c);
      }
    }
    chosen.push_back(best);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

AcoResult aco_optimize(const Scenario& scenario, int k, const CandidateGrid& grid,
                       const AcoParams& params, std::uint64_t trials, std::uint64_t seed,
                       int workers) {
  params.validate();
  if (k < 0) throw std::invalid_argument("aco_optimize: jammer count must be >= 0");
  if (static_cast<std::size_t>(k) > grid.cells.size())
    throw std::invalid_argument("aco_optimize: more jammers than candidate cells");

  CandidateCache cache(scenario, grid, params, trials, seed, workers);

  AcoResult result;
  if (k == 0) {
    result.objective = cache.evaluate({});
    result.trace.push_back(result.objective.penalized);
    return result;
  }

  const std::size_t n_cells = grid.cells.size();
  std::vector<double> heuristic(n_cells, 1.0);
  if (!scenario.eavesdroppers.empty()) {
    for (std::size_t c = 0; c < n_cells; ++c) {
      double nearest = std::numeric_limits<double>::infinity();
      for (Point2D e : scenario.eavesdroppers)
        nearest = std::min(nearest, distance(grid.cells[c], e));
      heuristic[c] = 1.0 / (1.0 + nearest);
    }
  }
  std::vector<double> pheromone(n_cells, params.pheromone_init);

  // The ring baseline, snapped to the grid, seeds the incumbent; the search
  // can only improve on any fixed placement the grid can express.
  std::vector<int> best_cells = nearest_cells_to(
      [&] {
        std::vector<Point2D> pts;
        for (const JammerNode& j : fixed_placement(scenario, k).jammers) pts.push_back(j.position);
        return pts;
      }(),
      grid);
  PlacementObjective best_obj = cache.evaluate(best_cells);

  const auto weight = [&](std::size_t c) {
    return pheromone[c] * std::pow(heuristic[c], params.heuristic_weight);
  };

  for (int iter = 1; iter <= params.n_iterations; ++iter) {
    for (int ant = 0; ant < params.n_ants; ++ant) {
      auto stream = rng::substream(seed, rng::kTagAcoAnt, static_cast<std::uint64_t>(iter),
                                   static_cast<std::uint64_t>(ant));
      std::vector<char> taken(n_cells, 0);
      std::vector<int> cells;
      cells.reserve(static_cast<std::size_t>(k));
      for (int pick = 0; pick < k; ++pick) {
        std::size_t chosen = n_cells;
        if (stream.next_double() < params.exploitation_prob) {
          double best_w = -1.0;
          for (std::size_t c = 0; c < n_cells; ++c) {
            if (taken[c]) continue;
            const double w = weight(c);
            if (w > best_w) {
              best_w = w;
              chosen = c;
            }
          }
        } else {
          double total = 0.0;
          for (std::size_t c = 0; c < n_cells; ++c)
            if (!taken[c]) total += weight(c);
          double r = stream.next_double() * total;
          for (std::size_t c = 0; c < n_cells; ++c) {
            if (taken[c]) continue;
            r -= weight(c);
            chosen = c;
            if (r <= 0.0) break;
          }
        }
        taken[chosen] = 1;
        cells.push_back(static_cast<int>(chosen));
      }
      const PlacementObjective& obj = cache.evaluate(cells);
      if (obj.penalized < best_obj.penalized) {
        best_obj = obj;
        std::sort(cells.begin(), cells.end());
        best_cells = cells;
      }
    }

    // Evaporate everywhere, deposit on the global best. The floor keeps
    // pheromone positive even at full evaporation.
    const double deposit = 1.0 / (best_obj.penalized + 1e-6);
    for (std::size_t c = 0; c < n_cells; ++c)
      pheromone[c] = std::max((1.0 - params.evaporation) * pheromone[c], kPheromoneFloor);
    for (int c : best_cells) pheromone[static_cast<std::size_t>(c)] += deposit;
    for (double p : pheromone)
      if (!(p > 0.0) || !std::isfinite(p)) throw InternalError("aco: pheromone left (0, inf)");

    result.trace.push_back(best_obj.penalized);
  }

  result.placement = placement_from_cells(best_cells, grid, scenario);
  result.objective = best_obj;
  return result;
}

BruteForceResult brute_force_placement(const Scenario& scenario, int k, const CandidateGrid& grid,
                                       const AcoParams& params, std::uint64_t trials,
                                       std::uint64_t seed, int workers) {
  params.validate();
  if (k < 0) throw std::invalid_argument("brute_force_placement: jammer count must be >= 0");
  const std::size_t n = grid.cells.size();
  if (static_cast<std::size_t>(k) > n)
    throw std::invalid_argument("brute_force_placement: more jammers than candidate cells");
  const double combos = binomial_coefficient(n, static_cast<std::size_t>(k));
  if (combos > 1e5)
    throw std::invalid_argument("brute_force_placement: refusing to enumerate > 1e5 subsets");

  CandidateCache cache(scenario, grid, params, trials, seed, workers);

  std::vector<int> cells(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cells[static_cast<std::size_t>(i)] = i;

  std::vector<int> best_cells;
  PlacementObjective best_obj;
  bool first = true;
  while (true) {
    const PlacementObjective& obj = cache.evaluate(cells);
    if (first || obj.penalized < best_obj.penalized) {
      best_obj = obj;
      best_cells = cells;
      first = false;
    }
    // Next lexicographic k-combination of {0, ..., n-1}.
    int i = k - 1;
    while (i >= 0 && cells[static_cast<std::size_t>(i)] ==
                         static_cast<int>(n) - k + i)
      --i;
    if (i < 0) break;
    ++cells[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cells[static_cast<std::size_t>(j)] = cells[static_cast<std::size_t>(j - 1)] + 1;
  }

  return {placement_from_cells(best_cells, grid, scenario), best_obj};
}

}  // namespace sppn
