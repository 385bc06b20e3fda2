#include "sppn/experiment.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sppn/errors.hpp"
#include "sppn/metrics.hpp"

namespace sppn {

std::string_view experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::JammerSweep: return "jammer-sweep";
    case ExperimentKind::RisPowerSweep: return "ris-power-sweep";
    case ExperimentKind::SingleEval: return "single";
  }
  return "unknown";
}

void ExperimentSpec::validate() const {
  if (swept_values.empty()) throw ValidationError("experiment: swept values must be non-empty");
  for (std::size_t i = 0; i < swept_values.size(); ++i) {
    if (!std::isfinite(swept_values[i]))
      throw ValidationError("experiment: swept values must be finite");
    if (i > 0 && swept_values[i] <= swept_values[i - 1])
      throw ValidationError("experiment: swept values must be strictly increasing");
  }
  if (trials < 1) throw ValidationError("experiment: trials must be >= 1");
  if (workers < 1) throw ValidationError("experiment: workers must be >= 1");
}

namespace {

int as_jammer_count(double v) {
  if (v < 0.0 || v != std::floor(v) || v > 4096.0)
    throw ValidationError("jammer sweep: swept values must be small non-negative integers");
  return static_cast<int>(v);
}

void require_pse_ready(const Scenario& sc) {
  if (sc.eavesdroppers.empty())
    throw ValidationError("scenario has no eavesdroppers; nothing to evaluate");
  if (sc.transmitters.empty())
    throw ValidationError("scenario has no transmitters; nothing to eavesdrop on");
}

}  // namespace

ExperimentResult run_jammer_sweep(const ExperimentSpec& spec, const SimConfig& config) {
  spec.validate();
  if (spec.kind != ExperimentKind::JammerSweep)
    throw std::invalid_argument("run_jammer_sweep: wrong experiment kind");
  const Scenario sc = build_scenario(config.scenario);
  require_pse_ready(sc);
  if (sc.receivers.empty())
    throw ValidationError("jammer sweep needs a receiver for the legitimate-impact audit");

  ExperimentResult out;
  out.results.columns = {"k",
                         "pse_info_fixed",
                         "pse_sense_fixed",
                         "pse_info_aco",
                         "pse_sense_aco",
                         "impact_fixed_db",
                         "impact_aco_db",
                         "pse_info_fixed_se",
                         "pse_sense_fixed_se",
                         "pse_info_aco_se",
                         "pse_sense_aco_se"};
  out.aco_trace = ResultTable{{"k", "iteration", "best_objective"}, {}};

  for (double value : spec.swept_values) {
    const int k = as_jammer_count(value);
    const Placement fixed = fixed_placement(sc, k);
    const PseEstimate fixed_info =
        estimate_pse(sc, fixed, EavesdropChannel::Information, spec.trials, spec.seed, spec.workers);
    const PseEstimate fixed_sense =
        estimate_pse(sc, fixed, EavesdropChannel::Sensing, spec.trials, spec.seed, spec.workers);
    const double fixed_impact =
        measure_legit_impact(sc, fixed, spec.trials, spec.seed, spec.workers)
            .mean_legit_sinr_loss_db;

    std::vector<Point2D> ring_points;
    ring_points.reserve(fixed.jammers.size());
    for (const JammerNode& j : fixed.jammers) ring_points.push_back(j.position);
    const CandidateGrid grid =
        CandidateGrid::regular(sc.region, config.aco_grid_resolution_m).with_extra_cells(ring_points);

    const AcoResult aco =
        aco_optimize(sc, k, grid, config.aco, spec.trials, spec.seed, spec.workers);
    const PseEstimate aco_info = estimate_pse(sc, aco.placement, EavesdropChannel::Information,
                                              spec.trials, spec.seed, spec.workers);
    const PseEstimate aco_sense = estimate_pse(sc, aco.placement, EavesdropChannel::Sensing,
                                               spec.trials, spec.seed, spec.workers);

    out.results.rows.push_back({static_cast<double>(k), fixed_info.mean, fixed_sense.mean,
                                aco_info.mean, aco_sense.mean, fixed_impact,
                                aco.objective.impact_db, fixed_info.std_error,
                                fixed_sense.std_error, aco_info.std_error, aco_sense.std_error});
    for (std::size_t it = 0; it < aco.trace.size(); ++it)
      out.aco_trace->rows.push_back(
          {static_cast<double>(k), static_cast<double>(it + 1), aco.trace[it]});
  }
  return out;
}

ExperimentResult run_ris_power_sweep(const ExperimentSpec& spec, const SimConfig& config) {
  spec.validate();
  if (spec.kind != ExperimentKind::RisPowerSweep)
    throw std::invalid_argument("run_ris_power_sweep: wrong experiment kind");
  const Scenario sc = build_scenario(config.scenario);
  if (!sc.ris) throw ValidationError("ris power sweep requires an RIS in the scenario");
  if (sc.transmitters.empty()) throw ValidationError("ris power sweep requires a transmitter");
  if (config.ris.user_index >= sc.private_users.size())
    throw ValidationError("ris power sweep: private user index out of range");
  if (config.ris.target_index >= sc.sensing_targets.size())
    throw ValidationError("ris power sweep: sensing target index out of range");
  for (double p : spec.swept_values)
    if (p < 0.0) throw ValidationError("ris power sweep: powers must be >= 0");

  // Optimize once at 1 W: the argmin phases are power-invariant, so each row
  // is the unit-power gain scaled by its P.
  const RisProblem problem = build_ris_problem(sc, config.ris, 1.0);
  const PhaseProfile init = baseline_phases(config.ris.init, problem, spec.seed);
  const RisResult opt =
      coordinate_descent(problem, init, config.ris.tolerance, config.ris.max_sweeps);
  const PhaseProfile random_phases = baseline_phases(PhaseInit::Random, problem, spec.seed);
  const RisEval random_eval = evaluate(problem, random_phases);

  ExperimentResult out;
  out.results.columns = {"P", "g_user_opt", "g_target_opt", "g_user_random", "g_target_random"};
  for (double p : spec.swept_values)
    out.results.rows.push_back({p, p * opt.g_user, p * opt.g_target, p * random_eval.g_user,
                                p * random_eval.g_target});
  return out;
}

ExperimentResult run_single_eval(const ExperimentSpec& spec, const SimConfig& config) {
  spec.validate();
  if (spec.kind != ExperimentKind::SingleEval)
    throw std::invalid_argument("run_single_eval: wrong experiment kind");
  const Scenario sc = build_scenario(config.scenario);
  require_pse_ready(sc);
  if (sc.receivers.empty())
    throw ValidationError("single evaluation needs a receiver for the legitimate-impact audit");

  const int k = as_jammer_count(spec.swept_values.front());
  const Placement placement = fixed_placement(sc, k);
  const PseEstimate info =
      estimate_pse(sc, placement, EavesdropChannel::Information, spec.trials, spec.seed, spec.workers);
  const PseEstimate sense =
      estimate_pse(sc, placement, EavesdropChannel::Sensing, spec.trials, spec.seed, spec.workers);
  const ImpactReport impact =
      measure_legit_impact(sc, placement, spec.trials, spec.seed, spec.workers);

  ExperimentResult out;
  out.results.columns = {"k",          "pse_info",    "pse_sense", "impact_db",
                         "outage_delta", "pse_info_se", "pse_sense_se"};
  out.results.rows.push_back({static_cast<double>(k), info.mean, sense.mean,
                              impact.mean_legit_sinr_loss_db, impact.legit_outage_delta,
                              info.std_error, sense.std_error});
  return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const SimConfig& config) {
  switch (spec.kind) {
    case ExperimentKind::JammerSweep: return run_jammer_sweep(spec, config);
    case ExperimentKind::RisPowerSweep: return run_ris_power_sweep(spec, config);
    case ExperimentKind::SingleEval: return run_single_eval(spec, config);
  }
  throw std::invalid_argument("run_experiment: unknown kind");
}

namespace {

std::string fmt_full(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string render_resolved_config(const SimConfig& config) {
  std::ostringstream out;
  const ScenarioConfig& s = config.scenario;
  out << "  seed = " << s.seed << "\n";
  out << "  sinr_threshold = " << fmt_full(s.sinr_threshold) << "\n";
  out << "  fading = " << (s.fading == FadingModel::Rayleigh ? "rayleigh" : "none") << "\n";
  out << "  region = [" << fmt_full(s.region.x_min) << ", " << fmt_full(s.region.x_max) << "] x ["
      << fmt_full(s.region.y_min) << ", " << fmt_full(s.region.y_max) << "]\n";
  out << "  radio.tx_power_w = " << fmt_full(s.radio.tx_power_w) << "\n";
  out << "  radio.jam_power_w = " << fmt_full(s.radio.jam_power_w) << "\n";
  out << "  radio.noise_power_w = " << fmt_full(s.radio.noise_power_w) << "\n";
  out << "  radio.pathloss_exponent = " << fmt_full(s.radio.pathloss_exponent) << "\n";
  out << "  radio.reference_distance_m = " << fmt_full(s.radio.reference_distance_m) << "\n";
  out << "  radio.reference_gain = " << fmt_full(s.radio.reference_gain) << "\n";
  out << "  radio.min_distance_m = " << fmt_full(s.radio.min_distance_m) << "\n";
  if (s.jammer_pattern.kind == BeamPattern::Kind::Omni) {
    out << "  jammers.pattern = omni\n";
  } else {
    out << "  jammers.pattern = sector\n";
    out << "  jammers.main_gain = " << fmt_full(s.jammer_pattern.main_gain) << "\n";
    out << "  jammers.side_gain = " << fmt_full(s.jammer_pattern.side_gain) << "\n";
    out << "  jammers.half_beamwidth_rad = " << fmt_full(s.jammer_pattern.half_beamwidth) << "\n";
  }
  if (s.ris) {
    out << "  ris.position = (" << fmt_full(s.ris->position.x) << ", "
        << fmt_full(s.ris->position.y) << ")\n";
    out << "  ris.n_elements = " << s.ris->array.n_elements << "\n";
    out << "  ris.grid_cols = " << s.ris->array.grid_cols << "\n";
    out << "  ris.element_spacing_wl = " << fmt_full(s.ris->array.element_spacing) << "\n";
    out << "  ris.orientation_rad = " << fmt_full(s.ris->array.orientation) << "\n";
    out << "  ris.include_direct_path = " << (s.ris->include_direct_path ? "true" : "false")
        << "\n";
    out << "  ris.tradeoff_weight = " << fmt_full(config.ris.tradeoff_weight) << "\n";
    const char* init = config.ris.init == PhaseInit::Random
                           ? "random"
                           : config.ris.init == PhaseInit::Zero ? "zero" : "align_target";
    out << "  ris.init = " << init << "\n";
    out << "  ris.tolerance = " << fmt_full(config.ris.tolerance) << "\n";
    out << "  ris.max_sweeps = " << config.ris.max_sweeps << "\n";
  }
  out << "  aco.n_ants = " << config.aco.n_ants << "\n";
  out << "  aco.n_iterations = " << config.aco.n_iterations << "\n";
  out << "  aco.evaporation = " << fmt_full(config.aco.evaporation) << "\n";
  out << "  aco.pheromone_init = " << fmt_full(config.aco.pheromone_init) << "\n";
  out << "  aco.heuristic_weight = " << fmt_full(config.aco.heuristic_weight) << "\n";
  out << "  aco.exploitation_prob = " << fmt_full(config.aco.exploitation_prob) << "\n";
  out << "  aco.penalty_weight = " << fmt_full(config.aco.penalty_weight) << "\n";
  out << "  aco.impact_budget_db = " << fmt_full(config.aco.impact_budget_db) << "\n";
  out << "  aco.grid_resolution_m = " << fmt_full(config.aco_grid_resolution_m) << "\n";
  return out.str();
}

std::string render_manifest(const RunManifest& manifest) {
  std::ostringstream out;
  out << "tool_version: " << manifest.tool_version << "\n";
  out << "experiment: " << manifest.experiment << "\n";
  out << "scenario_file: " << manifest.scenario_path << "\n";
  out << "swept_values: ";
  for (std::size_t i = 0; i < manifest.swept_values.size(); ++i) {
    if (i) out << ", ";
    out << fmt_full(manifest.swept_values[i]);
  }
  out << "\n";
  out << "trials: " << manifest.trials << "\n";
  out << "seed: " << manifest.seed << "\n";
  out << "workers: " << manifest.workers << "\n";
  out << "duration_seconds: " << manifest.duration_seconds << "\n";
  out << "resolved_config:\n" << manifest.resolved_config;
  return out.str();
}

void emit_outputs(const ExperimentResult& result, const RunManifest& manifest,
                  const std::filesystem::path& output_dir) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) throw IoError("cannot create output directory " + output_dir.string());
  write_file_atomic(output_dir / "results.csv", render_csv(result.results));
  if (result.aco_trace)
    write_file_atomic(output_dir / "aco_trace.csv", render_csv(*result.aco_trace));
  write_file_atomic(output_dir / "manifest.txt", render_manifest(manifest));
  write_file_atomic(output_dir / "plot.svg", render_svg(result.results));
}

}  // namespace sppn
