#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sppn/config.hpp"
#include "sppn/errors.hpp"
#include "sppn/experiment.hpp"

namespace {

sppn::ExperimentKind parse_kind(const std::string& name) {
  if (name == "jammer-sweep") return sppn::ExperimentKind::JammerSweep;
  if (name == "ris-power-sweep") return sppn::ExperimentKind::RisPowerSweep;
  return sppn::ExperimentKind::SingleEval;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-preserving ISAC network simulator"};

  std::string scenario_path;
  std::string experiment;
  std::string out_dir;
  std::vector<double> values;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  int workers = 1;

  app.add_option("--scenario", scenario_path, "Scenario config file")->required();
  app.add_option("--experiment", experiment, "jammer-sweep | ris-power-sweep | single")
      ->required()
      ->check(CLI::IsMember({"jammer-sweep", "ris-power-sweep", "single"}));
  app.add_option("--values", values, "Comma-separated swept values (jammer counts or watts)")
      ->delimiter(',');
  app.add_option("--trials", trials, "Monte Carlo trials per evaluation");
  app.add_option("--seed", seed, "Master seed; every random stream derives from it");
  app.add_option("--out", out_dir, "Output directory")->required();
  app.add_option("--workers", workers, "Worker threads for trial evaluation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    sppn::ExperimentSpec spec;
    spec.kind = parse_kind(experiment);
    spec.swept_values = values;
    if (spec.swept_values.empty()) {
      if (spec.kind == sppn::ExperimentKind::SingleEval)
        spec.swept_values = {0.0};
      else
        throw sppn::ValidationError("--values is required for sweep experiments");
    }
    spec.trials = trials;
    spec.seed = seed;
    spec.scenario_path = scenario_path;
    spec.output_dir = out_dir;
    spec.workers = workers;
    spec.validate();

    const sppn::SimConfig config = sppn::load_sim_config(scenario_path);

    const auto t0 = std::chrono::steady_clock::now();
    const sppn::ExperimentResult result = sppn::run_experiment(spec, config);
    const auto t1 = std::chrono::steady_clock::now();

    sppn::RunManifest manifest;
    manifest.experiment = std::string(sppn::experiment_name(spec.kind));
    manifest.scenario_path = scenario_path;
    manifest.swept_values = spec.swept_values;
    manifest.trials = spec.trials;
    manifest.seed = spec.seed;
    manifest.workers = spec.workers;
    manifest.resolved_config = sppn::render_resolved_config(config);
    manifest.duration_seconds = std::chrono::duration<double>(t1 - t0).count();

    sppn::emit_outputs(result, manifest, out_dir);
    std::cout << "wrote " << result.results.rows.size() << " rows to " << out_dir
              << "/results.csv\n";
    return 0;
  } catch (const sppn::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const sppn::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
