#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sppn/config.hpp"
#include "sppn/output.hpp"

namespace sppn {

inline constexpr std::string_view kToolVersion = "sppn-sim 0.1.0";

enum class ExperimentKind { JammerSweep, RisPowerSweep, SingleEval };

std::string_view experiment_name(ExperimentKind kind);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::SingleEval;
  std::vector<double> swept_values;  // non-empty, strictly increasing
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string scenario_path;
  std::string output_dir;
  int workers = 1;
  void validate() const;
};

// Everything needed to reproduce a run bit-exactly with the same tool
// version, plus the wall-clock duration.
struct RunManifest {
  std::string tool_version{kToolVersion};
  std::string experiment;
  std::string scenario_path;
  std::vector<double> swept_values;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string resolved_config;  // effective settings after defaults
  double duration_seconds = 0.0;
};

std::string render_manifest(const RunManifest& manifest);
std::string render_resolved_config(const SimConfig& config);

struct ExperimentResult {
  ResultTable results;
  std::optional<ResultTable> aco_trace;
};

// One CSV row per jammer count k: PSE of both channels for the fixed ring and
// the ACO placement, their impact, and the PSE standard errors.
ExperimentResult run_jammer_sweep(const ExperimentSpec& spec, const SimConfig& config);

// Optimizes phases once at 1 W (the argmin is power-invariant) and scales the
// four gain columns linearly over the swept powers.
ExperimentResult run_ris_power_sweep(const ExperimentSpec& spec, const SimConfig& config);

// Single evaluation at k = swept_values[0] jammers on the fixed ring.
ExperimentResult run_single_eval(const ExperimentSpec& spec, const SimConfig& config);

ExperimentResult run_experiment(const ExperimentSpec& spec, const SimConfig& config);

// Writes results.csv, manifest.txt, plot.svg and, when present, aco_trace.csv.
void emit_outputs(const ExperimentResult& result, const RunManifest& manifest,
                  const std::filesystem::path& output_dir);

}  // namespace sppn
