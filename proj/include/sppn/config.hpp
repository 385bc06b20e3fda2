#pragma once

#include <filesystem>
#include <string>

#include "sppn/jammer_opt.hpp"
#include "sppn/ris_opt.hpp"
#include "sppn/scenario.hpp"

namespace sppn {

// Everything a scenario file configures: the world plus optimizer settings.
struct SimConfig {
  ScenarioConfig scenario;
  AcoParams aco;
  double aco_grid_resolution_m = 25.0;
  RisSettings ris;
};

// Parses the sectioned key/value scenario format. dB-valued keys (suffix _db)
// are converted to linear, _deg to radians. Unknown sections or keys are
// rejected.
SimConfig parse_sim_config(const std::string& text);

SimConfig load_sim_config(const std::filesystem::path& path);

}  // namespace sppn
