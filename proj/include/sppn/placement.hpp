#pragma once

#include <vector>

#include "sppn/channel.hpp"
#include "sppn/geometry.hpp"

namespace sppn {

struct JammerNode {
  Point2D position;
  double steering = 0.0;  // world bearing of the main lobe
  BeamPattern pattern;
};

// A candidate friendly-jammer deployment. May be empty.
struct Placement {
  std::vector<JammerNode> jammers;
};

}  // namespace sppn
