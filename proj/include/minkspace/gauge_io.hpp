#pragma once

#include <string>

#include "minkspace/gauge.hpp"

namespace minkspace {

// Gauge description files:
//   {"type":"polytope_h","normals":[[...],...]}
//   {"type":"polytope_v","vertices":[[...],...]}
//   {"type":"ellipsoid","Q":[[...],...],"c":[...]}
// each with an optional positive "scale". Validation failures raise
// ValidationError naming the violated invariant.
Gauge gauge_from_json(const std::string& text);
Gauge load_gauge_file(const std::string& path);
std::string gauge_to_json(const Gauge& g);

}  // namespace minkspace
