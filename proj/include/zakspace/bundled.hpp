#pragma once

#include <string>
#include <vector>

#include "zakspace/euclid.hpp"

namespace zakspace {

// Small actions used by the fixtures, the tests and `suite all`.
//   z2_swap      Z2 swapping two points
//   z2_fixed     Z2 on {a, b, c} with c fixed
//   z2_weighted  Z2 swap with weights (1, 2)
//   z4_cycle     Z4 rotating 4 cycle points
//   c6_ring      Z6 rotating 6 ring points
//   s3_left      S3 acting on itself by left translation
//   d3_triangle  S3 permuting 3 triangle vertices
//   d3_flags     D3 acting freely on 6 flags
//   c4_weighted  Z4 on 4 cycle points (weights 1..4) plus a fixed centre
//   d4_square    D4 on square vertices, edge midpoints and centre
std::vector<std::string> bundled_action_names();
GroupAction bundled_action(const std::string& name);
// Catalog hint matching the bundled action's group ("" = automatic).
std::string bundled_dual_hint(const std::string& name);

// Isometry groups: c6, d3, p2, pm, p4, p4_short (word bound 1), helix
// (irrational screw), screw5 (rational screw), translation1d.
std::vector<std::string> bundled_isometry_names();
IsometryGroupSpec bundled_isometry(const std::string& name);

// C4 about z on two generic rings plus an on-axis point.
struct RadiationModel {
  IsometryGroupSpec spec;
  std::vector<RVector> seeds;
  std::vector<double> seed_weights;
};
RadiationModel bundled_radiation_model();

}  // namespace zakspace
