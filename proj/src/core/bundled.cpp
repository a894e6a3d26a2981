#include "zakspace/bundled.hpp"

#include <cmath>

#include "zakspace/error.hpp"

namespace zakspace {

namespace {

GroupAction cyclic_rotation(int n, const std::vector<double>& weights) {
  std::vector<std::vector<int>> perm(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) perm[g][x] = (x + g) % n;
  return GroupAction::make(cyclic_group(n), std::move(perm), weights);
}

GroupAction d4_square() {
  // points 0..3 vertices, 4..7 edge midpoints, 8 centre; element f*4+k = r^k s^f
  const FiniteGroup G = dihedral_group(4);
  std::vector<std::vector<int>> perm(8, std::vector<int>(9));
  for (int e = 0; e < 8; ++e) {
    const int f = e / 4, k = e % 4;
    for (int j = 0; j < 4; ++j) {
      const int v = f ? (4 - j) % 4 : j;
      const int mid = f ? ((-j - 1) % 4 + 4) % 4 : j;
      perm[e][j] = (v + k) % 4;
      perm[e][4 + j] = 4 + (mid + k) % 4;
    }
    perm[e][8] = 8;
  }
  return GroupAction::make(G, std::move(perm), std::vector<double>(9, 1.0));
}

RMatrix mirror2() {
  RMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

RVector vec(std::initializer_list<double> v) {
  RVector r(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) r[i++] = x;
  return r;
}

IsometryElement translation(std::initializer_list<double> c) {
  const RVector v = vec(c);
  return IsometryElement{RMatrix::Identity(v.size(), v.size()), v};
}

}  // namespace

std::vector<std::string> bundled_action_names() {
  return {"z2_swap", "z2_fixed", "z2_weighted", "z4_cycle", "c6_ring",
          "s3_left", "d3_triangle", "d3_flags", "c4_weighted", "d4_square"};
}

GroupAction bundled_action(const std::string& name) {
  if (name == "z2_swap") return GroupAction::make(cyclic_group(2), {{0, 1}, {1, 0}}, {1.0, 1.0});
  if (name == "z2_fixed") return GroupAction::make(cyclic_group(2), {{0, 1, 2}, {1, 0, 2}}, {1.0, 1.0, 1.0});
  if (name == "z2_weighted") return GroupAction::make(cyclic_group(2), {{0, 1}, {1, 0}}, {1.0, 2.0});
  if (name == "z4_cycle") return cyclic_rotation(4, {1.0, 1.0, 1.0, 1.0});
  if (name == "c6_ring") return cyclic_rotation(6, std::vector<double>(6, 1.0));
  if (name == "s3_left") return translation_action(symmetric_group(3));
  if (name == "d3_triangle") {
    const auto perms = symmetric_group_permutations(3);
    return GroupAction::make(symmetric_group(3), perms, {1.0, 1.0, 1.0});
  }
  if (name == "d3_flags") return translation_action(dihedral_group(3));
  if (name == "c4_weighted") {
    std::vector<std::vector<int>> perm(4, std::vector<int>(5));
    for (int g = 0; g < 4; ++g) {
      for (int x = 0; x < 4; ++x) perm[g][x] = (x + g) % 4;
      perm[g][4] = 4;
    }
    return GroupAction::make(cyclic_group(4), std::move(perm), {1.0, 2.0, 3.0, 4.0, 5.0});
  }
  if (name == "d4_square") return d4_square();
  fail(ErrorCode::InvalidArgument, "unknown bundled action '" + name + "'");
}

std::string bundled_dual_hint(const std::string& name) {
  if (name == "d3_flags") return "dihedral:3";
  if (name == "d4_square") return "dihedral:4";
  return "";
}

std::vector<std::string> bundled_isometry_names() {
  return {"c6", "d3", "p2", "pm", "p4", "p4_short", "helix", "screw5", "translation1d"};
}

IsometryGroupSpec bundled_isometry(const std::string& name) {
  IsometryGroupSpec s;
  const double pi = std::numbers::pi;
  if (name == "c6") {
    s.dim = 2;
    s.generators = {rotation2(pi / 3, vec({0, 0}))};
  } else if (name == "d3") {
    s.dim = 2;
    s.generators = {rotation2(2 * pi / 3, vec({0, 0})), IsometryElement{mirror2(), vec({0, 0})}};
  } else if (name == "p2") {
    s.dim = 2;
    s.generators = {rotation2(pi, vec({0, 0})), translation({1, 0}), translation({0, 1})};
    s.truncation.radius = 6;
  } else if (name == "pm") {
    s.dim = 2;
    s.generators = {IsometryElement{mirror2(), vec({0, 0})}, translation({1, 0}), translation({0, 1})};
    s.truncation.radius = 6;
  } else if (name == "p4" || name == "p4_short") {
    s.dim = 2;
    s.generators = {rotation2(pi / 2, vec({0, 0})), translation({1, 0}), translation({0, 1})};
    s.truncation.radius = 6;
    if (name == "p4_short") s.truncation.word_length = 1;
  } else if (name == "helix") {
    // Irrational rotation, advance 0.5 per step.
    const double angle = pi * (std::sqrt(5.0) - 1.0);
    s.dim = 3;
    s.generators = {screw(vec({0, 0, 1}), angle, 0.5 * kTwoPi / angle)};
    s.truncation.radius = 10;
  } else if (name == "screw5") {
    s.dim = 3;
    s.generators = {screw(vec({0, 0, 1}), 2 * pi / 5, 5.0)};
    s.truncation.radius = 10;
  } else if (name == "translation1d") {
    s.dim = 2;
    s.generators = {translation({1, 0})};
    s.truncation.radius = 10;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown bundled isometry group '" + name + "'");
  }
  return s;
}

RadiationModel bundled_radiation_model() {
  RadiationModel m;
  m.spec.dim = 3;
  m.spec.generators = {rotation3(vec({0, 0, 1}), std::numbers::pi / 2, vec({0, 0, 0}))};
  m.seeds = {vec({1.0, 0.3, 0.2}), vec({2.1, -0.7, -0.5}), vec({0.0, 0.0, 0.4})};
  m.seed_weights = {0.7, 1.3, 0.9};
  return m;
}

}  // namespace zakspace
