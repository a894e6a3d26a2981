#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zakspace/action.hpp"
#include "zakspace/linalg.hpp"

namespace zakspace {

// x -> Q x + c
struct IsometryElement {
  RMatrix Q;
  RVector c;

  int dim() const { return static_cast<int>(c.size()); }
  static IsometryElement identity(int dim);
};

// Checks dimension 2 or 3, shapes, and Q^T Q = I to 1e-12.
void validate_isometry(const IsometryElement& a);
IsometryElement compose(const IsometryElement& a, const IsometryElement& b);
IsometryElement inverse(const IsometryElement& a);
RVector act(const IsometryElement& a, const RVector& x);
double element_distance(const IsometryElement& a, const IsometryElement& b);

// Rotations and screws (convenience constructors).
IsometryElement rotation2(double angle, const RVector& c);
// Rotation about the unit axis through the origin, then translation c.
IsometryElement rotation3(const RVector& axis, double angle, const RVector& c);
// Screw about axis through the origin: rotation by angle, advance
// pitch * angle / (2 pi) along the axis (pitch = advance per full turn).
IsometryElement screw(const RVector& axis, double angle, double pitch);

struct Truncation {
  int word_length = 24;
  double radius = 50.0;
  double tolerance = 1e-9;
};

struct IsometryGroupSpec {
  int dim = 3;
  std::vector<IsometryElement> generators;
  Truncation truncation;
};

void validate_spec(const IsometryGroupSpec& spec);

struct GeneratedGroup {
  std::vector<IsometryElement> elements;  // BFS order, identity first
  std::vector<int> word_length;
  bool finite = false;                    // closure stabilized inside the bounds
};

// Breadth-first closure under generators and inverses. With require_finite a
// non-stabilizing closure throws TruncationExceeded (message carries the
// partial element count).
GeneratedGroup generate(const IsometryGroupSpec& spec, bool require_finite = false);

struct TranslationSubgroup {
  std::vector<int> indices;  // into GeneratedGroup::elements
  bool closed = true;        // within truncation
  bool normal = true;        // conjugation identity on sampled pairs
};
TranslationSubgroup translation_subgroup(const GeneratedGroup& group, const Truncation& truncation);

// || (Q|c')(I|c)(Q|c')^{-1} - (I|Qc) ||
double conjugation_identity_residual(const IsometryElement& g, const RVector& c);

struct TypeOneCertificate {
  std::string kind;       // "finite group", "translations", "helical", "inconclusive"
  std::string subgroup;   // description of the abelian normal subgroup
  long index = -1;        // finite index, -1 when inconclusive
  long group_elements = 0;      // generated within truncation
  long subgroup_elements = 0;   // of those, in the subgroup
  bool heuristic = false;
  std::optional<std::pair<long, long>> rational_angle;  // helical: angle / 2pi = p/q
  std::string note;
};

TypeOneCertificate type_one_certificate(const IsometryGroupSpec& spec);

// Continued-fraction rational approximation of x with denominator <= max_den.
std::optional<std::pair<long, long>> rational_approximation(double x, long max_den, double tol);

struct FiniteIsometryAction {
  GroupAction action;
  std::vector<IsometryElement> elements;  // one per group element, c reduced mod periods
  std::vector<RVector> points;
  std::vector<RVector> periods;
};

// Action on the union of orbits of the seed points, in the quotient by the
// period lattice (empty for finite groups). Throws NotClosable.
FiniteIsometryAction to_finite_action(const IsometryGroupSpec& spec,
                                      const std::vector<RVector>& seeds,
                                      const std::vector<RVector>& periods = {},
                                      const std::vector<double>& seed_weights = {});

}  // namespace zakspace
