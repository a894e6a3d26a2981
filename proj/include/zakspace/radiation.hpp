#pragma once

#include <vector>

#include "zakspace/euclid.hpp"
#include "zakspace/repr.hpp"

namespace zakspace {

using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

struct VectorField {
  std::vector<CVec3> values;  // aligned with the sample points
};

struct ScatteringSetup {
  std::vector<double> density;  // phi per sample
  double omega = 1.0;
  double c_light = 1.0;
  Vec3 s0 = Vec3(0, 0, 1);
};

// I - s s^T; throws InvalidArgument unless |s| = 1 to 1e-12.
Eigen::Matrix3d transverse_projector(const Vec3& s);

// E(x) = n e^{i k.x}; NotTransverse unless |n.k| <= 1e-10.
VectorField plane_wave(const Vec3& k, const CVec3& n, const std::vector<RVector>& points);

// (rho_g E)(x) = Q E(Q^T (x - c)) on a sample set; SampleSetNotClosed when
// Q^T(x - c) is not a sample.
VectorField act_field(const IsometryElement& g, const VectorField& e, const std::vector<RVector>& points,
                      double tol = 1e-9);
// Same, using the permutation of a finite orbit model.
VectorField act_field(const FiniteIsometryAction& model, int g, const VectorField& e);

// P(s0^perp) sum_x w(x) E(x) e^{-i (omega/c) s0.x} phi(x)
CVec3 radiation_transform(const VectorField& e, const std::vector<RVector>& points,
                          const std::vector<double>& weights, const ScatteringSetup& setup);
// phihat(l) = sum_x w(x) phi(x) e^{-i l.x}
cplx density_fourier(const std::vector<RVector>& points, const std::vector<double>& weights,
                     const std::vector<double>& density, const Vec3& l);

struct SymmetryProjection {
  std::vector<CVec3> channels;     // R[P^sigma E] per irrep (weight d/|G| included)
  std::vector<CVec3> channels_fd;  // same, evaluated through the fundamental domain
  CVec3 total;                     // sum of channels
  CVec3 expected;                  // P(s0^perp) n phihat((omega/c) s0 - k)
  double recovery_residual = 0.0;  // |total - expected|
  double route_residual = 0.0;     // max |channels - channels_fd|
};

// Throws DensityNotInvariant when phi (or the quadrature weights) is not
// constant on orbits.
SymmetryProjection symmetry_projected_transform(const FiniteIsometryAction& model, const DualObject& dual,
                                                const Vec3& k, const CVec3& n, const ScatteringSetup& setup);

// Deterministic, nearly uniform unit vectors (Fibonacci lattice on the sphere).
std::vector<Vec3> fibonacci_directions(int count);

}  // namespace zakspace
