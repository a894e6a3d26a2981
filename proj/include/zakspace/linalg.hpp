#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace zakspace {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Default tolerances: exact combinatorial identities vs identities that go
// through an eigensolve.
inline constexpr double kExactTol = 1e-12;
inline constexpr double kEigenTol = 1e-9;

inline cplx unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace zakspace
