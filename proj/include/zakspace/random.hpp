#pragma once

#include <cstdint>
#include <random>

#include "zakspace/linalg.hpp"

namespace zakspace {

// Single seeded source for every random draw in the library (test functions,
// irrep splitting). Draw order is part of the determinism contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  cplx complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  CVector complex_vector(Eigen::Index n) {
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = complex_normal();
    return v;
  }
  RVector real_vector(Eigen::Index n, double lo = -1.0, double hi = 1.0) {
    RVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = uniform(lo, hi);
    return v;
  }
  CMatrix hermitian(Eigen::Index n) {
    CMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = complex_normal();
    return (a + a.adjoint()) * 0.5;
  }
  // Haar-distributed unitary via QR with phase correction.
  CMatrix unitary(Eigen::Index n) {
    CMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = complex_normal();
    Eigen::HouseholderQR<CMatrix> qr(a);
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx d = r(j, j);
      if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
    }
    return q;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace zakspace
