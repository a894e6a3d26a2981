#pragma once

#include <vector>

#include "zakspace/linalg.hpp"

namespace zakspace {

// Sampled torus with `cells[a]` samples per period cell and `periods[a]`
// Born-von-Karman periods along axis a. Samples are row-major over the grid
// shape cells[a] * periods[a].
struct LatticeShape {
  std::vector<int> cells;
  std::vector<int> periods;

  int dims() const { return static_cast<int>(cells.size()); }
  std::vector<int> grid() const;
  long grid_size() const;
  long cell_count() const;    // prod cells
  long period_count() const;  // prod periods
};

// Shape from grid dimensions and cell sizes; ShapeMismatch unless divisible.
LatticeShape lattice_shape(const std::vector<int>& grid, const std::vector<int>& cells);

// Z(x0, k) = sum_v f(x0 - v M) e^{-i k.v}, k_a = 2 pi j_a / N_a.
struct LatticeZakGrid {
  LatticeShape shape;
  std::vector<cplx> values;  // values[x0_linear * period_count + j_linear]

  cplx at(long x0, long j) const { return values[static_cast<std::size_t>(x0 * shape.period_count() + j)]; }
  // Dual sample index reduced modulo the periods (quasi-periodicity in k).
  cplx at(const std::vector<int>& x0, const std::vector<long>& j) const;
  std::vector<double> k_value(long j) const;
};

// One FFT over the period axes per cell offset.
LatticeZakGrid classic_zak(const std::vector<cplx>& samples, const LatticeShape& shape, int jobs = 1);
std::vector<cplx> classic_zak_inverse(const LatticeZakGrid& grid, int jobs = 1);

struct LatticeUnitarity {
  double lhs = 0.0;  // sum |f|^2
  double rhs = 0.0;  // sum_x0 sum_k |Z|^2 / N^d
  double residual = 0.0;
};
LatticeUnitarity lattice_unitarity(const LatticeZakGrid& grid, const std::vector<cplx>& samples);

}  // namespace zakspace
