#include "oracles.hpp"
#include "support.hpp"
#include "zakspace/lattice_zak.hpp"

using namespace zs_test;

namespace {

std::vector<cplx> random_samples(Rng& rng, long n) {
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

std::vector<int> unravel(long idx, const std::vector<int>& shape) {
  std::vector<int> out(shape.size());
  for (int a = static_cast<int>(shape.size()) - 1; a >= 0; --a) {
    out[a] = static_cast<int>(idx % shape[a]);
    idx /= shape[a];
  }
  return out;
}

const std::vector<std::pair<std::vector<int>, std::vector<int>>> kShapes = {
    {{64}, {1}}, {{64}, {4}}, {{16, 16}, {1, 1}}, {{16, 16}, {2, 4}}, {{12, 9}, {3, 3}}, {{6, 4, 10}, {2, 1, 5}}};

}  // namespace

TEST_CASE("shape validation") {
  const LatticeShape s = lattice_shape({16, 16}, {2, 4});
  CHECK(s.periods == std::vector<int>{8, 4});
  CHECK(s.cell_count() == 8);
  CHECK(s.grid_size() == 256);
  CHECK_CODE(lattice_shape({16}, {3}), ErrorCode::ShapeMismatch);
  CHECK_CODE(lattice_shape({16, 4}, {2}), ErrorCode::ShapeMismatch);
  CHECK_CODE(classic_zak(std::vector<cplx>(10), s), ErrorCode::ShapeMismatch);
}

TEST_CASE("FFT agrees with direct summation") {
  Rng rng(1);
  for (const auto& [grid, cells] : kShapes) {
    const LatticeShape s = lattice_shape(grid, cells);
    const auto f = random_samples(rng, s.grid_size());
    const LatticeZakGrid z = classic_zak(f, s);
    double scale = 0.0;
    for (auto v : f) scale += std::abs(v);
    for (long x0 = 0; x0 < s.cell_count(); ++x0)
      for (long j = 0; j < s.period_count(); ++j) {
        const cplx ref = oracle::classic_zak_direct(f, s.cells, s.periods, unravel(x0, s.cells), z.k_value(j));
        CHECK(std::abs(z.at(x0, j) - ref) < 1e-12 * scale);
      }
  }
}

TEST_CASE("round trip and Parseval") {
  Rng rng(2);
  for (const auto& [grid, cells] : kShapes) {
    const LatticeShape s = lattice_shape(grid, cells);
    const auto f = random_samples(rng, s.grid_size());
    const LatticeZakGrid z = classic_zak(f, s);
    const auto back = classic_zak_inverse(z);
    double err = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) err = std::max(err, std::abs(back[i] - f[i]));
    CHECK(err < 1e-12);
    const LatticeUnitarity u = lattice_unitarity(z, f);
    CHECK(std::abs(u.lhs - u.rhs) < 1e-11 * u.lhs);
  }
}

TEST_CASE("k-periodicity and quasi-periodicity in x") {
  Rng rng(3);
  const LatticeShape s = lattice_shape({12, 8}, {3, 2});
  const auto f = random_samples(rng, s.grid_size());
  const LatticeZakGrid z = classic_zak(f, s);
  for (long x0 = 0; x0 < s.cell_count(); ++x0) {
    const auto xv = unravel(x0, s.cells);
    for (long j = 0; j < s.period_count(); ++j) {
      const auto jv = unravel(j, s.periods);
      const std::vector<long> jl(jv.begin(), jv.end());
      const std::vector<long> shifted{jv[0] + s.periods[0], jv[1] - 2L * s.periods[1]};
      CHECK(z.at(xv, shifted) == z.at(xv, jl));
      // Z(x0 + M e_a, k) = e^{-i k_a} Z(x0, k), evaluated by the direct sum at a shifted point
      const auto k = z.k_value(j);
      for (int a = 0; a < 2; ++a) {
        std::vector<int> moved = xv;
        moved[a] += s.cells[a];
        const cplx lhs = oracle::classic_zak_direct(f, s.cells, s.periods, moved, k);
        CHECK(std::abs(lhs - unit_phase(-k[a]) * z.at(xv, jl)) < 1e-11);
      }
    }
  }
}

TEST_CASE("lattice transform is independent of jobs") {
  Rng rng(4);
  const LatticeShape s = lattice_shape({32, 16}, {4, 2});
  const auto f = random_samples(rng, s.grid_size());
  const LatticeZakGrid a = classic_zak(f, s, 1), b = classic_zak(f, s, 8);
  CHECK(a.values == b.values);
  CHECK(classic_zak_inverse(a, 1) == classic_zak_inverse(a, 8));
}
