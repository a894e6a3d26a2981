#include "oracles.hpp"
#include "support.hpp"
#include "zakspace/bloch.hpp"

using namespace zs_test;

namespace {

double sorted_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Right convolution by a Hermitian kernel on the regular action: commutes with
// the left translations.
CMatrix right_convolution(const FiniteGroup& G, Rng& rng) {
  const int n = G.order();
  CVector a = rng.complex_vector(n);
  for (int g = 0; g < n; ++g) a[G.inv(g)] = std::conj(a[g]);
  for (int g = 0; g < n; ++g)
    if (G.inv(g) == g) a[g] = a[g].real();
  CMatrix h = CMatrix::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) h(x, y) = a[G.mul(G.inv(x), y)];
  return h;
}

}  // namespace

TEST_CASE("chain validation") {
  CHECK_CODE(validate_chain({1.0, 2, 4, {0.0}}), ErrorCode::ShapeMismatch);
  CHECK_CODE(validate_chain({1.0, 0, 4, {}}), ErrorCode::ShapeMismatch);
  CHECK_CODE(validate_chain({1.0, 1, 0, {0.0}}), ErrorCode::ShapeMismatch);
}

TEST_CASE("single band against the closed form") {
  for (int n : {3, 6, 7, 16}) {
    const ChainModel m{0.7, 1, n, {0.3}};
    const BandStructure b = band_structure(m);
    std::vector<double> e;
    for (const auto& row : b.energies) e.push_back(row[0]);
    CHECK(sorted_distance(e, oracle::circulant_band(0.7, 0.3, n)) < 1e-12);
    CHECK(sorted_distance(b.all_energies(), oracle::ring_spectrum(0.7, {0.3}, n)) < 1e-9);
  }
}

TEST_CASE("band union reproduces the ring spectrum") {
  Rng rng(1);
  for (int cells : {2, 3, 4}) {
    std::vector<double> v;
    for (int i = 0; i < cells; ++i) v.push_back(rng.uniform());
    const ChainModel m{1.0, cells, 8, v};
    const BandStructure b = band_structure(m);
    CHECK(sorted_distance(b.all_energies(), oracle::ring_spectrum(1.0, v, 8)) < 1e-9);
    // time reversal E(k) = E(-k)
    for (int j = 0; j < 8; ++j) {
      const auto& a = b.energies[j];
      const auto& c = b.energies[(8 - j) % 8];
      for (int n = 0; n < cells; ++n) CHECK(std::abs(a[n] - c[n]) < 1e-12);
    }
    CHECK(b.energies == band_structure(m, 8).energies);
  }
}

TEST_CASE("dimer gap") {
  const ChainModel m{1.0, 2, 8, {0.5, -0.5}};
  const BandStructure b = band_structure(m);
  double lower = -1e9, upper = 1e9;
  for (const auto& row : b.energies) {
    lower = std::max(lower, row[0]);
    upper = std::min(upper, row[1]);
  }
  // N = 8 samples k = pi, where the gap is exactly 2 |Delta|
  CHECK(std::abs(upper - lower - 1.0) < 1e-12);
}

TEST_CASE("bloch block is Hermitian and M = 1 gives the dispersion") {
  const ChainModel m{1.3, 3, 5, {0.1, 0.2, -0.4}};
  for (double k : {0.0, 0.4, 2.0}) {
    const CMatrix hk = bloch_block(m, k);
    CHECK((hk - hk.adjoint()).norm() < 1e-14);
  }
  const ChainModel one{1.3, 1, 5, {0.2}};
  CHECK(std::abs(bloch_block(one, 0.9)(0, 0).real() - (0.2 - 2.6 * std::cos(0.9))) < 1e-14);
}

TEST_CASE("invariance checks") {
  const GroupAction a = bundled_action("c6_ring");
  const ChainModel m{1.0, 1, 6, {0.0}};
  check_invariance(a, chain_hamiltonian(m));
  CMatrix h = chain_hamiltonian(m);
  h(0, 0) = 0.3;
  CHECK_CODE(check_invariance(a, h), ErrorCode::NotInvariant);
  CMatrix nh = chain_hamiltonian(m);
  nh(0, 1) = 2.0;
  CHECK_CODE(check_invariance(a, nh), ErrorCode::NotHermitian);
  CHECK_CODE(check_invariance(a, CMatrix::Zero(5, 5)), ErrorCode::ShapeMismatch);
}

TEST_CASE("block diagonalization of translation-invariant chains") {
  const ChainModel m{1.0, 2, 6, {0.5, -0.5}};
  const WeilSpace s = WeilSpace::build(chain_action(m));
  const DualObject d = irreps(s.action.group());
  const CMatrix h = chain_hamiltonian(m);
  const BlockDiagonalization bd = block_diagonalize(s, check_invariance(s.action, h), d);
  CHECK((bd.unitary.adjoint() * bd.unitary - CMatrix::Identity(12, 12)).norm() < 1e-12);
  CHECK(bd.off_block_mass < 1e-12 * bd.h_norm);
  CHECK(spectrum_conservation_residual(bd, h) < 1e-10);
  CHECK(bd.blocks.size() == 6);
  for (const auto& b : bd.blocks) CHECK(b.size == 2);
}

TEST_CASE("non-abelian block structure") {
  Rng rng(2);
  for (const auto& name : {"dihedral:3", "dihedral:4", "symmetric:4"}) {
    CAPTURE(name);
    const DualObject d = irreps_catalog(name);
    const WeilSpace s = WeilSpace::build(translation_action(d.group));
    const CMatrix h = right_convolution(d.group, rng);
    const BlockDiagonalization bd = block_diagonalize(s, check_invariance(s.action, h), d);
    CHECK(bd.off_block_mass < 1e-10 * bd.h_norm);
    CHECK(block_repetition_residual(bd) < 1e-10);
    CHECK(spectrum_conservation_residual(bd, h) < 1e-10);
    // regular action: d_sigma copies of a d_sigma block
    int total = 0;
    for (const auto& b : bd.blocks) {
      CHECK(b.size == d.irreps[b.sigma].dim);
      total += b.size;
    }
    CHECK(total == d.group.order());
    std::vector<CVector> tests;
    for (int i = 0; i < 5; ++i) tests.push_back(rng.complex_vector(d.group.order()));
    CHECK(block_intertwining_residual(bd, h, tests) < 1e-10);
    const BlockDiagonalization par = block_diagonalize(s, check_invariance(s.action, h), d, 8);
    CHECK(par.unitary == bd.unitary);
  }
}

TEST_CASE("bloch fields reconstruct the function") {
  Rng rng(3);
  for (const auto& name : {"d4_square", "c4_weighted", "d3_flags"}) {
    const WeilSpace s = WeilSpace::build(bundled_action(name));
    const DualObject d = irreps(s.action.group(), bundled_dual_hint(name));
    const CVector f = rng.complex_vector(s.action.points());
    const BlochField b = bloch_fields(s, f, d);
    CHECK(bloch_reconstruction_error(b, f) < 1e-11 * std::max(1.0, max_abs(f)));
  }
  // an invariant function only has the trivial field
  const WeilSpace s = WeilSpace::build(bundled_action("c6_ring"));
  const DualObject d = irreps(s.action.group());
  const BlochField b = bloch_fields(s, CVector::Ones(6), d);
  const auto nz = b.nonzero_fields(1e-12);
  REQUIRE(nz.size() == 1);
  CHECK(std::abs(d.irreps[nz[0]].character(1) - 1.0) < 1e-12);
}
