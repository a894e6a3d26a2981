#pragma once

#include <vector>

#include "zakspace/zak.hpp"

namespace zakspace {

struct InvariantOperator {
  CMatrix matrix;
};

// Throws NotHermitian, or NotInvariant naming the witnessing g.
InvariantOperator check_invariance(const GroupAction& action, const CMatrix& h, double tol = 1e-10);
CMatrix permutation_matrix(const GroupAction& action, int g);

struct OperatorBlock {
  int sigma = 0;
  int copy = 0;     // 0 .. d_sigma - 1
  int offset = 0;   // first column in U
  int size = 0;
  CMatrix matrix;   // U_block^* H U_block
  RVector eigenvalues;
};

struct BlockDiagonalization {
  CMatrix unitary;                    // symmetry-adapted basis, columns grouped by block
  std::vector<OperatorBlock> blocks;  // ordered by (sigma, copy)
  double off_block_mass = 0.0;        // Frobenius mass of U^* H U outside the blocks
  double h_norm = 0.0;
};

// Columns: for each sigma, copy a, representative x0 and orthonormal basis
// vector p of range P_sigma^{(1,x0)}:
//   u(x) = sum_{g : rho_g^{-1} x0 = x} conj((sigma(g)^* p)_a), normalized.
BlockDiagonalization block_diagonalize(const WeilSpace& space, const InvariantOperator& op,
                                       const DualObject& dual, int jobs = 1);

// Largest spread of eigenvalues between repeated copies of one irrep block.
double block_repetition_residual(const BlockDiagonalization& bd);
// Sorted multiset distance between all block eigenvalues and those of H.
double spectrum_conservation_residual(const BlockDiagonalization& bd, const CMatrix& h);

// 1-d ring of N*M sites: H = V(x mod M) - t (nearest neighbours).
struct ChainModel {
  double t = 1.0;
  int cells = 1;   // M
  int periods = 1; // N
  std::vector<double> onsite;  // V, length M
};

void validate_chain(const ChainModel& model);
CMatrix chain_hamiltonian(const ChainModel& model);
// Bloch block at k: H_k[x0][y mod M] += -t e^{-i k floor(y/M)}, y = x0 +- 1.
CMatrix bloch_block(const ChainModel& model, double k);

struct BandStructure {
  int cells = 1;
  int periods = 1;
  std::vector<double> k_values;                 // 2 pi j / N
  std::vector<std::vector<double>> energies;    // [j][n], ascending

  std::vector<double> all_energies() const;     // sorted union
};

BandStructure band_structure(const ChainModel& model, int jobs = 1);

// Ring as a Z_N action by translation through M sites.
GroupAction chain_action(const ChainModel& model);

struct BlochField {
  ZakCoefficients coeffs;  // B_F^sigma(x0) = Z f(x0, sigma)

  // B^sigma(x) extended by the equivariance law.
  CMatrix at(int x, int sigma) const { return extended_from_representative(coeffs, x, sigma); }
  std::vector<int> nonzero_fields(double tol) const;
};

BlochField bloch_fields(const WeilSpace& space, const CVector& f, const DualObject& dual);
// max_x |f(x) - sum_sigma (d/|G|) tr(B_F^sigma(x0) sigma(g))|
double bloch_reconstruction_error(const BlochField& field, const CVector& f);

// max over test functions of || Z[H f] - blockdiag(Z f) || in the adapted basis:
// compares U^* H f against the block matrices applied to U^* f.
double block_intertwining_residual(const BlockDiagonalization& bd, const CMatrix& h,
                                   const std::vector<CVector>& tests);

}  // namespace zakspace
