#include "zakspace/bloch.hpp"

#include <algorithm>
#include <cmath>

#include "zakspace/error.hpp"
#include "zakspace/parallel.hpp"

namespace zakspace {

namespace {

RVector hermitian_eigenvalues(const CMatrix& m) {
  if (m.rows() == 0) return RVector();
  const CMatrix h = (m + m.adjoint()) * 0.5;
  return Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

std::vector<double> sorted(const RVector& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end());
  return out;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

CMatrix permutation_matrix(const GroupAction& action, int g) {
  const int m = action.points();
  CMatrix p = CMatrix::Zero(m, m);
  for (int y = 0; y < m; ++y) p(action.act(g, y), y) = 1.0;
  return p;
}

InvariantOperator check_invariance(const GroupAction& action, const CMatrix& h, double tol) {
  const int m = action.points();
  if (h.rows() != m || h.cols() != m)
    fail(ErrorCode::ShapeMismatch, "operator must be " + std::to_string(m) + "x" + std::to_string(m));
  const double scale = std::max(h.norm(), 1e-300);
  if ((h - h.adjoint()).norm() > tol * scale) fail(ErrorCode::NotHermitian, "operator is not Hermitian");
  for (int g = 0; g < action.group().order(); ++g) {
    const CMatrix p = permutation_matrix(action, g);
    if ((h * p - p * h).norm() > tol * scale)
      fail(ErrorCode::NotInvariant, "operator does not commute with the action of element " +
                                        std::to_string(g));
  }
  return InvariantOperator{h};
}

BlockDiagonalization block_diagonalize(const WeilSpace& space, const InvariantOperator& op,
                                       const DualObject& dual, int jobs) {
  check_dual_matches(space.action, dual);
  const GroupAction& action = space.action;
  const auto& d = space.orbits;
  const int m = action.points();
  if (op.matrix.rows() != m) fail(ErrorCode::ShapeMismatch, "operator not sized to the action");

  // Orthonormal bases of range P_sigma^{(1,x0)} per (orbit, sigma).
  std::vector<std::vector<CMatrix>> pbasis(d.num_orbits(), std::vector<CMatrix>(dual.size()));
  for (int o = 0; o < d.num_orbits(); ++o) {
    const ReciprocalSpace rs = reciprocal_space(dual, d.stabilizers[o]);
    for (int s = 0; s < dual.size(); ++s) {
      const CMatrix& P = rs.all_projectors[s];
      Eigen::SelfAdjointEigenSolver<CMatrix> es((P + P.adjoint()) * 0.5);
      std::vector<int> keep;
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()[i] > 0.5) keep.push_back(static_cast<int>(i));
      CMatrix b(P.rows(), static_cast<Eigen::Index>(keep.size()));
      for (std::size_t j = 0; j < keep.size(); ++j) b.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
      pbasis[o][s] = b;
    }
  }

  BlockDiagonalization bd;
  bd.unitary = CMatrix::Zero(m, m);
  int col = 0;
  for (int s = 0; s < dual.size(); ++s) {
    const auto& r = dual.irreps[s];
    int size = 0;
    for (int o = 0; o < d.num_orbits(); ++o) size += static_cast<int>(pbasis[o][s].cols());
    for (int a = 0; a < r.dim; ++a) {
      OperatorBlock blk;
      blk.sigma = s;
      blk.copy = a;
      blk.offset = col;
      blk.size = size;
      for (int o = 0; o < d.num_orbits(); ++o) {
        const int x0 = d.representatives[o];
        for (Eigen::Index p = 0; p < pbasis[o][s].cols(); ++p) {
          CVector u = CVector::Zero(m);
          for (int g = 0; g < action.group().order(); ++g) {
            const CVector w = r.matrices[g].adjoint() * pbasis[o][s].col(p);
            u[action.act_inverse(g, x0)] += std::conj(w[a]);
          }
          const double n = u.norm();
          if (n < 1e-12) fail(ErrorCode::Internal, "degenerate symmetry-adapted vector");
          if (col >= m) fail(ErrorCode::Internal, "symmetry-adapted basis overfull");
          bd.unitary.col(col++) = u / n;
        }
      }
      bd.blocks.push_back(std::move(blk));
    }
  }
  if (col != m) fail(ErrorCode::Internal, "symmetry-adapted basis is not square");

  const CMatrix t = bd.unitary.adjoint() * op.matrix * bd.unitary;
  bd.h_norm = op.matrix.norm();
  CMatrix outside = t;
  for (const auto& blk : bd.blocks)
    outside.block(blk.offset, blk.offset, blk.size, blk.size).setZero();
  bd.off_block_mass = outside.norm();
  parallel_for(bd.blocks.size(), jobs, [&](std::size_t i) {
    auto& blk = bd.blocks[i];
    blk.matrix = t.block(blk.offset, blk.offset, blk.size, blk.size);
    blk.eigenvalues = hermitian_eigenvalues(blk.matrix);
  });
  return bd;
}

double block_repetition_residual(const BlockDiagonalization& bd) {
  double r = 0.0;
  for (const auto& a : bd.blocks)
    for (const auto& b : bd.blocks)
      if (a.sigma == b.sigma && a.copy == 0 && b.copy > 0) {
        if (a.size != b.size) return INFINITY;
        for (Eigen::Index i = 0; i < a.eigenvalues.size(); ++i)
          r = std::max(r, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
      }
  return r;
}

double spectrum_conservation_residual(const BlockDiagonalization& bd, const CMatrix& h) {
  std::vector<double> blocks;
  for (const auto& b : bd.blocks)
    blocks.insert(blocks.end(), b.eigenvalues.data(), b.eigenvalues.data() + b.eigenvalues.size());
  std::sort(blocks.begin(), blocks.end());
  const std::vector<double> full = sorted(hermitian_eigenvalues(h));
  if (full.size() != blocks.size()) return INFINITY;
  double r = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i) r = std::max(r, std::abs(full[i] - blocks[i]));
  return r;
}

void validate_chain(const ChainModel& m) {
  if (m.cells <= 0 || m.periods <= 0) fail(ErrorCode::ShapeMismatch, "M and N must be positive");
  if (static_cast<int>(m.onsite.size()) != m.cells)
    fail(ErrorCode::ShapeMismatch, "onsite potential must have M = " + std::to_string(m.cells) + " entries");
  if (!std::isfinite(m.t)) fail(ErrorCode::InvalidArgument, "hopping must be finite");
}

CMatrix chain_hamiltonian(const ChainModel& m) {
  validate_chain(m);
  const int L = m.cells * m.periods;
  CMatrix h = CMatrix::Zero(L, L);
  for (int x = 0; x < L; ++x) {
    h(x, x) += m.onsite[x % m.cells];
    h(x, (x + 1) % L) += -m.t;
    h(x, (x + L - 1) % L) += -m.t;
  }
  return h;
}

CMatrix bloch_block(const ChainModel& m, double k) {
  validate_chain(m);
  const int M = m.cells;
  CMatrix hk = CMatrix::Zero(M, M);
  for (int x0 = 0; x0 < M; ++x0) {
    hk(x0, x0) += m.onsite[x0];
    for (int step : {1, -1}) {
      const long y = x0 + step;
      const long s = floor_div(y, M);
      const long y0 = y - s * M;
      hk(x0, y0) += -m.t * unit_phase(-k * static_cast<double>(s));
    }
  }
  return hk;
}

std::vector<double> BandStructure::all_energies() const {
  std::vector<double> out;
  for (const auto& e : energies) out.insert(out.end(), e.begin(), e.end());
  std::sort(out.begin(), out.end());
  return out;
}

BandStructure band_structure(const ChainModel& model, int jobs) {
  validate_chain(model);
  BandStructure b;
  b.cells = model.cells;
  b.periods = model.periods;
  b.k_values.resize(model.periods);
  b.energies.resize(model.periods);
  parallel_for(static_cast<std::size_t>(model.periods), jobs, [&](std::size_t j) {
    const double k = kTwoPi * static_cast<double>(j) / model.periods;
    b.k_values[j] = k;
    b.energies[j] = sorted(hermitian_eigenvalues(bloch_block(model, k)));
  });
  return b;
}

GroupAction chain_action(const ChainModel& model) {
  validate_chain(model);
  const int L = model.cells * model.periods;
  const int n = model.periods;
  std::vector<std::vector<int>> perm(n, std::vector<int>(L));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < L; ++x) perm[g][x] = (x + g * model.cells) % L;
  return GroupAction::make(cyclic_group(n), std::move(perm), std::vector<double>(L, 1.0));
}

std::vector<int> BlochField::nonzero_fields(double tol) const {
  std::vector<int> out;
  for (int s = 0; s < coeffs.dual.size(); ++s) {
    double n = 0.0;
    for (int o = 0; o < coeffs.space.orbits.num_orbits(); ++o) n = std::max(n, coeffs.at(o, s).norm());
    if (n > tol) out.push_back(s);
  }
  return out;
}

BlochField bloch_fields(const WeilSpace& space, const CVector& f, const DualObject& dual) {
  return BlochField{zak(space, f, dual)};
}

double bloch_reconstruction_error(const BlochField& field, const CVector& f) {
  const auto& c = field.coeffs;
  double err = 0.0;
  for (int x = 0; x < c.space.action.points(); ++x) {
    cplx v = 0.0;
    for (int s = 0; s < c.dual.size(); ++s) v += c.dual.plancherel_weight[s] * field.at(x, s).trace();
    err = std::max(err, std::abs(v - f[x]));
  }
  return err;
}

double block_intertwining_residual(const BlockDiagonalization& bd, const CMatrix& h,
                                   const std::vector<CVector>& tests) {
  const Eigen::Index m = bd.unitary.rows();
  CMatrix bdiag = CMatrix::Zero(m, m);
  for (const auto& blk : bd.blocks) bdiag.block(blk.offset, blk.offset, blk.size, blk.size) = blk.matrix;
  double r = 0.0;
  for (const auto& f : tests) {
    const CVector lhs = bd.unitary.adjoint() * (h * f);
    const CVector rhs = bdiag * (bd.unitary.adjoint() * f);
    r = std::max(r, (lhs - rhs).norm() / std::max(f.norm(), 1e-300));
  }
  return r;
}

}  // namespace zakspace
