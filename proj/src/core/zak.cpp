#include "zakspace/zak.hpp"

#include <algorithm>
#include <cmath>

#include "zakspace/error.hpp"
#include "zakspace/parallel.hpp"

namespace zakspace {

namespace {

double norm2(const CVector& f) { return f.norm(); }

void check_size(const GroupAction& action, const CVector& f) {
  if (f.size() != action.points())
    fail(ErrorCode::SizeMismatch, "function has " + std::to_string(f.size()) +
                                      " values, action has " + std::to_string(action.points()) +
                                      " points");
}

}  // namespace

void check_dual_matches(const GroupAction& action, const DualObject& dual) {
  if (!same_group_table(action.group(), dual.group))
    fail(ErrorCode::DualGroupMismatch, "dual was built for a different group table");
}

CMatrix zak_direct(const GroupAction& action, const CVector& f, const UnitaryIrrep& irrep, int x) {
  CMatrix z = CMatrix::Zero(irrep.dim, irrep.dim);
  for (int g = 0; g < action.group().order(); ++g)
    z += f[action.act_inverse(g, x)] * irrep.matrices[g].adjoint();
  return z;
}

ZakCoefficients zak(const WeilSpace& space, const CVector& f, const DualObject& dual, int jobs) {
  check_dual_matches(space.action, dual);
  check_size(space.action, f);
  ZakCoefficients c;
  c.space = space;
  c.dual = dual;
  const int no = space.orbits.num_orbits();
  const int ns = dual.size();
  c.values.resize(static_cast<std::size_t>(no) * ns);
  parallel_for(c.values.size(), jobs, [&](std::size_t i) {
    const int o = static_cast<int>(i) / ns;
    const int s = static_cast<int>(i) % ns;
    c.values[i] = zak_direct(space.action, f, dual.irreps[s], space.orbits.representatives[o]);
  });
  return c;
}

CMatrix extended_from_representative(const ZakCoefficients& c, int x, int sigma) {
  const int o = c.space.orbits.orbit_id[x];
  const int g = c.space.orbits.transport[x];
  return c.at(o, sigma) * c.dual.irreps[sigma].matrices[g];
}

std::vector<CMatrix> extended_zak(const ZakCoefficients& c, const CVector& f, int x, double tol) {
  if (x < 0 || x >= c.space.action.points()) fail(ErrorCode::OutOfRange, "point out of range");
  check_size(c.space.action, f);
  std::vector<CMatrix> out;
  const double scale = std::max(1.0, norm2(f)) * c.space.action.group().order();
  for (int s = 0; s < c.dual.size(); ++s) {
    CMatrix direct = zak_direct(c.space.action, f, c.dual.irreps[s], x);
    const CMatrix law = extended_from_representative(c, x, s);
    if ((direct - law).norm() > tol * scale)
      fail(ErrorCode::EquivarianceViolation,
           "extended Zak at point " + std::to_string(x) + " disagrees with the equivariance law");
    out.push_back(std::move(direct));
  }
  return out;
}

SupportResidual support_residual(const ZakCoefficients& c) {
  SupportResidual r;
  const auto& d = c.space.orbits;
  for (int o = 0; o < d.num_orbits(); ++o) {
    const ReciprocalSpace rs = reciprocal_space(c.dual, d.stabilizers[o]);
    for (int s = 0; s < c.dual.size(); ++s) {
      const CMatrix& z = c.at(o, s);
      if (!rs.contains(s)) r.vanishing = std::max(r.vanishing, z.norm());
      r.projection = std::max(r.projection, (z * rs.all_projectors[s] - z).norm());
    }
  }
  return r;
}

CVector zak_inverse(const ZakCoefficients& c, double tol) {
  const auto& d = c.space.orbits;
  const SupportResidual sr = support_residual(c);
  double scale = 1e-300;
  for (const auto& z : c.values) scale = std::max(scale, z.norm());
  if (sr.vanishing > tol * scale || sr.projection > tol * scale)
    fail(ErrorCode::InvariantViolation, "Zak coefficients violate the stabilizer support");
  const int m = c.space.action.points();
  CVector f = CVector::Zero(m);
  for (int x = 0; x < m; ++x) {
    const int o = d.orbit_id[x];
    const int g = d.transport[x];
    cplx v = 0.0;
    for (int s = 0; s < c.dual.size(); ++s)
      v += c.dual.plancherel_weight[s] * (c.at(o, s) * c.dual.irreps[s].matrices[g]).trace();
    f[x] = v;
  }
  return f;
}

std::vector<cplx> character_zak(const ZakCoefficients& c) {
  std::vector<cplx> out;
  out.reserve(c.values.size());
  for (const auto& z : c.values) out.push_back(z.trace());
  return out;
}

double character_reconstruction_error(const WeilSpace& space, const CVector& f,
                                      const DualObject& dual) {
  check_dual_matches(space.action, dual);
  check_size(space.action, f);
  double err = 0.0;
  for (int x = 0; x < space.action.points(); ++x) {
    cplx v = 0.0;
    for (int s = 0; s < dual.size(); ++s)
      v += dual.plancherel_weight[s] * zak_direct(space.action, f, dual.irreps[s], x).trace();
    err = std::max(err, std::abs(v - f[x]));
  }
  return err;
}

CMatrix zak_measure_eval(const WeilSpace& space, const DualObject& dual, int x0, int sigma,
                         const CVector& phi) {
  check_dual_matches(space.action, dual);
  check_size(space.action, phi);
  if (space.orbits.representative_index(x0) < 0)
    fail(ErrorCode::NotRepresentative, "point " + std::to_string(x0) + " is not in the fundamental domain");
  if (sigma < 0 || sigma >= dual.size()) fail(ErrorCode::OutOfRange, "irrep index out of range");
  const auto& r = dual.irreps[sigma];
  CMatrix m = CMatrix::Zero(r.dim, r.dim);
  for (int g = 0; g < space.action.group().order(); ++g)
    m += phi[space.action.act_inverse(g, x0)] * r.matrices[g];
  return m;
}

double weak_inversion_residual(const WeilSpace& space, const DualObject& dual, const CVector& f,
                               const CVector& phi) {
  const ZakCoefficients zf = zak(space, f, dual);
  const auto& d = space.orbits;
  cplx lhs = 0.0;
  for (int o = 0; o < d.num_orbits(); ++o)
    for (int s = 0; s < dual.size(); ++s) {
      const CMatrix delta = zak_measure_eval(space, dual, d.representatives[o], s, phi);
      lhs += d.fd_measure[o] * dual.plancherel_weight[s] * (zf.at(o, s) * delta).trace();
    }
  cplx rhs = 0.0;
  for (int x = 0; x < space.action.points(); ++x) rhs += f[x] * phi[x] * space.point_measure(x);
  return std::abs(lhs - rhs);
}

double zak_measure_eigen_residual(const WeilSpace& space, const DualObject& dual,
                                  const CVector& phi) {
  double r = 0.0;
  const auto& d = space.orbits;
  const FiniteGroup& G = space.action.group();
  for (int g = 0; g < G.order(); ++g) {
    // (rho_g^{-1} phi)(x) = phi(rho_g x)
    const CVector moved = space.action.act_on_function(G.inv(g), phi);
    for (int o = 0; o < d.num_orbits(); ++o)
      for (int s = 0; s < dual.size(); ++s) {
        const CMatrix a = zak_measure_eval(space, dual, d.representatives[o], s, moved);
        const CMatrix b = zak_measure_eval(space, dual, d.representatives[o], s, phi) *
                          dual.irreps[s].matrices[g];
        r = std::max(r, (a - b).norm());
      }
  }
  return r;
}

UnitarityReport verify_unitarity(const ZakCoefficients& c, const CVector& f) {
  check_size(c.space.action, f);
  UnitarityReport u;
  for (int x = 0; x < c.space.action.points(); ++x) u.lhs += std::norm(f[x]) * c.space.point_measure(x);
  const auto& d = c.space.orbits;
  for (int o = 0; o < d.num_orbits(); ++o)
    for (int s = 0; s < c.dual.size(); ++s)
      u.rhs += d.fd_measure[o] * c.dual.plancherel_weight[s] * hs_norm2(c.at(o, s));
  u.residual = std::abs(u.lhs - u.rhs);
  return u;
}

double intertwining_residual(const WeilSpace& space, const CVector& f, const DualObject& dual) {
  const ZakCoefficients zf = zak(space, f, dual);
  double r = 0.0;
  for (int g = 0; g < space.action.group().order(); ++g) {
    const ZakCoefficients zg = zak(space, space.action.act_on_function(g, f), dual);
    for (int o = 0; o < space.orbits.num_orbits(); ++o)
      for (int s = 0; s < dual.size(); ++s)
        r = std::max(r, (zg.at(o, s) - dual.irreps[s].matrices[g] * zf.at(o, s)).norm());
  }
  return r;
}

CVector heisenberg_apply(const GroupAction& action, const DualObject& dual, int g, int chi,
                         const CVector& f) {
  check_dual_matches(action, dual);
  if (dual.irreps[chi].dim != 1) fail(ErrorCode::NotAbelian, "Heisenberg operators need characters");
  return action.act_on_function(g, f) * std::conj(dual.irreps[chi].matrices[g](0, 0));
}

}  // namespace zakspace
