#pragma once

#include <vector>

#include "zakspace/action.hpp"
#include "zakspace/repr.hpp"

namespace zakspace {

// Z(x0, sigma) for every representative x0 in F and irrep sigma, dense: blocks
// outside the reciprocal space of G_{x0} are stored (and must be zero).
struct ZakCoefficients {
  WeilSpace space;
  DualObject dual;
  std::vector<CMatrix> values;  // values[orbit * dual.size() + sigma]

  const CMatrix& at(int orbit, int sigma) const {
    return values[static_cast<std::size_t>(orbit) * dual.size() + sigma];
  }
  CMatrix& at(int orbit, int sigma) {
    return values[static_cast<std::size_t>(orbit) * dual.size() + sigma];
  }
};

// Throws DualGroupMismatch unless the dual was built for the acting group.
void check_dual_matches(const GroupAction& action, const DualObject& dual);

// Z(x0, sigma) = sum_g f(rho_g^{-1} x0) sigma(g)^*
ZakCoefficients zak(const WeilSpace& space, const CVector& f, const DualObject& dual, int jobs = 1);
// Defining sum evaluated at an arbitrary point x.
CMatrix zak_direct(const GroupAction& action, const CVector& f, const UnitaryIrrep& irrep, int x);

// Z^X(x, sigma) per irrep, evaluated both directly and through the
// equivariance law from the representative; throws EquivarianceViolation
// if the two disagree.
std::vector<CMatrix> extended_zak(const ZakCoefficients& coeffs, const CVector& f, int x,
                                  double tol = kExactTol);
// Z^X(rho_g^{-1} x0, sigma) = Z(x0, sigma) sigma(g) with g = transport[x].
CMatrix extended_from_representative(const ZakCoefficients& coeffs, int x, int sigma);

// Residuals of the two support invariants (absolute Frobenius norms):
// blocks off (G_{x0})^perp, and ||Z P - Z||.
struct SupportResidual {
  double vanishing = 0.0;
  double projection = 0.0;
};
SupportResidual support_residual(const ZakCoefficients& coeffs);

// Throws InvariantViolation when the support invariants fail.
CVector zak_inverse(const ZakCoefficients& coeffs, double tol = kExactTol);

// Z^tr(x0, sigma) = tr Z(x0, sigma); layout as values.
std::vector<cplx> character_zak(const ZakCoefficients& coeffs);
// max_x |f(x) - sum_sigma (d/|G|) Z^{tr,X}(x, sigma)|
double character_reconstruction_error(const WeilSpace& space, const CVector& f,
                                      const DualObject& dual);

// delta^{(x0,sigma)}(phi) = sum_g phi(rho_g^{-1} x0) sigma(g); NotRepresentative
// unless x0 in F.
CMatrix zak_measure_eval(const WeilSpace& space, const DualObject& dual, int x0, int sigma,
                         const CVector& phi);
// | sum mu_F (d/|G|) tr(Zf delta(phi)) - sum_x f phi q w |
double weak_inversion_residual(const WeilSpace& space, const DualObject& dual, const CVector& f,
                               const CVector& phi);
// max || delta(rho_g^{-1} phi) - delta(phi) sigma(g) ||
double zak_measure_eigen_residual(const WeilSpace& space, const DualObject& dual,
                                  const CVector& phi);

struct UnitarityReport {
  double lhs = 0.0;  // sum |f|^2 q w
  double rhs = 0.0;  // sum mu_F sum_sigma (d/|G|) ||Z||_HS^2
  double residual = 0.0;
};
UnitarityReport verify_unitarity(const ZakCoefficients& coeffs, const CVector& f);

// max || Z[rho_g f](x0, sigma) - sigma(g) Z f(x0, sigma) || over all g, x0, sigma.
double intertwining_residual(const WeilSpace& space, const CVector& f, const DualObject& dual);

// Heisenberg operator xi_{(g,chi)} f = rho_g f * conj(chi(g)) (abelian duals).
CVector heisenberg_apply(const GroupAction& action, const DualObject& dual, int g, int chi,
                         const CVector& f);

}  // namespace zakspace
