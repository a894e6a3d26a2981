#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zakspace/group.hpp"
#include "zakspace/linalg.hpp"

namespace zakspace {

struct UnitaryIrrep {
  std::string label;
  int dim = 1;
  std::vector<CMatrix> matrices;  // sigma(g) per group element

  cplx character(int g) const { return matrices[g].trace(); }
};

struct DualObject {
  FiniteGroup group;
  std::vector<UnitaryIrrep> irreps;
  std::vector<double> plancherel_weight;  // d_sigma / |G|

  int size() const { return static_cast<int>(irreps.size()); }
  bool abelian() const;
  int index_of(const std::string& label) const;
};

// Throws InvariantViolation (homomorphism / unitarity) or NotIrreducible.
void validate_irrep(const FiniteGroup& group, const UnitaryIrrep& irrep);
// Validates every irrep, completeness (IncompleteDual) and inequivalence.
void validate_dual(const DualObject& dual);
DualObject make_dual(const FiniteGroup& group, std::vector<UnitaryIrrep> irreps);

bool same_group_table(const FiniteGroup& a, const FiniteGroup& b);

DualObject dual_abelian(const FiniteGroup& group);

// hint: "" (automatic), "cyclic:N", "dihedral:N", "product:A×B" (also "x"),
// "mackey:a,b,..." (normal abelian subgroup elements) or "regular".
DualObject irreps(const FiniteGroup& group, const std::string& catalog_hint = "",
                  std::uint64_t seed = 0);
DualObject irreps_catalog(const std::string& name);
DualObject irreps_mackey(const FiniteGroup& group, std::span<const int> normal_abelian,
                         std::uint64_t seed);
DualObject irreps_regular(const FiniteGroup& group, std::uint64_t seed);
// Group realized by a catalog name, with its canonical element order.
FiniteGroup catalog_group(const std::string& name);

// Dual with every irrep conjugated by u_sigma (same labels).
DualObject conjugate_dual(const DualObject& dual, const std::vector<CMatrix>& unitaries);

using FourierCoefficients = std::vector<CMatrix>;

// fhat(sigma) = sum_g f(g) sigma(g)^*
FourierCoefficients fourier(const CVector& f, const DualObject& dual);
// f(g) = sum_sigma (d_sigma/|G|) tr(fhat(sigma) sigma(g))
CVector inverse_fourier(const FourierCoefficients& coeffs, const DualObject& dual);

struct ReciprocalSpace {
  std::vector<int> members;      // indices into dual.irreps
  std::vector<int> mult1;        // per member
  std::vector<CMatrix> projector;  // per member
  // Projector for every irrep (zero matrix rank for non-members).
  std::vector<CMatrix> all_projectors;

  bool contains(int sigma) const;
};

// P = (1/|H|) sum_h sigma(h)
CMatrix subgroup_projector(const UnitaryIrrep& irrep, std::span<const int> subgroup);
ReciprocalSpace reciprocal_space(const DualObject& dual, std::span<const int> subgroup);

struct PoissonReport {
  cplx lhs;
  cplx rhs;
  double residual = 0.0;
};

PoissonReport poisson_abelian_check(const CVector& f, const FiniteGroup& group,
                                    std::span<const int> subgroup);
PoissonReport poisson_compact_check(const CVector& f, const DualObject& dual,
                                    std::span<const int> subgroup);

// Cosets gH in order of their smallest element.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& group, std::span<const int> subgroup);

struct QuotientFourierReport {
  double reconstruction_error = 0.0;
  double support_error = 0.0;  // max ||fhat(sigma)|| over sigma outside H^perp
  double residual() const { return std::max(reconstruction_error, support_error); }
};

// f given per element; throws NotCosetFunction unless f(gh) = f(g).
QuotientFourierReport quotient_fourier_check(const CVector& f, const DualObject& dual,
                                             std::span<const int> subgroup);
// f given per coset (left_cosets order).
QuotientFourierReport quotient_fourier_check_cosets(const CVector& f_on_cosets,
                                                    const DualObject& dual,
                                                    std::span<const int> subgroup);

double hs_norm2(const CMatrix& m);

}  // namespace zakspace
