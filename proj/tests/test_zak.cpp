#include "oracles.hpp"
#include "support.hpp"

using namespace zs_test;

namespace {

struct Case {
  WeilSpace space;
  DualObject dual;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  for (const auto& name : bundled_action_names()) {
    WeilSpace s = WeilSpace::build(bundled_action(name));
    DualObject d = irreps(s.action.group(), bundled_dual_hint(name), 3);
    out.push_back({std::move(s), std::move(d)});
  }
  Rng rng(17);
  for (const auto& name : {"dihedral:4", "symmetric:4", "product:cyclic:2xdihedral:3"}) {
    const FiniteGroup G = catalog_group(name);
    out.push_back({WeilSpace::build(random_action(G, rng, 3)), irreps_catalog(name)});
  }
  return out;
}

double frob(const CMatrix& m) { return m.norm(); }

}  // namespace

TEST_CASE("zak coefficients match the defining sum") {
  Rng rng(1);
  for (const auto& c : cases()) {
    const CVector f = rng.complex_vector(c.space.action.points());
    const ZakCoefficients z = zak(c.space, f, c.dual);
    const auto fp = std::vector<cplx>(f.data(), f.data() + f.size());
    for (int o = 0; o < c.space.orbits.num_orbits(); ++o)
      for (int s = 0; s < c.dual.size(); ++s) {
        const auto ref = oracle::zak_sum(c.space.action.perm(), c.dual.group.table(), c.dual.irreps[s].matrices, fp,
                                         c.space.orbits.representatives[o]);
        CHECK(frob(z.at(o, s) - ref) < 1e-12 * std::max(1.0, frob(ref)));
      }
  }
}

TEST_CASE("inversion and unitarity") {
  Rng rng(2);
  for (const auto& c : cases()) {
    for (int i = 0; i < 10; ++i) {
      const CVector f = rng.complex_vector(c.space.action.points());
      const ZakCoefficients z = zak(c.space, f, c.dual);
      CHECK(max_abs(zak_inverse(z) - f) < 1e-11 * std::max(1.0, max_abs(f)));
      const UnitarityReport u = verify_unitarity(z, f);
      CHECK(std::abs(u.lhs - u.rhs) < 1e-10 * u.lhs);
      CHECK(character_reconstruction_error(c.space, f, c.dual) < 1e-11 * std::max(1.0, max_abs(f)));
    }
  }
}

TEST_CASE("intertwining, equivariance and support") {
  Rng rng(3);
  for (const auto& c : cases()) {
    const CVector f = rng.complex_vector(c.space.action.points());
    CHECK(intertwining_residual(c.space, f, c.dual) < 1e-11 * std::max(1.0, f.norm()));
    const ZakCoefficients z = zak(c.space, f, c.dual);
    for (int x = 0; x < c.space.action.points(); ++x) {
      const auto ext = extended_zak(z, f, x);
      for (int s = 0; s < c.dual.size(); ++s) {
        const CMatrix direct = zak_direct(c.space.action, f, c.dual.irreps[s], x);
        CHECK(frob(ext[s] - direct) < 1e-11 * std::max(1.0, frob(direct)));
      }
    }
    const SupportResidual sr = support_residual(z);
    CHECK(sr.vanishing < 1e-11);
    CHECK(sr.projection < 1e-11);
  }
}

TEST_CASE("zak with a rotated irrep basis") {
  Rng rng(4);
  const WeilSpace s = WeilSpace::build(bundled_action("d4_square"));
  const DualObject d = irreps_catalog("dihedral:4");
  std::vector<CMatrix> us;
  for (const auto& irr : d.irreps) us.push_back(rng.unitary(irr.dim));
  const DualObject c = conjugate_dual(d, us);
  const CVector f = rng.complex_vector(s.action.points());
  const ZakCoefficients a = zak(s, f, d), b = zak(s, f, c);
  for (int o = 0; o < s.orbits.num_orbits(); ++o)
    for (int k = 0; k < d.size(); ++k) CHECK(frob(b.at(o, k) - us[k] * a.at(o, k) * us[k].adjoint()) < 1e-12);
  CHECK(max_abs(zak_inverse(b) - f) < 1e-11 * max_abs(f));
}

TEST_CASE("zak measures: weak inversion and eigen law") {
  Rng rng(5);
  for (const auto& c : cases()) {
    const CVector f = rng.complex_vector(c.space.action.points());
    const CVector phi = rng.complex_vector(c.space.action.points());
    CHECK(weak_inversion_residual(c.space, c.dual, f, phi) < 1e-11 * std::max(1.0, f.norm() * phi.norm()));
    CHECK(zak_measure_eigen_residual(c.space, c.dual, phi) < 1e-11 * std::max(1.0, phi.norm()));
  }
  const WeilSpace s = WeilSpace::build(bundled_action("z2_fixed"));
  const DualObject d = irreps(s.action.group());
  CHECK_CODE(zak_measure_eval(s, d, 1, 0, CVector::Ones(3)), ErrorCode::NotRepresentative);
}

TEST_CASE("Heisenberg covariance for abelian duals") {
  Rng rng(6);
  for (const auto& name : {"c6_ring", "z4_cycle", "c4_weighted", "z2_fixed"}) {
    const WeilSpace s = WeilSpace::build(bundled_action(name));
    const DualObject d = irreps(s.action.group());
    REQUIRE(d.abelian());
    const CVector f = rng.complex_vector(s.action.points());
    const ZakCoefficients z = zak(s, f, d);
    for (int g = 0; g < d.group.order(); ++g)
      for (int chi = 0; chi < d.size(); ++chi) {
        const ZakCoefficients zx = zak(s, heisenberg_apply(s.action, d, g, chi, f), d);
        for (int o = 0; o < s.orbits.num_orbits(); ++o)
          for (int t = 0; t < d.size(); ++t) {
            const cplx expect =
                std::conj(d.irreps[chi].matrices[g](0, 0)) * d.irreps[t].matrices[g](0, 0) * z.at(o, t)(0, 0);
            CHECK(std::abs(zx.at(o, t)(0, 0) - expect) < 1e-12 * std::max(1.0, f.norm()));
          }
      }
  }
}

TEST_CASE("tampered coefficients violate the support invariant") {
  const WeilSpace s = WeilSpace::build(bundled_action("z2_fixed"));
  const DualObject d = irreps(s.action.group());
  ZakCoefficients z = zak(s, CVector::Ones(3), d);
  // fixed point c: the sign character is outside the annihilator of G_c = Z2
  const int o = s.orbits.orbit_id[2];
  const int sign = d.irreps[0].matrices[1](0, 0).real() > 0 ? 1 : 0;
  CHECK(std::abs(z.at(o, sign)(0, 0)) < 1e-15);
  z.at(o, sign)(0, 0) = 0.25;
  CHECK(support_residual(z).vanishing > 0.2);
  CHECK_CODE(zak_inverse(z), ErrorCode::InvariantViolation);
}

TEST_CASE("dual of another group is rejected") {
  const WeilSpace s = WeilSpace::build(bundled_action("d3_triangle"));
  CHECK_CODE(zak(s, CVector::Ones(3), irreps_catalog("cyclic:6")), ErrorCode::DualGroupMismatch);
  CHECK_CODE(zak(s, CVector::Ones(4), irreps_catalog("symmetric:3")), ErrorCode::SizeMismatch);
}

TEST_CASE("jobs do not change the coefficients") {
  const WeilSpace s = WeilSpace::build(bundled_action("d4_square"));
  const DualObject d = irreps_catalog("dihedral:4");
  const CVector f = Rng(7).complex_vector(s.action.points());
  const ZakCoefficients a = zak(s, f, d, 1), b = zak(s, f, d, 8);
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK((a.values[i] - b.values[i]).norm() == 0.0);
}
