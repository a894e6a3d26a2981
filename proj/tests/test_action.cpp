#include "oracles.hpp"
#include "support.hpp"

using namespace zs_test;

namespace {

double l1(const CVector& f) { return f.cwiseAbs().sum(); }

}  // namespace

TEST_CASE("action validation") {
  const FiniteGroup Z2 = cyclic_group(2);
  CHECK_CODE(GroupAction::make(Z2, {{0, 1}}, {1, 1}), ErrorCode::SizeMismatch);
  CHECK_CODE(GroupAction::make(Z2, {{0, 1}, {1, 2}}, {1, 1}), ErrorCode::OutOfRange);
  CHECK_CODE(GroupAction::make(Z2, {{0, 1}, {0, 0}}, {1, 1}), ErrorCode::NotHomomorphism);
  CHECK_CODE(GroupAction::make(Z2, {{1, 0}, {0, 1}}, {1, 1}), ErrorCode::NotHomomorphism);
  CHECK_CODE(GroupAction::make(Z2, {{0, 1}, {1, 0}}, {1, 0}), ErrorCode::NonpositiveWeight);
  CHECK_CODE(GroupAction::make(Z2, {{0, 1}, {1, 0}}, {1, 1, 1}), ErrorCode::SizeMismatch);
  // Z3 acting through a non-homomorphism
  CHECK_CODE(GroupAction::make(cyclic_group(3), {{0, 1, 2}, {1, 2, 0}, {1, 2, 0}}, {1, 1, 1}),
             ErrorCode::NotHomomorphism);
}

TEST_CASE("orbits match union-find") {
  Rng rng(11);
  for (const auto& name : catalog_names()) {
    const FiniteGroup G = catalog_group(name);
    for (int trial = 0; trial < 3; ++trial) {
      const GroupAction a = random_action(G, rng, 1 + trial);
      const OrbitDecomposition o = orbits(a);
      const auto ref = oracle::orbit_labels(a.perm());
      for (int x = 0; x < a.points(); ++x) CHECK(o.representatives[o.orbit_id[x]] == ref[x]);
      for (int x = 0; x < a.points(); ++x) {
        const int x0 = o.representatives[o.orbit_id[x]];
        CHECK(a.act(o.transport[x], x) == x0);
      }
      // orbit-stabilizer
      for (int k = 0; k < o.num_orbits(); ++k)
        CHECK(o.orbit_points[k].size() * o.stabilizers[k].size() == static_cast<std::size_t>(G.order()));
    }
  }
}

TEST_CASE("transporter and stabilizer") {
  const GroupAction a = bundled_action("d4_square");
  const std::vector<int> v0{0}, v2{2}, centre{8};
  const auto t = transporter(a, v0, v2);
  for (int g : t) CHECK(a.act(g, 0) == 2);
  CHECK(t.size() == stabilizer(a, 0).size());
  CHECK(stabilizer(a, 8).size() == 8);
  CHECK(transporter(a, v0, centre).empty());
  CHECK_CODE(transporter(a, std::vector<int>{}, v0), ErrorCode::EmptySet);
}

TEST_CASE("Weil and Mackey-Bruhat identities on random actions") {
  Rng rng(5);
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const FiniteGroup G = catalog_group(name);
    for (int trial = 0; trial < 4; ++trial) {
      const WeilSpace s = WeilSpace::build(random_action(G, rng, 1 + trial % 3));
      const auto ref = oracle::orbit_measures(s.action.perm(), s.action.weights());
      for (int o = 0; o < s.orbits.num_orbits(); ++o) CHECK(std::abs(ref[o] - s.orbits.orbit_measure[o]) < 1e-12);
      CHECK(cocycle_identity_residual(s.action, s.cocycle) < 1e-12);
      CHECK(q_equation_residual(s.action, s.cocycle) < 1e-12);
      for (int i = 0; i < 10; ++i) {
        const CVector f = rng.complex_vector(s.action.points());
        CHECK(verify_weil(s.action, s.cocycle, s.orbits, f).pass);
        CHECK(verify_mackey_bruhat(s.action, s.cocycle, s.orbits, f).pass);
        cplx lhs = 0.0;
        for (int x = 0; x < s.action.points(); ++x) lhs += f[x] * s.point_measure(x);
        const auto fp = std::vector<cplx>(f.data(), f.data() + f.size());
        CHECK(std::abs(lhs - oracle::weil_value(s.action.perm(), s.action.weights(), fp)) < 1e-12 * l1(f));
      }
    }
  }
}

TEST_CASE("q w is the representative weight") {
  Rng rng(9);
  const WeilSpace s = WeilSpace::build(random_action(dihedral_group(4), rng, 3));
  for (int x = 0; x < s.action.points(); ++x) {
    const int x0 = s.orbits.representatives[s.orbits.orbit_id[x]];
    CHECK(s.point_measure(x) == doctest::Approx(s.action.weight(x0)).epsilon(1e-14));
  }
}

TEST_CASE("unit weights give q = 1 and lambda = 1") {
  const WeilSpace s = WeilSpace::build(bundled_action("d3_triangle"));
  for (double q : s.cocycle.q) CHECK(q == 1.0);
  for (double l : s.cocycle.lambda) CHECK(l == 1.0);
}

TEST_CASE("bruhat function sums to one over each orbit") {
  const GroupAction a = bundled_action("d4_square");
  const RVector beta = bruhat_function(a);
  const OrbitDecomposition o = orbits(a);
  for (int x = 0; x < a.points(); ++x) {
    double s = 0.0;
    for (int g = 0; g < a.group().order(); ++g) s += beta[a.act_inverse(g, x)];
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(o.num_orbits() == 3);
}

TEST_CASE("fixed point carries half measure") {
  const WeilSpace s = WeilSpace::build(bundled_action("z2_fixed"));
  REQUIRE(s.orbits.num_orbits() == 2);
  CHECK(s.orbits.fd_measure[s.orbits.representative_index(0)] == doctest::Approx(1.0));
  CHECK(s.orbits.fd_measure[s.orbits.representative_index(2)] == doctest::Approx(0.5));
  CHECK(s.orbits.representative_index(1) == -1);
}

TEST_CASE("orbital mean is representative independent") {
  const GroupAction a = bundled_action("c4_weighted");
  const CVector f = Rng(3).complex_vector(a.points());
  const CVector m = orbital_mean(a, f);
  CHECK(m.size() == 2);
  CHECK_CODE(orbital_mean(a, CVector::Ones(3)), ErrorCode::SizeMismatch);
}

TEST_CASE("action on functions is a left action") {
  Rng rng(21);
  const GroupAction a = random_action(symmetric_group(3), rng, 2);
  const CVector f = rng.complex_vector(a.points());
  const FiniteGroup& G = a.group();
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      CHECK(max_abs(a.act_on_function(G.mul(g, h), f) - a.act_on_function(g, a.act_on_function(h, f))) == 0.0);
}
