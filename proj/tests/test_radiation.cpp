#include "oracles.hpp"
#include "support.hpp"
#include "zakspace/radiation.hpp"

using namespace zs_test;

namespace {

struct Model {
  FiniteIsometryAction fa;
  DualObject dual;
  ScatteringSetup setup;
  std::vector<Vec3> pts;
};

Model bundled_model() {
  const RadiationModel rm = bundled_radiation_model();
  Model m{to_finite_action(rm.spec, rm.seeds, {}, rm.seed_weights), {}, {}, {}};
  m.dual = irreps(m.fa.action.group());
  const OrbitDecomposition o = orbits(m.fa.action);
  const std::vector<double> rho{0.8, 1.4, 0.3};
  for (int x = 0; x < m.fa.action.points(); ++x) m.setup.density.push_back(rho[o.orbit_id[x]]);
  m.setup.omega = 1.7;
  for (const auto& p : m.fa.points) m.pts.emplace_back(p[0], p[1], p[2]);
  return m;
}

}  // namespace

TEST_CASE("radiation model layout") {
  const Model m = bundled_model();
  // two generic C4 orbits and an on-axis fixed point
  CHECK(m.fa.action.points() == 9);
  const OrbitDecomposition o = orbits(m.fa.action);
  CHECK(o.num_orbits() == 3);
  CHECK(o.orbit_id[0] == 0);
  CHECK(o.orbit_id[4] == 1);
  CHECK(o.orbit_id[8] == 2);
}

TEST_CASE("transverse projector and plane waves") {
  const Vec3 s = Vec3(1, 2, -2) / 3.0;
  const Eigen::Matrix3d P = transverse_projector(s);
  CHECK((P * P - P).norm() < 1e-15);
  CHECK((P * s).norm() < 1e-15);
  CHECK_CODE(transverse_projector(Vec3(1, 1, 0)), ErrorCode::InvalidArgument);
  CHECK_CODE(plane_wave(Vec3(0, 0, 1), CVec3(0, 0.5, 1), {}), ErrorCode::NotTransverse);
}

TEST_CASE("symmetry projection recovers the total transform") {
  Model m = bundled_model();
  Rng rng(1);
  for (int trial = 0; trial < 4; ++trial) {
    const Vec3 k = Vec3(rng.uniform(), rng.uniform(), rng.uniform());
    // complex polarization orthogonal to k
    const Vec3 a = k.unitOrthogonal();
    const Vec3 b = k.normalized().cross(a);
    const CVec3 n = a.cast<cplx>() * rng.complex_normal() + b.cast<cplx>() * rng.complex_normal();
    for (const auto& s0 : fibonacci_directions(12)) {
      m.setup.s0 = s0;
      const SymmetryProjection p = symmetry_projected_transform(m.fa, m.dual, k, n, m.setup);
      const double scale = std::max(1.0, p.expected.norm());
      CHECK(p.recovery_residual < 1e-10 * scale);
      CHECK(p.route_residual < 1e-10 * scale);
      const cplx ph = oracle::quadrature_fourier(m.pts, m.fa.action.weights(), m.setup.density,
                                                 m.setup.omega * s0 - k);
      CHECK((transverse_projector(s0).cast<cplx>() * n * ph - p.expected).norm() < 1e-10 * scale);
      // direct transform of the sampled plane wave
      const VectorField e = plane_wave(k, n, m.fa.points);
      const CVec3 r = radiation_transform(e, m.fa.points, m.fa.action.weights(), m.setup);
      CHECK((r - p.expected).norm() < 1e-10 * scale);
    }
  }
}

TEST_CASE("field action is consistent") {
  const Model m = bundled_model();
  const VectorField e = plane_wave(Vec3(0.3, 0.1, 0.5), CVec3(0, 0.5, -0.1), m.fa.points);
  const int order = m.fa.action.group().order();
  for (int g = 0; g < order; ++g) {
    const VectorField a = act_field(m.fa, g, e);
    const VectorField b = act_field(m.fa.elements[g], e, m.fa.points);
    for (std::size_t x = 0; x < a.values.size(); ++x) CHECK((a.values[x] - b.values[x]).norm() < 1e-12);
  }
  std::vector<RVector> open = m.fa.points;
  open.pop_back();
  open.pop_back();
  const VectorField partial = plane_wave(Vec3(0, 0, 1), CVec3(1, 0, 0), open);
  CHECK_CODE(act_field(m.fa.elements[1], partial, open), ErrorCode::SampleSetNotClosed);
}

TEST_CASE("non-invariant density is rejected") {
  Model m = bundled_model();
  m.setup.density[2] += 0.1;
  CHECK_CODE(symmetry_projected_transform(m.fa, m.dual, Vec3(0, 0, 1), CVec3(1, 0, 0), m.setup),
             ErrorCode::DensityNotInvariant);
}

TEST_CASE("fibonacci directions are unit vectors") {
  const auto d = fibonacci_directions(40);
  CHECK(d.size() == 40);
  Vec3 mean = Vec3::Zero();
  for (const auto& s : d) {
    CHECK(std::abs(s.norm() - 1.0) < 1e-14);
    mean += s;
  }
  CHECK(mean.norm() / 40.0 < 0.05);
}
