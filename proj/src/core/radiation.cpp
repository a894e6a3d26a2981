#include "zakspace/radiation.hpp"

#include <cmath>

#include "zakspace/error.hpp"
#include "zakspace/zak.hpp"

namespace zakspace {

namespace {

Vec3 to3(const RVector& x) {
  if (x.size() != 3) fail(ErrorCode::DimensionMismatch, "radiation models are 3-d");
  return Vec3(x[0], x[1], x[2]);
}

void check_field(const VectorField& e, std::size_t points) {
  if (e.values.size() != points) fail(ErrorCode::ShapeMismatch, "field is not sized to the samples");
}

}  // namespace

Eigen::Matrix3d transverse_projector(const Vec3& s) {
  if (std::abs(s.norm() - 1.0) > 1e-12) fail(ErrorCode::InvalidArgument, "outgoing direction is not a unit vector");
  return Eigen::Matrix3d::Identity() - s * s.transpose();
}

VectorField plane_wave(const Vec3& k, const CVec3& n, const std::vector<RVector>& points) {
  const cplx nk = n[0] * k[0] + n[1] * k[1] + n[2] * k[2];
  if (std::abs(nk) > 1e-10) fail(ErrorCode::NotTransverse, "polarization is not transverse to k");
  VectorField e;
  for (const auto& p : points) e.values.push_back(n * unit_phase(k.dot(to3(p))));
  return e;
}

VectorField act_field(const IsometryElement& g, const VectorField& e, const std::vector<RVector>& points,
                      double tol) {
  check_field(e, points.size());
  const IsometryElement gi = inverse(g);
  const Eigen::Matrix3d Q = g.Q;
  VectorField out;
  out.values.resize(points.size());
  for (std::size_t x = 0; x < points.size(); ++x) {
    const RVector y = act(gi, points[x]);
    int hit = -1;
    for (std::size_t j = 0; j < points.size() && hit < 0; ++j)
      if ((points[j] - y).norm() < tol) hit = static_cast<int>(j);
    if (hit < 0) fail(ErrorCode::SampleSetNotClosed, "sample set is not closed under the isometry");
    out.values[x] = Q * e.values[hit];
  }
  return out;
}

VectorField act_field(const FiniteIsometryAction& model, int g, const VectorField& e) {
  check_field(e, model.points.size());
  const Eigen::Matrix3d Q = model.elements[g].Q;
  VectorField out;
  out.values.resize(e.values.size());
  for (int x = 0; x < model.action.points(); ++x) out.values[x] = Q * e.values[model.action.act_inverse(g, x)];
  return out;
}

CVec3 radiation_transform(const VectorField& e, const std::vector<RVector>& points,
                          const std::vector<double>& weights, const ScatteringSetup& setup) {
  check_field(e, points.size());
  if (weights.size() != points.size() || setup.density.size() != points.size())
    fail(ErrorCode::ShapeMismatch, "weights and density must match the samples");
  const Eigen::Matrix3d P = transverse_projector(setup.s0);
  const double kappa = setup.omega / setup.c_light;
  CVec3 s = CVec3::Zero();
  for (std::size_t x = 0; x < points.size(); ++x)
    s += (weights[x] * setup.density[x]) * unit_phase(-kappa * setup.s0.dot(to3(points[x]))) * e.values[x];
  return P.cast<cplx>() * s;
}

cplx density_fourier(const std::vector<RVector>& points, const std::vector<double>& weights,
                     const std::vector<double>& density, const Vec3& l) {
  cplx s = 0.0;
  for (std::size_t x = 0; x < points.size(); ++x) s += weights[x] * density[x] * unit_phase(-l.dot(to3(points[x])));
  return s;
}

SymmetryProjection symmetry_projected_transform(const FiniteIsometryAction& model, const DualObject& dual,
                                                const Vec3& k, const CVec3& n, const ScatteringSetup& setup) {
  const GroupAction& action = model.action;
  check_dual_matches(action, dual);
  const int m = action.points();
  if (static_cast<int>(setup.density.size()) != m) fail(ErrorCode::ShapeMismatch, "density not sized to samples");
  const OrbitDecomposition orb = orbits(action);
  for (int x = 0; x < m; ++x) {
    const int x0 = orb.representatives[orb.orbit_id[x]];
    if (std::abs(setup.density[x] - setup.density[x0]) > 1e-12 * std::max(1.0, std::abs(setup.density[x0])))
      fail(ErrorCode::DensityNotInvariant, "density is not constant on the orbit of point " + std::to_string(x0));
    if (std::abs(action.weight(x) - action.weight(x0)) > 1e-12 * action.weight(x0))
      fail(ErrorCode::DensityNotInvariant, "quadrature weights are not constant on the orbit of point " +
                                               std::to_string(x0));
  }
  const Eigen::Matrix3cd P = transverse_projector(setup.s0).cast<cplx>();
  const double kappa = setup.omega / setup.c_light;
  const VectorField e = plane_wave(k, n, model.points);
  const int G = action.group().order();
  std::vector<Eigen::Matrix3cd> qg(G);
  for (int g = 0; g < G; ++g) qg[g] = model.elements[g].Q.cast<cplx>();
  std::vector<cplx> phase(m);
  for (int x = 0; x < m; ++x) phase[x] = unit_phase(-kappa * setup.s0.dot(to3(model.points[x])));

  SymmetryProjection out;
  out.channels.assign(dual.size(), CVec3::Zero());
  out.channels_fd.assign(dual.size(), CVec3::Zero());
  for (int s = 0; s < dual.size(); ++s) {
    const auto& r = dual.irreps[s];
    const double wgt = dual.plancherel_weight[s];
    // Direct route: P^sigma E(x) = (d/|G|) sum_g conj(chi(g)) Q_g E(rho_g^{-1} x).
    CVec3 acc = CVec3::Zero();
    for (int x = 0; x < m; ++x) {
      CVec3 pe = CVec3::Zero();
      for (int g = 0; g < G; ++g) pe += std::conj(r.character(g)) * (qg[g] * e.values[action.act_inverse(g, x)]);
      acc += (action.weight(x) * setup.density[x]) * phase[x] * (wgt * pe);
    }
    out.channels[s] = P * acc;

    // Fundamental-domain route: vector Zak Z E(x0) = sum_h Q_h E(rho_h^{-1} x0) sigma(h)^*, extended by
    // Z^X E(rho_g^{-1} x0) = Q_g^T Z E(x0) sigma(g).
    CVec3 fd = CVec3::Zero();
    for (int o = 0; o < orb.num_orbits(); ++o) {
      const int x0 = orb.representatives[o];
      std::vector<CMatrix> z(3, CMatrix::Zero(r.dim, r.dim));
      for (int h = 0; h < G; ++h) {
        const CVec3 v = qg[h] * e.values[action.act_inverse(h, x0)];
        for (int c = 0; c < 3; ++c) z[c] += v[c] * r.matrices[h].adjoint();
      }
      const double mu = action.weight(x0) * setup.density[x0] / static_cast<double>(orb.stabilizers[o].size());
      for (int g = 0; g < G; ++g) {
        CVec3 tr;
        for (int c = 0; c < 3; ++c) tr[c] = (z[c] * r.matrices[g]).trace();
        const CVec3 ext = qg[g].transpose() * tr;
        fd += mu * phase[action.act_inverse(g, x0)] * (wgt * ext);
      }
    }
    out.channels_fd[s] = P * fd;
    out.route_residual = std::max(out.route_residual, (out.channels[s] - out.channels_fd[s]).norm());
  }
  out.total = CVec3::Zero();
  for (const auto& c : out.channels) out.total += c;
  std::vector<double> w(m);
  for (int x = 0; x < m; ++x) w[x] = action.weight(x);
  out.expected = P * n * density_fourier(model.points, w, setup.density, kappa * setup.s0 - k);
  out.recovery_residual = (out.total - out.expected).norm();
  return out;
}

std::vector<Vec3> fibonacci_directions(int count) {
  std::vector<Vec3> out;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    Vec3 v(r * std::cos(phi), r * std::sin(phi), z);
    out.push_back(v.normalized());
  }
  return out;
}

}  // namespace zakspace
