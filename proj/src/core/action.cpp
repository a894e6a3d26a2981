#include "zakspace/action.hpp"

#include <algorithm>
#include <cmath>

#include "zakspace/error.hpp"

namespace zakspace {

CheckReport make_report(std::string check, double residual, double tolerance) {
  CheckReport r;
  r.check = std::move(check);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = std::isfinite(residual) && residual <= tolerance;
  return r;
}

GroupAction GroupAction::make(FiniteGroup group, std::vector<std::vector<int>> perm,
                              std::vector<double> weights) {
  const int n = group.order();
  if (static_cast<int>(perm.size()) != n)
    fail(ErrorCode::SizeMismatch, "perm has " + std::to_string(perm.size()) +
                                      " entries, group order is " + std::to_string(n));
  const int m = static_cast<int>(weights.size());
  if (m == 0) fail(ErrorCode::EmptySet, "point set is empty");
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(perm[g].size()) != m)
      fail(ErrorCode::SizeMismatch, "perm[" + std::to_string(g) + "] is not sized to the points");
    std::vector<char> seen(m, 0);
    for (int x = 0; x < m; ++x) {
      const int y = perm[g][x];
      if (y < 0 || y >= m)
        fail(ErrorCode::OutOfRange, "perm[" + std::to_string(g) + "][" + std::to_string(x) +
                                        "] out of range");
      if (seen[y])
        fail(ErrorCode::NotHomomorphism,
             "perm[" + std::to_string(g) + "] is not a permutation");
      seen[y] = 1;
    }
  }
  for (int x = 0; x < m; ++x)
    if (perm[group.identity()][x] != x)
      fail(ErrorCode::NotHomomorphism, "perm(identity) is not the identity permutation");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const auto& pgh = perm[group.mul(g, h)];
      for (int x = 0; x < m; ++x)
        if (pgh[x] != perm[g][perm[h][x]])
          fail(ErrorCode::NotHomomorphism, "perm(gh) != perm(g)perm(h) for (g,h) = (" +
                                               std::to_string(g) + "," + std::to_string(h) + ")");
    }
  for (int x = 0; x < m; ++x)
    if (!(weights[x] > 0.0) || !std::isfinite(weights[x]))
      fail(ErrorCode::NonpositiveWeight, "weight of point " + std::to_string(x) +
                                             " is not strictly positive");
  GroupAction a;
  a.group_ = std::move(group);
  a.points_ = m;
  a.perm_ = std::move(perm);
  a.weights_ = std::move(weights);
  return a;
}

bool GroupAction::unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0; });
}

CVector GroupAction::act_on_function(int g, const CVector& f) const {
  if (f.size() != points_) fail(ErrorCode::SizeMismatch, "function not sized to the points");
  CVector out(points_);
  for (int x = 0; x < points_; ++x) out[x] = f[act_inverse(g, x)];
  return out;
}

GroupAction translation_action(const FiniteGroup& group) {
  const int n = group.order();
  std::vector<std::vector<int>> perm(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) perm[g][x] = group.mul(g, x);
  return GroupAction::make(group, std::move(perm), std::vector<double>(n, 1.0));
}

int OrbitDecomposition::representative_index(int x0) const {
  if (x0 < 0 || x0 >= static_cast<int>(orbit_id.size())) return -1;
  const int o = orbit_id[x0];
  return representatives[o] == x0 ? o : -1;
}

std::vector<int> transporter(const GroupAction& action, std::span<const int> a,
                             std::span<const int> b) {
  if (a.empty() || b.empty()) fail(ErrorCode::EmptySet, "transporter needs nonempty sets");
  std::vector<char> in_b(action.points(), 0);
  for (int y : b) {
    if (y < 0 || y >= action.points()) fail(ErrorCode::OutOfRange, "point out of range");
    in_b[y] = 1;
  }
  for (int x : a)
    if (x < 0 || x >= action.points()) fail(ErrorCode::OutOfRange, "point out of range");
  std::vector<int> out;
  for (int g = 0; g < action.group().order(); ++g) {
    bool hit = false;
    for (int x : a) hit = hit || in_b[action.act(g, x)];
    if (hit) out.push_back(g);
  }
  return out;
}

std::vector<int> stabilizer(const GroupAction& action, int x) {
  if (x < 0 || x >= action.points()) fail(ErrorCode::OutOfRange, "point out of range");
  std::vector<int> out;
  for (int g = 0; g < action.group().order(); ++g)
    if (action.act(g, x) == x) out.push_back(g);
  return out;
}

OrbitDecomposition orbits(const GroupAction& action) {
  const int m = action.points();
  const int n = action.group().order();
  OrbitDecomposition d;
  d.orbit_id.assign(m, -1);
  d.transport.assign(m, -1);
  for (int x0 = 0; x0 < m; ++x0) {
    if (d.orbit_id[x0] >= 0) continue;
    const int id = d.num_orbits();
    d.representatives.push_back(x0);
    std::vector<int> pts;
    for (int g = 0; g < n; ++g) {
      const int y = action.act(g, x0);
      if (d.orbit_id[y] < 0) {
        d.orbit_id[y] = id;
        // rho_g(x0) = y, so rho_{g^{-1}}(y) = x0
        d.transport[y] = action.group().inv(g);
        pts.push_back(y);
      }
    }
    std::sort(pts.begin(), pts.end());
    d.orbit_points.push_back(std::move(pts));
    d.stabilizers.push_back(stabilizer(action, x0));
  }
  return d;
}

RVector bruhat_function(const GroupAction& action) {
  const OrbitDecomposition d = orbits(action);
  RVector beta = RVector::Zero(action.points());
  for (int o = 0; o < d.num_orbits(); ++o)
    beta[d.representatives[o]] = 1.0 / static_cast<double>(d.stabilizers[o].size());
  return beta;
}

Cocycle cocycle(const GroupAction& action) {
  const int n = action.group().order();
  const int m = action.points();
  Cocycle c;
  c.order = n;
  c.points = m;
  c.lambda.resize(static_cast<std::size_t>(n) * m);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < m; ++x)
      c.lambda[static_cast<std::size_t>(g) * m + x] = action.weight(action.act(g, x)) / action.weight(x);
  const RVector beta = bruhat_function(action);
  c.q.assign(m, 0.0);
  for (int x = 0; x < m; ++x) {
    double s = 0.0;
    for (int g = 0; g < n; ++g) {
      const int gi = action.group().inv(g);
      s += beta[action.act(gi, x)] * c(gi, x);
    }
    c.q[x] = s;
  }
  return c;
}

namespace {

double l1_norm(const CVector& f) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) s += std::abs(f[i]);
  return s;
}

cplx orbit_sum_at(const GroupAction& action, const CVector& h, int x) {
  cplx s = 0.0;
  for (int g = 0; g < action.group().order(); ++g) s += h[action.act_inverse(g, x)];
  return s;
}

}  // namespace

CVector orbital_mean(const GroupAction& action, const CVector& f, const Cocycle* q) {
  if (f.size() != action.points())
    fail(ErrorCode::SizeMismatch, "function has " + std::to_string(f.size()) +
                                      " values, action has " + std::to_string(action.points()) +
                                      " points");
  CVector h = f;
  if (q)
    for (int x = 0; x < action.points(); ++x) h[x] /= q->q[x];
  const OrbitDecomposition d = orbits(action);
  CVector out(d.num_orbits());
  const double scale = std::max(1.0, l1_norm(h)) * action.group().order();
  for (int o = 0; o < d.num_orbits(); ++o) {
    out[o] = orbit_sum_at(action, h, d.representatives[o]);
    for (int y : d.orbit_points[o]) {
      if (std::abs(orbit_sum_at(action, h, y) - out[o]) > kExactTol * scale)
        fail(ErrorCode::InvariantViolation,
             "orbital mean depends on the orbit point at " + std::to_string(y));
    }
  }
  return out;
}

OrbitDecomposition weil_measures(const GroupAction& action, const Cocycle& cocycle) {
  OrbitDecomposition d = orbits(action);
  d.orbit_measure.resize(d.num_orbits());
  d.fd_measure.resize(d.num_orbits());
  for (int o = 0; o < d.num_orbits(); ++o) {
    const int x0 = d.representatives[o];
    CVector delta = CVector::Zero(action.points());
    delta[x0] = 1.0;
    // sum_x delta q w  =  m(O) * A_rho delta(O); other orbits see zero.
    const double lhs = cocycle.q[x0] * action.weight(x0);
    const CVector mean = orbital_mean(action, delta);
    d.orbit_measure[o] = lhs / mean[o].real();
    d.fd_measure[o] = d.orbit_measure[o];
  }
  return d;
}

CheckReport verify_weil(const GroupAction& action, const Cocycle& cocycle,
                        const OrbitDecomposition& measured, const CVector& f, double tol) {
  cplx lhs = 0.0;
  for (int x = 0; x < action.points(); ++x) lhs += f[x] * cocycle.q[x] * action.weight(x);
  const CVector mean = orbital_mean(action, f);
  cplx rhs = 0.0;
  for (int o = 0; o < measured.num_orbits(); ++o) rhs += measured.orbit_measure[o] * mean[o];
  return make_report("weil", std::abs(lhs - rhs), tol * std::max(l1_norm(f), 1e-300));
}

CheckReport verify_mackey_bruhat(const GroupAction& action, const Cocycle& cocycle,
                                 const OrbitDecomposition& measured, const CVector& f,
                                 double tol) {
  cplx lhs = 0.0;
  for (int x = 0; x < action.points(); ++x) lhs += f[x] * action.weight(x);
  const CVector mean = orbital_mean(action, f, &cocycle);
  cplx rhs = 0.0;
  for (int o = 0; o < measured.num_orbits(); ++o) rhs += measured.orbit_measure[o] * mean[o];
  return make_report("mackey_bruhat", std::abs(lhs - rhs), tol * std::max(l1_norm(f), 1e-300));
}

double cocycle_identity_residual(const GroupAction& action, const Cocycle& c) {
  const FiniteGroup& G = action.group();
  double r = 0.0;
  for (int g1 = 0; g1 < G.order(); ++g1)
    for (int g2 = 0; g2 < G.order(); ++g2) {
      const int g2i = G.inv(g2);
      for (int x = 0; x < action.points(); ++x) {
        const double lhs = c(g1, action.act(g2i, x));
        const double rhs = c(G.mul(g1, g2i), x) / c(g2i, x);
        r = std::max(r, std::abs(lhs - rhs));
      }
    }
  return r;
}

double q_equation_residual(const GroupAction& action, const Cocycle& c) {
  const FiniteGroup& G = action.group();
  double r = 0.0;
  for (int g = 0; g < G.order(); ++g) {
    const int gi = G.inv(g);
    for (int x = 0; x < action.points(); ++x)
      r = std::max(r, std::abs(c.q[action.act(gi, x)] - c.q[x] / c(gi, x)));
  }
  return r;
}

WeilSpace WeilSpace::build(GroupAction action) {
  WeilSpace s;
  s.cocycle = zakspace::cocycle(action);
  s.orbits = weil_measures(action, s.cocycle);
  s.action = std::move(action);
  return s;
}

}  // namespace zakspace
