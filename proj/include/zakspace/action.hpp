#pragma once

#include <span>
#include <string>
#include <vector>

#include "zakspace/group.hpp"
#include "zakspace/linalg.hpp"

namespace zakspace {

// Machine-readable outcome of a numerical identity check.
struct CheckReport {
  std::string check;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

CheckReport make_report(std::string check, double residual, double tolerance);

// Left action of a finite group on a weighted finite point set:
// rho_g(x) = perm[g][x], measure w(x) > 0.
class GroupAction {
 public:
  GroupAction() = default;

  // Throws SizeMismatch / OutOfRange / NotHomomorphism / NonpositiveWeight.
  static GroupAction make(FiniteGroup group, std::vector<std::vector<int>> perm,
                          std::vector<double> weights);

  const FiniteGroup& group() const { return group_; }
  int points() const { return points_; }
  int act(int g, int x) const { return perm_[g][x]; }
  int act_inverse(int g, int x) const { return perm_[group_.inv(g)][x]; }
  const std::vector<std::vector<int>>& perm() const { return perm_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(int x) const { return weights_[x]; }
  bool unit_weights() const;

  // (rho_g f)(x) = f(rho_g^{-1} x)
  CVector act_on_function(int g, const CVector& f) const;

 private:
  FiniteGroup group_;
  int points_ = 0;
  std::vector<std::vector<int>> perm_;
  std::vector<double> weights_;
};

// The group acting on itself by left translation, unit weights.
GroupAction translation_action(const FiniteGroup& group);

struct OrbitDecomposition {
  std::vector<int> orbit_id;                 // per point
  std::vector<int> representatives;          // per orbit, smallest index (F)
  std::vector<std::vector<int>> orbit_points;
  std::vector<int> transport;                // per point x: some g with rho_g(x) = x0
  std::vector<std::vector<int>> stabilizers; // per orbit, G_{x0}
  std::vector<double> orbit_measure;         // per orbit; empty until weil_measures
  std::vector<double> fd_measure;            // per representative

  int num_orbits() const { return static_cast<int>(representatives.size()); }
  // Orbit index of a representative, or -1 when x0 is not in F.
  int representative_index(int x0) const;
};

struct Cocycle {
  int order = 0;
  int points = 0;
  std::vector<double> lambda;  // lambda[g * points + x] = w(rho_g x) / w(x)
  std::vector<double> q;

  double operator()(int g, int x) const {
    return lambda[static_cast<std::size_t>(g) * points + x];
  }
};

std::vector<int> transporter(const GroupAction& action, std::span<const int> a,
                             std::span<const int> b);
std::vector<int> stabilizer(const GroupAction& action, int x);
OrbitDecomposition orbits(const GroupAction& action);

// beta(x) = [x in F] / |G_x|
RVector bruhat_function(const GroupAction& action);
Cocycle cocycle(const GroupAction& action);

// A_rho f(O) = sum_g f(rho_g^{-1} x_O). With a cocycle the integrand is f/q
// (the Mackey-Bruhat variant). Throws InvariantViolation if the value
// depends on the orbit point used.
CVector orbital_mean(const GroupAction& action, const CVector& f, const Cocycle* q = nullptr);

// Fills orbit_measure and fd_measure by solving the Weil identity on delta
// functions at the representatives.
OrbitDecomposition weil_measures(const GroupAction& action, const Cocycle& cocycle);

CheckReport verify_weil(const GroupAction& action, const Cocycle& cocycle,
                        const OrbitDecomposition& measured, const CVector& f,
                        double tol = kExactTol);
CheckReport verify_mackey_bruhat(const GroupAction& action, const Cocycle& cocycle,
                                 const OrbitDecomposition& measured, const CVector& f,
                                 double tol = kExactTol);

// max |lambda_{g1}(rho_{g2}^{-1} x) - lambda_{g1 g2^{-1}}(x) / lambda_{g2^{-1}}(x)|
double cocycle_identity_residual(const GroupAction& action, const Cocycle& cocycle);
// max |q(rho_g^{-1} x) - q(x) / lambda_{g^{-1}}(x)|
double q_equation_residual(const GroupAction& action, const Cocycle& cocycle);

// Action together with its cocycle and measured orbit decomposition.
struct WeilSpace {
  GroupAction action;
  Cocycle cocycle;
  OrbitDecomposition orbits;

  static WeilSpace build(GroupAction action);
  // Weil G-space measure q*w per point.
  double point_measure(int x) const { return cocycle.q[x] * action.weight(x); }
};

}  // namespace zakspace
