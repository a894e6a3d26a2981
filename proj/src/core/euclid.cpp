#include "zakspace/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "zakspace/error.hpp"

namespace zakspace {

namespace {

// Dedupes isometries under the identification tolerance using a scalar hash
// of a fixed linear functional; neighbouring buckets are searched too.
class ElementIndex {
 public:
  explicit ElementIndex(double tol) : tol_(tol) {}

  int find(const IsometryElement& e, const std::vector<IsometryElement>& elems) const {
    const long long k = key(e);
    for (long long kk = k - 1; kk <= k + 1; ++kk) {
      auto it = buckets_.find(kk);
      if (it == buckets_.end()) continue;
      for (int i : it->second)
        if (element_distance(elems[i], e) < tol_) return i;
    }
    return -1;
  }
  void insert(const IsometryElement& e, int idx) { buckets_[key(e)].push_back(idx); }

 private:
  static long long key(const IsometryElement& e) {
    double s = 0.0;
    double w = 1.0;
    for (Eigen::Index i = 0; i < e.Q.size(); ++i, w += 0.7183) s += w * e.Q.data()[i];
    for (Eigen::Index i = 0; i < e.c.size(); ++i, w += 1.4142) s += w * e.c[i];
    return static_cast<long long>(std::floor(s * 1e5));
  }
  double tol_;
  std::unordered_map<long long, std::vector<int>> buckets_;
};

std::vector<IsometryElement> moves_of(const IsometryGroupSpec& spec) {
  std::vector<IsometryElement> moves;
  auto add = [&](const IsometryElement& e) {
    for (const auto& m : moves)
      if (element_distance(m, e) < spec.truncation.tolerance) return;
    moves.push_back(e);
  };
  for (const auto& g : spec.generators) add(g);
  for (const auto& g : spec.generators) add(inverse(g));
  return moves;
}

bool commute(const IsometryElement& a, const IsometryElement& b, double tol) {
  return element_distance(compose(a, b), compose(b, a)) < tol;
}

// Linear-part closure within the word bound; empty optional when it does
// not stabilize.
std::optional<std::vector<RMatrix>> point_group(const IsometryGroupSpec& spec) {
  std::vector<RMatrix> moves;
  for (const auto& g : spec.generators) {
    moves.push_back(g.Q);
    moves.push_back(g.Q.transpose());
  }
  std::vector<RMatrix> elems{RMatrix::Identity(spec.dim, spec.dim)};
  std::vector<int> frontier{0};
  for (int L = 1; L <= spec.truncation.word_length && !frontier.empty(); ++L) {
    std::vector<int> next;
    for (int i : frontier)
      for (const auto& m : moves) {
        const RMatrix q = elems[i] * m;
        bool found = false;
        for (const auto& e : elems) found = found || (e - q).norm() < spec.truncation.tolerance;
        if (!found) {
          elems.push_back(q);
          next.push_back(static_cast<int>(elems.size()) - 1);
        }
      }
    frontier = std::move(next);
  }
  if (!frontier.empty()) return std::nullopt;
  return elems;
}

struct Axis {
  RVector u;
  RVector a;
  double angle;
};

// Screw axis of a proper rotation part in 3-d.
std::optional<Axis> screw_axis(const IsometryElement& e) {
  if (e.dim() != 3 || e.Q.determinant() < 0) return std::nullopt;
  if ((e.Q - RMatrix::Identity(3, 3)).norm() < 1e-9) return std::nullopt;
  Eigen::EigenSolver<RMatrix> es(e.Q);
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(es.eigenvalues()[i] - cplx(1.0, 0.0)) < std::abs(es.eigenvalues()[best] - cplx(1.0, 0.0)))
      best = i;
  RVector u = es.eigenvectors().col(best).real();
  u.normalize();
  const RVector cperp = e.c - e.c.dot(u) * u;
  const RMatrix A = RMatrix::Identity(3, 3) - e.Q + u * u.transpose();
  const RVector a = A.colPivHouseholderQr().solve(cperp);
  // Signed angle about u.
  const RVector axial(Eigen::Vector3d(e.Q(2, 1) - e.Q(1, 2), e.Q(0, 2) - e.Q(2, 0), e.Q(1, 0) - e.Q(0, 1)));
  const double angle = std::atan2(0.5 * axial.dot(u), 0.5 * (e.Q.trace() - 1.0));
  return Axis{u, a, angle};
}

class Lattice {
 public:
  Lattice(const std::vector<RVector>& periods, int dim) : dim_(dim), k_(static_cast<int>(periods.size())) {
    if (k_ == 0) return;
    P_ = RMatrix(dim, k_);
    for (int j = 0; j < k_; ++j) {
      if (periods[j].size() != dim) fail(ErrorCode::DimensionMismatch, "period vector has the wrong dimension");
      P_.col(j) = periods[j];
    }
    const RMatrix gram = P_.transpose() * P_;
    if (std::abs(gram.determinant()) < 1e-12) fail(ErrorCode::InvalidArgument, "period vectors are linearly dependent");
    pinv_ = gram.inverse() * P_.transpose();
  }

  RVector reduce(const RVector& v) const {
    if (k_ == 0) return v;
    const RVector alpha = pinv_ * v;
    RVector shift(k_);
    for (int j = 0; j < k_; ++j) shift[j] = std::floor(alpha[j] + 1e-9);
    return v - P_ * shift;
  }
  // Distance modulo the lattice.
  double distance(const RVector& a, const RVector& b) const {
    const RVector d = a - b;
    if (k_ == 0) return d.norm();
    const RVector alpha = pinv_ * d;
    RVector shift(k_);
    for (int j = 0; j < k_; ++j) shift[j] = std::round(alpha[j]);
    return (d - P_ * shift).norm();
  }
  bool contains(const RVector& v, double tol) const { return distance(v, RVector::Zero(dim_)) < tol; }
  int rank() const { return k_; }

 private:
  int dim_;
  int k_;
  RMatrix P_;
  RMatrix pinv_;
};

}  // namespace

IsometryElement IsometryElement::identity(int dim) {
  return IsometryElement{RMatrix::Identity(dim, dim), RVector::Zero(dim)};
}

void validate_isometry(const IsometryElement& a) {
  const int d = a.dim();
  if (d != 2 && d != 3) fail(ErrorCode::DimensionMismatch, "isometries must be 2-d or 3-d");
  if (a.Q.rows() != d || a.Q.cols() != d) fail(ErrorCode::DimensionMismatch, "Q does not match c");
  if ((a.Q.transpose() * a.Q - RMatrix::Identity(d, d)).norm() > 1e-12)
    fail(ErrorCode::InvalidArgument, "Q is not orthogonal");
}

IsometryElement compose(const IsometryElement& a, const IsometryElement& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "composing isometries of different dimension");
  return IsometryElement{a.Q * b.Q, a.Q * b.c + a.c};
}

IsometryElement inverse(const IsometryElement& a) {
  const RMatrix qt = a.Q.transpose();
  return IsometryElement{qt, -(qt * a.c)};
}

RVector act(const IsometryElement& a, const RVector& x) {
  if (x.size() != a.dim()) fail(ErrorCode::DimensionMismatch, "point dimension does not match");
  return a.Q * x + a.c;
}

double element_distance(const IsometryElement& a, const IsometryElement& b) {
  if (a.dim() != b.dim()) return INFINITY;
  return std::sqrt((a.Q - b.Q).squaredNorm() + (a.c - b.c).squaredNorm());
}

IsometryElement rotation2(double angle, const RVector& c) {
  RMatrix q(2, 2);
  q << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return IsometryElement{q, c};
}

IsometryElement rotation3(const RVector& axis, double angle, const RVector& c) {
  const Eigen::Vector3d u = Eigen::Vector3d(axis[0], axis[1], axis[2]).normalized();
  const RMatrix q = Eigen::AngleAxisd(angle, u).toRotationMatrix();
  return IsometryElement{q, c};
}

IsometryElement screw(const RVector& axis, double angle, double pitch) {
  const Eigen::Vector3d u = Eigen::Vector3d(axis[0], axis[1], axis[2]).normalized();
  const RVector c = RVector(u) * (pitch * angle / kTwoPi);
  return rotation3(axis, angle, c);
}

void validate_spec(const IsometryGroupSpec& spec) {
  if (spec.dim != 2 && spec.dim != 3) fail(ErrorCode::DimensionMismatch, "dim must be 2 or 3");
  if (spec.generators.empty()) fail(ErrorCode::EmptySet, "no generators");
  for (const auto& g : spec.generators) {
    if (g.dim() != spec.dim) fail(ErrorCode::DimensionMismatch, "generator dimension does not match dim");
    validate_isometry(g);
  }
  if (spec.truncation.word_length < 1) fail(ErrorCode::InvalidArgument, "word length bound must be positive");
  if (!(spec.truncation.radius > 0)) fail(ErrorCode::InvalidArgument, "radius must be positive");
  if (!(spec.truncation.tolerance > 0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
}

GeneratedGroup generate(const IsometryGroupSpec& spec, bool require_finite) {
  validate_spec(spec);
  const auto moves = moves_of(spec);
  GeneratedGroup out;
  ElementIndex index(spec.truncation.tolerance);
  out.elements.push_back(IsometryElement::identity(spec.dim));
  out.word_length.push_back(0);
  index.insert(out.elements[0], 0);
  std::vector<int> frontier{0};
  bool radius_cut = false;
  for (int L = 1; L <= spec.truncation.word_length && !frontier.empty(); ++L) {
    std::vector<int> next;
    for (int i : frontier)
      for (const auto& m : moves) {
        IsometryElement e = compose(out.elements[i], m);
        if (e.c.norm() > spec.truncation.radius) {
          radius_cut = true;
          continue;
        }
        if (index.find(e, out.elements) >= 0) continue;
        const int idx = static_cast<int>(out.elements.size());
        index.insert(e, idx);
        out.elements.push_back(std::move(e));
        out.word_length.push_back(L);
        next.push_back(idx);
      }
    frontier = std::move(next);
  }
  out.finite = frontier.empty() && !radius_cut;
  if (require_finite && !out.finite)
    fail(ErrorCode::TruncationExceeded, "closure did not stabilize within the truncation; partial set has " +
                                            std::to_string(out.elements.size()) + " elements");
  return out;
}

TranslationSubgroup translation_subgroup(const GeneratedGroup& group, const Truncation& t) {
  TranslationSubgroup ts;
  const int d = group.elements.empty() ? 0 : group.elements[0].dim();
  const RMatrix I = RMatrix::Identity(d, d);
  ElementIndex all(t.tolerance);
  for (std::size_t i = 0; i < group.elements.size(); ++i) all.insert(group.elements[i], static_cast<int>(i));
  for (std::size_t i = 0; i < group.elements.size(); ++i)
    if ((group.elements[i].Q - I).norm() < t.tolerance) ts.indices.push_back(static_cast<int>(i));

  auto in_translations = [&](const IsometryElement& e) {
    const int j = all.find(e, group.elements);
    return j >= 0 && (group.elements[j].Q - I).norm() < t.tolerance;
  };
  // Products that stay inside the radius and the word bound must be found.
  const std::size_t cap = std::min<std::size_t>(ts.indices.size(), 64);
  for (std::size_t a = 0; a < cap; ++a)
    for (std::size_t b = 0; b < cap; ++b) {
      const int ia = ts.indices[a], ib = ts.indices[b];
      if (group.word_length[ia] + group.word_length[ib] > t.word_length) continue;
      const IsometryElement p = compose(group.elements[ia], group.elements[ib]);
      if (p.c.norm() <= t.radius && !in_translations(p)) ts.closed = false;
    }
  const std::size_t gcap = std::min<std::size_t>(group.elements.size(), 64);
  for (std::size_t g = 0; g < gcap; ++g)
    for (std::size_t a = 0; a < cap; ++a) {
      const IsometryElement& ge = group.elements[g];
      const IsometryElement& te = group.elements[ts.indices[a]];
      const IsometryElement conj = compose(compose(ge, te), inverse(ge));
      if ((conj.Q - I).norm() > t.tolerance || (conj.c - ge.Q * te.c).norm() > t.tolerance) ts.normal = false;
      if (group.word_length[g] * 2 + group.word_length[ts.indices[a]] <= t.word_length &&
          conj.c.norm() <= t.radius && !in_translations(conj))
        ts.normal = false;
    }
  return ts;
}

double conjugation_identity_residual(const IsometryElement& g, const RVector& c) {
  const int d = g.dim();
  const IsometryElement t{RMatrix::Identity(d, d), c};
  const IsometryElement lhs = compose(compose(g, t), inverse(g));
  const IsometryElement rhs{RMatrix::Identity(d, d), g.Q * c};
  return element_distance(lhs, rhs);
}

std::optional<std::pair<long, long>> rational_approximation(double x, long max_den, double tol) {
  const double target = x;
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0;
    const long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    if (std::abs(static_cast<double>(h2) / static_cast<double>(k2) - target) < tol) return std::make_pair(h2, k2);
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

TypeOneCertificate type_one_certificate(const IsometryGroupSpec& spec) {
  const GeneratedGroup G = generate(spec);
  const double tol = spec.truncation.tolerance;
  TypeOneCertificate cert;
  cert.group_elements = static_cast<long>(G.elements.size());

  if (G.finite) {
    bool abelian = true;
    for (std::size_t a = 0; a < G.elements.size() && abelian; ++a)
      for (std::size_t b = a + 1; b < G.elements.size() && abelian; ++b)
        abelian = commute(G.elements[a], G.elements[b], tol);
    cert.kind = "finite group";
    if (abelian) {
      cert.subgroup = "whole group";
      cert.index = 1;
      cert.subgroup_elements = cert.group_elements;
    } else {
      cert.subgroup = "trivial subgroup";
      cert.index = cert.group_elements;
      cert.subgroup_elements = 1;
    }
    return cert;
  }

  if (const auto pg = point_group(spec)) {
    const TranslationSubgroup ts = translation_subgroup(G, spec.truncation);
    cert.subgroup_elements = static_cast<long>(ts.indices.size());
    if (ts.closed && ts.normal && ts.indices.size() > 1) {
      cert.kind = "translations";
      cert.subgroup = "T(S)";
      cert.index = static_cast<long>(pg->size());
      cert.note = "index equals the order of the point group";
      return cert;
    }
  }

  if (spec.dim == 3) {
    std::optional<Axis> axis;
    for (const auto& e : G.elements)
      if ((axis = screw_axis(e))) break;
    bool shared = axis.has_value();
    for (std::size_t i = 0; i < G.elements.size() && shared; ++i) {
      const auto& e = G.elements[i];
      if (e.Q.determinant() < 0 || (e.Q * axis->u - axis->u).norm() > 1e-6) shared = false;
      const RVector shift = e.Q * axis->a + e.c - axis->a;
      if ((shift - shift.dot(axis->u) * axis->u).norm() > 1e-6 * std::max(1.0, shift.norm())) shared = false;
    }
    const std::size_t cap = std::min<std::size_t>(G.elements.size(), 64);
    for (std::size_t a = 0; a < cap && shared; ++a)
      for (std::size_t b = a + 1; b < cap && shared; ++b) shared = commute(G.elements[a], G.elements[b], 1e-6);
    if (shared) {
      cert.kind = "helical";
      cert.subgroup = "screw subgroup";
      cert.index = 1;
      cert.subgroup_elements = cert.group_elements;
      cert.heuristic = true;
      for (const auto& g : spec.generators)
        if (const auto ax = screw_axis(g)) {
          double x = ax->angle / kTwoPi;
          x -= std::floor(x);
          cert.rational_angle = rational_approximation(x, 1000, 1e-9);
          break;
        }
      cert.note = "all elements share one screw axis (heuristic test)";
      return cert;
    }
  }

  cert.kind = "inconclusive";
  cert.subgroup = "none";
  cert.index = -1;
  cert.note = "truncation does not witness a normal abelian subgroup of finite index";
  return cert;
}

FiniteIsometryAction to_finite_action(const IsometryGroupSpec& spec, const std::vector<RVector>& seeds,
                                      const std::vector<RVector>& periods,
                                      const std::vector<double>& seed_weights) {
  validate_spec(spec);
  if (seeds.empty()) fail(ErrorCode::EmptySet, "no seed points");
  if (!seed_weights.empty() && seed_weights.size() != seeds.size())
    fail(ErrorCode::SizeMismatch, "one weight per seed point required");
  const double tol = spec.truncation.tolerance;
  const Lattice lat(periods, spec.dim);
  for (const auto& g : spec.generators)
    for (const auto& p : periods)
      if (!lat.contains(g.Q * p, 1e-9))
        fail(ErrorCode::NotClosable, "period lattice is not invariant under a generator");

  auto same = [&](const IsometryElement& a, const IsometryElement& b) {
    return (a.Q - b.Q).norm() < tol && lat.distance(a.c, b.c) < tol;
  };
  auto find = [&](const std::vector<IsometryElement>& v, const IsometryElement& e) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (same(v[i], e)) return static_cast<int>(i);
    return -1;
  };

  const auto moves = moves_of(spec);
  std::vector<IsometryElement> elems{IsometryElement::identity(spec.dim)};
  const std::size_t max_elems = 4096;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& m : moves) {
      IsometryElement e = compose(elems[i], m);
      e.c = lat.reduce(e.c);
      if (find(elems, e) >= 0) continue;
      if (elems.size() >= max_elems)
        fail(ErrorCode::NotClosable, "group does not close under the periodic identification");
      elems.push_back(std::move(e));
    }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int p = find(elems, compose(elems[a], elems[b]));
      if (p < 0) fail(ErrorCode::NotClosable, "product left the identified element set");
      table[a][b] = p;
    }
  FiniteGroup group = FiniteGroup::from_table(table);

  std::vector<RVector> pts;
  std::vector<double> weights;
  auto find_point = [&](const RVector& x) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (lat.distance(pts[i], x) < tol) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    if (seeds[s].size() != spec.dim) fail(ErrorCode::DimensionMismatch, "seed point has the wrong dimension");
    for (const auto& e : elems) {
      const RVector y = lat.reduce(act(e, seeds[s]));
      if (find_point(y) < 0) {
        pts.push_back(y);
        weights.push_back(seed_weights.empty() ? 1.0 : seed_weights[s]);
      }
    }
  }
  std::vector<std::vector<int>> perm(n, std::vector<int>(pts.size()));
  for (int g = 0; g < n; ++g)
    for (std::size_t x = 0; x < pts.size(); ++x) {
      const int y = find_point(lat.reduce(act(elems[g], pts[x])));
      if (y < 0) fail(ErrorCode::NotClosable, "orbit points do not close under the identification");
      perm[g][x] = y;
    }
  FiniteIsometryAction out;
  out.action = GroupAction::make(std::move(group), std::move(perm), weights);
  out.elements = std::move(elems);
  out.points = std::move(pts);
  out.periods = periods;
  return out;
}

}  // namespace zakspace
