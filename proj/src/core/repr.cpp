#include "zakspace/repr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "zakspace/error.hpp"
#include "zakspace/random.hpp"

namespace zakspace {

namespace {

constexpr double kUnitaryTol = 1e-12;
constexpr double kHomTol = 1e-10;
constexpr double kClusterTol = 1e-6;

UnitaryIrrep scalar_irrep(std::string label, const std::vector<cplx>& values) {
  UnitaryIrrep r;
  r.label = std::move(label);
  r.dim = 1;
  for (cplx v : values) r.matrices.push_back(CMatrix::Constant(1, 1, v));
  return r;
}

double character_norm(const FiniteGroup& G, const std::vector<CMatrix>& m) {
  double s = 0.0;
  for (int g = 0; g < G.order(); ++g) s += std::norm(m[g].trace());
  return s / G.order();
}

cplx character_inner(const FiniteGroup& G, const UnitaryIrrep& a, const UnitaryIrrep& b) {
  cplx s = 0.0;
  for (int g = 0; g < G.order(); ++g) s += a.character(g) * std::conj(b.character(g));
  return s / static_cast<double>(G.order());
}

// Groups sorted eigenvalues into clusters of near-equal values.
std::vector<std::vector<int>> clusters(const RVector& evals) {
  double scale = 1.0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) scale = std::max(scale, std::abs(evals[i]));
  std::vector<std::vector<int>> out;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (out.empty() || evals[i] - evals[out.back().back()] > kClusterTol * scale)
      out.push_back({});
    out.back().push_back(static_cast<int>(i));
  }
  return out;
}

CMatrix columns(const CMatrix& v, const std::vector<int>& idx) {
  CMatrix w(v.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) w.col(static_cast<Eigen::Index>(j)) = v.col(idx[j]);
  return w;
}

bool candidate_ok(const FiniteGroup& G, const std::vector<CMatrix>& m) {
  if (std::abs(character_norm(G, m) - 1.0) > 1e-9) return false;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      if ((m[G.mul(g, h)] - m[g] * m[h]).norm() > kHomTol) return false;
  return true;
}

// Splits a unitary representation into irreducibles and appends the ones not
// seen yet (equivalence by characters). Class sums separate isotypic parts; a
// group-averaged random Hermitian element of the commutant splits each part.
void collect_irreps(const FiniteGroup& G, const std::vector<CMatrix>& R, Rng& rng,
                    std::vector<UnitaryIrrep>& found) {
  const Eigen::Index D = R[0].rows();
  CMatrix hc = CMatrix::Zero(D, D);
  for (const auto& cls : G.conjugacy_classes()) {
    CMatrix s = CMatrix::Zero(D, D);
    for (int g : cls) s += R[g];
    const double a = rng.normal();
    const double b = rng.normal();
    hc += a * (s + s.adjoint()) + cplx(0.0, b) * (s - s.adjoint());
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> iso(hc);
  for (const auto& part : clusters(iso.eigenvalues())) {
    const CMatrix V = columns(iso.eigenvectors(), part);
    const Eigen::Index k = V.cols();
    std::vector<CMatrix> rv(G.order());
    for (int g = 0; g < G.order(); ++g) rv[g] = V.adjoint() * R[g] * V;

    bool done = false;
    for (int attempt = 0; attempt < 16 && !done; ++attempt) {
      const CMatrix x = rng.hermitian(k);
      CMatrix y = CMatrix::Zero(k, k);
      for (int g = 0; g < G.order(); ++g) y += rv[g] * x * rv[g].adjoint();
      y /= static_cast<double>(G.order());
      y = (y + y.adjoint()).eval() * 0.5;
      Eigen::SelfAdjointEigenSolver<CMatrix> es(y);
      std::vector<UnitaryIrrep> cands;
      bool all_ok = true;
      for (const auto& cl : clusters(es.eigenvalues())) {
        const CMatrix W = columns(es.eigenvectors(), cl);
        std::vector<CMatrix> m(G.order());
        for (int g = 0; g < G.order(); ++g) m[g] = W.adjoint() * rv[g] * W;
        if (!candidate_ok(G, m)) {
          all_ok = false;
          break;
        }
        UnitaryIrrep r;
        r.dim = static_cast<int>(W.cols());
        r.matrices = std::move(m);
        cands.push_back(std::move(r));
      }
      if (!all_ok) continue;
      done = true;
      for (auto& c : cands) {
        bool dup = false;
        for (const auto& f : found)
          if (f.dim == c.dim && std::abs(character_inner(G, f, c)) > 0.5) dup = true;
        if (!dup) found.push_back(std::move(c));
      }
    }
    if (!done)
      fail(ErrorCode::NotIrreducible, "numeric splitting did not produce irreducible blocks");
  }
}

// Trivial first, then by dimension, then by character values.
void canonical_order(const FiniteGroup& G, std::vector<UnitaryIrrep>& irreps) {
  auto key = [&](const UnitaryIrrep& r) {
    std::vector<double> k{static_cast<double>(r.dim)};
    for (int g = 0; g < G.order(); ++g) {
      const cplx c = r.character(g);
      k.push_back(-std::round(c.real() * 1e6) / 1e6);
      k.push_back(std::round(c.imag() * 1e6) / 1e6);
    }
    return k;
  };
  std::stable_sort(irreps.begin(), irreps.end(),
                   [&](const UnitaryIrrep& a, const UnitaryIrrep& b) { return key(a) < key(b); });
}

int parse_positive(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size() || v <= 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "bad " + what + " parameter '" + s + "'");
  }
}

int parse_index(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "bad " + what + " element '" + s + "'");
  }
}

// Splits "A×B" or "AxB" at the first separator.
std::pair<std::string, std::string> split_product(const std::string& s) {
  const std::string times = "\xC3\x97";
  std::size_t p = s.find(times);
  std::size_t len = times.size();
  if (p == std::string::npos) {
    p = s.find('x');
    len = 1;
  }
  if (p == std::string::npos)
    fail(ErrorCode::InvalidArgument, "product catalog needs two factors: '" + s + "'");
  return {s.substr(0, p), s.substr(p + len)};
}

DualObject cyclic_dual(int n) {
  const FiniteGroup G = cyclic_group(n);
  std::vector<UnitaryIrrep> out;
  for (int j = 0; j < n; ++j) {
    std::vector<cplx> v(n);
    for (int g = 0; g < n; ++g) v[g] = unit_phase(kTwoPi * j * g / n);
    out.push_back(scalar_irrep("chi" + std::to_string(j), v));
  }
  return make_dual(G, std::move(out));
}

DualObject dihedral_dual(int n) {
  const FiniteGroup G = dihedral_group(n);
  const int order = 2 * n;
  std::vector<UnitaryIrrep> out;
  const std::vector<int> alphas = (n % 2 == 0) ? std::vector<int>{1, -1} : std::vector<int>{1};
  int idx = 0;
  for (int alpha : alphas)
    for (int beta : {1, -1}) {
      std::vector<cplx> v(order);
      for (int x = 0; x < order; ++x) {
        const int f = x / n, k = x % n;
        v[x] = ((alpha < 0 && k % 2) ? -1.0 : 1.0) * ((beta < 0 && f) ? -1.0 : 1.0);
      }
      out.push_back(scalar_irrep("A" + std::to_string(idx++), v));
    }
  for (int j = 1; 2 * j < n; ++j) {
    UnitaryIrrep r;
    r.label = "E" + std::to_string(j);
    r.dim = 2;
    CMatrix s(2, 2);
    s << 0, 1, 1, 0;
    for (int x = 0; x < order; ++x) {
      const int f = x / n, k = x % n;
      CMatrix rk = CMatrix::Zero(2, 2);
      rk(0, 0) = unit_phase(kTwoPi * j * k / n);
      rk(1, 1) = unit_phase(-kTwoPi * j * k / n);
      r.matrices.push_back(f ? CMatrix(rk * s) : rk);
    }
    out.push_back(std::move(r));
  }
  return make_dual(G, std::move(out));
}

DualObject product_dual(const DualObject& a, const DualObject& b) {
  const FiniteGroup G = direct_product(a.group, b.group);
  const int nb = b.group.order();
  std::vector<UnitaryIrrep> out;
  for (const auto& ra : a.irreps)
    for (const auto& rb : b.irreps) {
      UnitaryIrrep r;
      r.label = ra.label + "*" + rb.label;
      r.dim = ra.dim * rb.dim;
      for (int x = 0; x < G.order(); ++x) {
        const CMatrix& ma = ra.matrices[x / nb];
        const CMatrix& mb = rb.matrices[x % nb];
        CMatrix k(r.dim, r.dim);
        for (int i = 0; i < ra.dim; ++i)
          for (int j = 0; j < ra.dim; ++j) k.block(i * rb.dim, j * rb.dim, rb.dim, rb.dim) = ma(i, j) * mb;
        r.matrices.push_back(std::move(k));
      }
      out.push_back(std::move(r));
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const UnitaryIrrep& x, const UnitaryIrrep& y) { return x.dim < y.dim; });
  return make_dual(G, std::move(out));
}

}  // namespace

bool DualObject::abelian() const {
  return std::all_of(irreps.begin(), irreps.end(), [](const UnitaryIrrep& r) { return r.dim == 1; });
}

int DualObject::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (irreps[i].label == label) return i;
  return -1;
}

void validate_irrep(const FiniteGroup& G, const UnitaryIrrep& r) {
  if (static_cast<int>(r.matrices.size()) != G.order())
    fail(ErrorCode::SizeMismatch, "irrep " + r.label + " has the wrong number of matrices");
  for (const auto& m : r.matrices)
    if (m.rows() != r.dim || m.cols() != r.dim)
      fail(ErrorCode::ShapeMismatch, "irrep " + r.label + " matrix is not d x d");
  const CMatrix I = CMatrix::Identity(r.dim, r.dim);
  if ((r.matrices[G.identity()] - I).norm() > kHomTol)
    fail(ErrorCode::InvariantViolation, "irrep " + r.label + " is not the identity at e");
  for (int g = 0; g < G.order(); ++g) {
    if ((r.matrices[g] * r.matrices[g].adjoint() - I).norm() > kUnitaryTol * std::max(1, r.dim))
      fail(ErrorCode::InvariantViolation, "irrep " + r.label + " is not unitary at " + std::to_string(g));
    for (int h = 0; h < G.order(); ++h)
      if ((r.matrices[G.mul(g, h)] - r.matrices[g] * r.matrices[h]).norm() > kHomTol)
        fail(ErrorCode::InvariantViolation, "irrep " + r.label + " is not a homomorphism at (" +
                                                std::to_string(g) + "," + std::to_string(h) + ")");
  }
  const double cn = character_norm(G, r.matrices);
  if (std::abs(cn - 1.0) > 1e-9)
    fail(ErrorCode::NotIrreducible, "irrep " + r.label + " has character norm " + std::to_string(cn));
}

void validate_dual(const DualObject& dual) {
  const FiniteGroup& G = dual.group;
  int sum = 0;
  for (const auto& r : dual.irreps) {
    validate_irrep(G, r);
    sum += r.dim * r.dim;
  }
  for (int i = 0; i < dual.size(); ++i)
    for (int j = i + 1; j < dual.size(); ++j)
      if (std::abs(character_inner(G, dual.irreps[i], dual.irreps[j])) > 1e-9)
        fail(ErrorCode::InvariantViolation,
             "irreps " + dual.irreps[i].label + " and " + dual.irreps[j].label + " are equivalent");
  if (sum != G.order())
    fail(ErrorCode::IncompleteDual, "sum of squared dimensions is " + std::to_string(sum) +
                                        ", group order is " + std::to_string(G.order()));
}

DualObject make_dual(const FiniteGroup& group, std::vector<UnitaryIrrep> irreps) {
  DualObject d;
  d.group = group;
  d.irreps = std::move(irreps);
  for (const auto& r : d.irreps)
    d.plancherel_weight.push_back(static_cast<double>(r.dim) / group.order());
  validate_dual(d);
  return d;
}

bool same_group_table(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  for (int g = 0; g < a.order(); ++g)
    for (int h = 0; h < a.order(); ++h)
      if (a.mul(g, h) != b.mul(g, h)) return false;
  return true;
}

DualObject dual_abelian(const FiniteGroup& G) {
  if (!G.is_abelian()) fail(ErrorCode::NotAbelian, "dual_abelian needs an abelian group");
  const int n = G.order();
  // Characters of a growing subgroup H, extended one generator at a time.
  std::vector<int> in_h(n, 0);
  in_h[G.identity()] = 1;
  std::vector<int> h_elems{G.identity()};
  std::vector<std::vector<cplx>> chars{std::vector<cplx>(n, 0.0)};
  chars[0][G.identity()] = 1.0;
  while (static_cast<int>(h_elems.size()) < n) {
    int a = 0;
    while (in_h[a]) ++a;
    int m = 1;
    int am = a;
    while (!in_h[am]) {
      am = G.mul(am, a);
      ++m;
    }
    std::vector<int> new_elems;
    std::vector<std::pair<int, int>> decomposition(n, {-1, -1});  // element -> (k, h)
    int ak = G.identity();
    for (int k = 0; k < m; ++k) {
      for (int h : h_elems) {
        const int e = G.mul(ak, h);
        decomposition[e] = {k, h};
        new_elems.push_back(e);
      }
      ak = G.mul(ak, a);
    }
    std::vector<std::vector<cplx>> next;
    for (const auto& chi : chars) {
      const cplx target = chi[am];
      const double base = std::arg(target) / m;
      for (int j = 0; j < m; ++j) {
        const cplx zeta = unit_phase(base + kTwoPi * j / m);
        std::vector<cplx> ext(n, 0.0);
        for (int e : new_elems) {
          const auto [k, h] = decomposition[e];
          ext[e] = std::pow(zeta, k) * chi[h];
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    for (int e : new_elems) in_h[e] = 1;
    std::sort(new_elems.begin(), new_elems.end());
    h_elems = std::move(new_elems);
  }
  std::vector<UnitaryIrrep> out;
  for (std::size_t j = 0; j < chars.size(); ++j) {
    // Snap exact-rational phases so trivial values stay exactly 1.
    for (auto& v : chars[j]) {
      if (std::abs(v.imag()) < 1e-15) v = {v.real(), 0.0};
      if (std::abs(v.real()) < 1e-15) v = {0.0, v.imag()};
    }
    out.push_back(scalar_irrep("chi" + std::to_string(j), chars[j]));
  }
  return make_dual(G, std::move(out));
}

FiniteGroup catalog_group(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) fail(ErrorCode::InvalidArgument, "unknown catalog '" + name + "'");
  const std::string kind = name.substr(0, colon);
  const std::string arg = name.substr(colon + 1);
  if (kind == "cyclic") return cyclic_group(parse_positive(arg, "cyclic"));
  if (kind == "dihedral") return dihedral_group(parse_positive(arg, "dihedral"));
  if (kind == "symmetric") return symmetric_group(parse_positive(arg, "symmetric"));
  if (kind == "product") {
    const auto [a, b] = split_product(arg);
    return direct_product(catalog_group(a), catalog_group(b));
  }
  fail(ErrorCode::InvalidArgument, "unknown catalog '" + name + "'");
}

DualObject irreps_catalog(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) fail(ErrorCode::InvalidArgument, "unknown catalog '" + name + "'");
  const std::string kind = name.substr(0, colon);
  const std::string arg = name.substr(colon + 1);
  if (kind == "cyclic") return cyclic_dual(parse_positive(arg, "cyclic"));
  if (kind == "dihedral") return dihedral_dual(parse_positive(arg, "dihedral"));
  if (kind == "symmetric") return irreps_regular(catalog_group(name), 0);
  if (kind == "product") {
    const auto [a, b] = split_product(arg);
    return product_dual(irreps_catalog(a), irreps_catalog(b));
  }
  fail(ErrorCode::InvalidArgument, "unknown catalog '" + name + "'");
}

DualObject irreps_regular(const FiniteGroup& G, std::uint64_t seed) {
  const int n = G.order();
  std::vector<CMatrix> R(n, CMatrix::Zero(n, n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) R[g](G.mul(g, x), x) = 1.0;
  Rng rng(seed);
  std::vector<UnitaryIrrep> found;
  collect_irreps(G, R, rng, found);
  canonical_order(G, found);
  for (std::size_t i = 0; i < found.size(); ++i) found[i].label = "irr" + std::to_string(i);
  return make_dual(G, std::move(found));
}

DualObject irreps_mackey(const FiniteGroup& G, std::span<const int> A, std::uint64_t seed) {
  G.check_subgroup(A);
  if (!G.is_normal(A)) fail(ErrorCode::NotSubgroup, "Mackey subgroup is not normal");
  std::vector<int> a_sorted(A.begin(), A.end());
  std::sort(a_sorted.begin(), a_sorted.end());
  std::vector<int> local(G.order(), -1);
  for (std::size_t i = 0; i < a_sorted.size(); ++i) local[a_sorted[i]] = static_cast<int>(i);
  const int na = static_cast<int>(a_sorted.size());
  std::vector<std::vector<int>> table(na, std::vector<int>(na));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) table[i][j] = local[G.mul(a_sorted[i], a_sorted[j])];
  const FiniteGroup AG = FiniteGroup::from_table(table);
  if (!AG.is_abelian()) fail(ErrorCode::NotAbelian, "Mackey subgroup is not abelian");
  const DualObject adual = dual_abelian(AG);

  // G acts on characters of A by (g.chi)(a) = chi(g^-1 a g); induce one
  // character per orbit and split the induced representation.
  auto char_of = [&](int j, int a) { return adual.irreps[j].matrices[local[a]](0, 0); };
  std::vector<int> seen(adual.size(), 0);
  const auto cosets = left_cosets(G, A);
  const int r = static_cast<int>(cosets.size());
  std::vector<int> coset_of(G.order());
  for (int i = 0; i < r; ++i)
    for (int e : cosets[i]) coset_of[e] = i;
  Rng rng(seed);
  std::vector<UnitaryIrrep> found;
  for (int j = 0; j < adual.size(); ++j) {
    if (seen[j]) continue;
    for (int g = 0; g < G.order(); ++g) {
      for (int k = 0; k < adual.size(); ++k) {
        bool same = true;
        for (int a : a_sorted)
          same = same && std::abs(char_of(k, a) - char_of(j, G.mul(G.mul(G.inv(g), a), g))) < 1e-9;
        if (same) seen[k] = 1;
      }
    }
    std::vector<CMatrix> ind(G.order(), CMatrix::Zero(r, r));
    for (int g = 0; g < G.order(); ++g)
      for (int c = 0; c < r; ++c) {
        const int t = cosets[c][0];
        const int gt = G.mul(g, t);
        const int i = coset_of[gt];
        const int a = G.mul(G.inv(cosets[i][0]), gt);
        ind[g](i, c) = char_of(j, a);
      }
    collect_irreps(G, ind, rng, found);
  }
  canonical_order(G, found);
  for (std::size_t i = 0; i < found.size(); ++i) found[i].label = "irr" + std::to_string(i);
  return make_dual(G, std::move(found));
}

DualObject irreps(const FiniteGroup& group, const std::string& hint, std::uint64_t seed) {
  if (hint.empty()) {
    if (group.is_abelian()) return dual_abelian(group);
    return irreps_regular(group, seed);
  }
  if (hint == "regular") return irreps_regular(group, seed);
  if (hint.rfind("mackey:", 0) == 0) {
    std::vector<int> elems;
    std::stringstream ss(hint.substr(7));
    std::string tok;
    while (std::getline(ss, tok, ','))
      elems.push_back(parse_index(tok, "mackey"));
    return irreps_mackey(group, elems, seed);
  }
  DualObject d = irreps_catalog(hint);
  if (!same_group_table(d.group, group))
    fail(ErrorCode::DualGroupMismatch, "catalog '" + hint + "' does not match the group table");
  d.group = group;
  return d;
}

DualObject conjugate_dual(const DualObject& dual, const std::vector<CMatrix>& u) {
  if (static_cast<int>(u.size()) != dual.size())
    fail(ErrorCode::SizeMismatch, "one unitary per irrep required");
  DualObject out = dual;
  for (int s = 0; s < dual.size(); ++s)
    for (auto& m : out.irreps[s].matrices) m = u[s] * m * u[s].adjoint();
  return out;
}

FourierCoefficients fourier(const CVector& f, const DualObject& dual) {
  const int n = dual.group.order();
  if (f.size() != n) fail(ErrorCode::SizeMismatch, "function not sized to the group");
  FourierCoefficients out;
  for (const auto& r : dual.irreps) {
    CMatrix s = CMatrix::Zero(r.dim, r.dim);
    for (int g = 0; g < n; ++g) s += f[g] * r.matrices[g].adjoint();
    out.push_back(std::move(s));
  }
  return out;
}

CVector inverse_fourier(const FourierCoefficients& coeffs, const DualObject& dual) {
  if (static_cast<int>(coeffs.size()) != dual.size())
    fail(ErrorCode::ShapeMismatch, "coefficient count does not match the dual");
  const int n = dual.group.order();
  CVector f = CVector::Zero(n);
  for (int s = 0; s < dual.size(); ++s) {
    const auto& r = dual.irreps[s];
    if (coeffs[s].rows() != r.dim || coeffs[s].cols() != r.dim)
      fail(ErrorCode::ShapeMismatch, "coefficient for " + r.label + " has the wrong shape");
    for (int g = 0; g < n; ++g) f[g] += dual.plancherel_weight[s] * (coeffs[s] * r.matrices[g]).trace();
  }
  return f;
}

bool ReciprocalSpace::contains(int sigma) const {
  return std::find(members.begin(), members.end(), sigma) != members.end();
}

CMatrix subgroup_projector(const UnitaryIrrep& irrep, std::span<const int> H) {
  CMatrix p = CMatrix::Zero(irrep.dim, irrep.dim);
  for (int h : H) p += irrep.matrices[h];
  return p / static_cast<double>(H.size());
}

ReciprocalSpace reciprocal_space(const DualObject& dual, std::span<const int> H) {
  dual.group.check_subgroup(H);
  ReciprocalSpace rs;
  for (int s = 0; s < dual.size(); ++s) {
    const CMatrix p = subgroup_projector(dual.irreps[s], H);
    const double tr = p.trace().real();
    const double m = std::round(tr);
    if (std::abs(tr - m) > 1e-6)
      fail(ErrorCode::InvariantViolation, "non-integral trivial multiplicity for " + dual.irreps[s].label);
    rs.all_projectors.push_back(p);
    if (m >= 1) {
      rs.members.push_back(s);
      rs.mult1.push_back(static_cast<int>(m));
      rs.projector.push_back(p);
    }
  }
  return rs;
}

PoissonReport poisson_abelian_check(const CVector& f, const FiniteGroup& G, std::span<const int> H) {
  if (!G.is_abelian()) fail(ErrorCode::NotAbelian, "abelian Poisson summation needs an abelian group");
  G.check_subgroup(H);
  if (f.size() != G.order()) fail(ErrorCode::SizeMismatch, "function not sized to the group");
  const DualObject dual = dual_abelian(G);
  const ReciprocalSpace rs = reciprocal_space(dual, H);
  const FourierCoefficients fh = fourier(f, dual);
  PoissonReport r;
  r.lhs = 0.0;
  for (int h : H) r.lhs += f[h];
  r.lhs /= static_cast<double>(H.size());
  r.rhs = 0.0;
  for (int s : rs.members) r.rhs += fh[s](0, 0) / static_cast<double>(G.order());
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

PoissonReport poisson_compact_check(const CVector& f, const DualObject& dual, std::span<const int> H) {
  const ReciprocalSpace rs = reciprocal_space(dual, H);
  if (f.size() != dual.group.order()) fail(ErrorCode::SizeMismatch, "function not sized to the group");
  const FourierCoefficients fh = fourier(f, dual);
  PoissonReport r;
  r.lhs = 0.0;
  for (int h : H) r.lhs += f[h];
  r.lhs /= static_cast<double>(H.size());
  r.rhs = 0.0;
  for (std::size_t i = 0; i < rs.members.size(); ++i) {
    const int s = rs.members[i];
    r.rhs += dual.plancherel_weight[s] * (rs.projector[i] * fh[s]).trace();
  }
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& G, std::span<const int> H) {
  std::vector<char> covered(G.order(), 0);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    std::vector<int> c;
    for (int h : H) {
      const int e = G.mul(g, h);
      covered[e] = 1;
      c.push_back(e);
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

QuotientFourierReport quotient_fourier_check_cosets(const CVector& fc, const DualObject& dual,
                                                    std::span<const int> H) {
  const FiniteGroup& G = dual.group;
  G.check_subgroup(H);
  const auto cosets = left_cosets(G, H);
  if (fc.size() != static_cast<Eigen::Index>(cosets.size()))
    fail(ErrorCode::SizeMismatch, "expected one value per coset");
  const ReciprocalSpace rs = reciprocal_space(dual, H);
  const double hsize = static_cast<double>(H.size());
  QuotientFourierReport rep;

  // Quotient coefficients against sigma_{G/H}(gH) = sigma(g) P, measure |H| per coset.
  std::vector<CMatrix> coef(dual.size());
  for (int s = 0; s < dual.size(); ++s) {
    const auto& r = dual.irreps[s];
    const CMatrix& P = rs.all_projectors[s];
    coef[s] = CMatrix::Zero(r.dim, r.dim);
    for (std::size_t c = 0; c < cosets.size(); ++c)
      coef[s] += hsize * fc[static_cast<Eigen::Index>(c)] * (r.matrices[cosets[c][0]] * P).adjoint();
  }
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    const int g = cosets[c][0];
    cplx v = 0.0;
    for (int s : rs.members)
      v += dual.plancherel_weight[s] * (coef[s] * dual.irreps[s].matrices[g] * rs.all_projectors[s]).trace();
    rep.reconstruction_error = std::max(rep.reconstruction_error, std::abs(v - fc[static_cast<Eigen::Index>(c)]));
  }
  // Full-group coefficients vanish off the reciprocal space.
  CVector f(G.order());
  for (std::size_t c = 0; c < cosets.size(); ++c)
    for (int e : cosets[c]) f[e] = fc[static_cast<Eigen::Index>(c)];
  const FourierCoefficients fh = fourier(f, dual);
  for (int s = 0; s < dual.size(); ++s)
    if (!rs.contains(s)) rep.support_error = std::max(rep.support_error, fh[s].norm());
  return rep;
}

QuotientFourierReport quotient_fourier_check(const CVector& f, const DualObject& dual,
                                             std::span<const int> H) {
  const FiniteGroup& G = dual.group;
  G.check_subgroup(H);
  if (f.size() != G.order()) fail(ErrorCode::SizeMismatch, "function not sized to the group");
  const auto cosets = left_cosets(G, H);
  double scale = 1.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) scale = std::max(scale, std::abs(f[i]));
  CVector fc(static_cast<Eigen::Index>(cosets.size()));
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    fc[static_cast<Eigen::Index>(c)] = f[cosets[c][0]];
    for (int e : cosets[c])
      if (std::abs(f[e] - f[cosets[c][0]]) > kExactTol * scale)
        fail(ErrorCode::NotCosetFunction, "f is not constant on the coset of " + std::to_string(cosets[c][0]));
  }
  return quotient_fourier_check_cosets(fc, dual, H);
}

double hs_norm2(const CMatrix& m) { return m.squaredNorm(); }

}  // namespace zakspace
