#include "oracles.hpp"
#include "support.hpp"

using namespace zs_test;

namespace {

void check_orthogonality(const DualObject& d) {
  const FiniteGroup& G = d.group;
  for (int a = 0; a < d.size(); ++a)
    for (int b = 0; b < d.size(); ++b) {
      cplx s = 0.0;
      for (int g = 0; g < G.order(); ++g) s += d.irreps[a].character(g) * std::conj(d.irreps[b].character(g));
      CHECK(std::abs(s / static_cast<double>(G.order()) - (a == b ? 1.0 : 0.0)) < 1e-9);
    }
}

}  // namespace

TEST_CASE("catalog duals are complete and orthonormal") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const DualObject d = irreps_catalog(name);
    validate_dual(d);
    int sum = 0;
    for (const auto& s : d.irreps) sum += s.dim * s.dim;
    CHECK(sum == d.group.order());
    CHECK(d.size() == static_cast<int>(d.group.conjugacy_classes().size()));
    check_orthogonality(d);
  }
}

TEST_CASE("regular and mackey splits agree with catalogs on dimensions") {
  const FiniteGroup S3 = symmetric_group(3);
  const DualObject reg = irreps_regular(S3, 1);
  const DualObject mk = irreps_mackey(S3, std::vector<int>{0, 3, 4}, 1);
  const auto dims = [](const DualObject& d) {
    std::vector<int> v;
    for (const auto& s : d.irreps) v.push_back(s.dim);
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(dims(reg) == std::vector<int>{1, 1, 2});
  CHECK(dims(mk) == std::vector<int>{1, 1, 2});
  CHECK(dims(irreps_regular(symmetric_group(4), 2)) == std::vector<int>{1, 1, 2, 3, 3});
  CHECK(dims(irreps_regular(dihedral_group(5), 3)) == std::vector<int>{1, 1, 2, 2});
  check_orthogonality(reg);
  check_orthogonality(mk);
  CHECK(reg.irreps[0].label == "irr0");
  for (int g = 0; g < 6; ++g) CHECK(std::abs(reg.irreps[0].character(g) - 1.0) < 1e-12);
}

TEST_CASE("hint dispatch") {
  const FiniteGroup D3 = dihedral_group(3);
  CHECK(irreps(D3, "dihedral:3").size() == 3);
  CHECK(irreps(D3, "regular", 4).size() == 3);
  CHECK(irreps(cyclic_group(6)).abelian());
  CHECK_CODE(irreps(D3, "cyclic:6"), ErrorCode::DualGroupMismatch);
  CHECK_CODE(irreps(D3, "nonsense:3"), ErrorCode::InvalidArgument);
  CHECK_CODE(irreps(symmetric_group(3), "mackey:0,2"), ErrorCode::NotSubgroup);
  CHECK_CODE(dual_abelian(D3), ErrorCode::NotAbelian);
}

TEST_CASE("invalid irreps are rejected") {
  const FiniteGroup Z3 = cyclic_group(3);
  DualObject d = dual_abelian(Z3);
  auto bad = d.irreps;
  bad[1].matrices[1](0, 0) *= 1.5;
  CHECK_CODE(validate_irrep(Z3, bad[1]), ErrorCode::InvariantViolation);
  auto missing = d.irreps;
  missing.pop_back();
  CHECK_CODE(make_dual(Z3, missing), ErrorCode::IncompleteDual);
  // the regular-type reducible sum of two characters
  UnitaryIrrep red{"red", 2, {}};
  for (int g = 0; g < 3; ++g) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = d.irreps[0].matrices[g](0, 0);
    m(1, 1) = d.irreps[1].matrices[g](0, 0);
    red.matrices.push_back(m);
  }
  CHECK_CODE(validate_irrep(Z3, red), ErrorCode::NotIrreducible);
}

TEST_CASE("Fourier inversion and Plancherel") {
  Rng rng(2);
  for (const auto& name : catalog_names()) {
    const DualObject d = irreps_catalog(name);
    const int n = d.group.order();
    const CVector f = rng.complex_vector(n);
    const auto fh = fourier(f, d);
    CHECK(max_abs(inverse_fourier(fh, d) - f) < 1e-12 * std::max(1.0, max_abs(f)));
    double rhs = 0.0;
    for (int s = 0; s < d.size(); ++s) rhs += d.plancherel_weight[s] * hs_norm2(fh[s]);
    CHECK(std::abs(rhs - f.squaredNorm()) < 1e-11 * f.squaredNorm());
  }
}

TEST_CASE("Fourier coefficients are basis covariant") {
  Rng rng(8);
  const DualObject d = irreps_catalog("dihedral:4");
  std::vector<CMatrix> us;
  for (const auto& s : d.irreps) us.push_back(rng.unitary(s.dim));
  const DualObject c = conjugate_dual(d, us);
  validate_dual(c);
  const CVector f = rng.complex_vector(8);
  const auto a = fourier(f, d), b = fourier(f, c);
  for (int s = 0; s < d.size(); ++s) CHECK((b[s] - us[s] * a[s] * us[s].adjoint()).norm() < 1e-12);
  CHECK(max_abs(inverse_fourier(b, c) - f) < 1e-12 * max_abs(f));
}

TEST_CASE("abelian Poisson against explicit characters") {
  Rng rng(4);
  for (int n : {2, 4, 6, 8, 9, 12}) {
    const FiniteGroup G = cyclic_group(n);
    for (int step = 1; step <= n; ++step) {
      if (n % step) continue;
      std::vector<int> H;
      for (int h = 0; h < n; h += step) H.push_back(h);
      for (int i = 0; i < 5; ++i) {
        const CVector f = rng.complex_vector(n);
        const PoissonReport p = poisson_abelian_check(f, G, H);
        const auto ref = oracle::cyclic_poisson(std::vector<cplx>(f.data(), f.data() + n), H);
        CHECK(p.residual < 1e-12);
        CHECK(std::abs(p.rhs - ref.rhs) < 1e-12);
      }
    }
  }
  CHECK_CODE(poisson_abelian_check(CVector::Ones(6), symmetric_group(3), std::vector<int>{0}), ErrorCode::NotAbelian);
  CHECK_CODE(poisson_abelian_check(CVector::Ones(4), cyclic_group(4), std::vector<int>{0, 1}), ErrorCode::NotSubgroup);
}

TEST_CASE("compact Poisson on S3 with a transposition subgroup") {
  const FiniteGroup S3 = symmetric_group(3);
  const std::vector<int> H{0, 2};
  for (const auto& d : {irreps(S3, "", 0), irreps(S3, "symmetric:3"), irreps(S3, "mackey:0,3,4", 5)}) {
    for (int g : H) {
      CVector f = CVector::Zero(6);
      f[g] = 1.0;
      const PoissonReport p = poisson_compact_check(f, d, H);
      CHECK(std::abs(p.lhs - 0.5) < 1e-12);
      CHECK(std::abs(p.rhs - 0.5) < 1e-12);
    }
    const ReciprocalSpace rs = reciprocal_space(d, H);
    // trivial and the 2-d irrep contain H-fixed vectors, the sign does not
    CHECK(rs.members.size() == 2);
  }
  Rng rng(6);
  const DualObject d = irreps(S3, "", 1);
  for (int i = 0; i < 50; ++i) CHECK(poisson_compact_check(rng.complex_vector(6), d, H).residual < 1e-12);
}

TEST_CASE("compact Poisson reduces to the abelian one") {
  Rng rng(7);
  const FiniteGroup G = cyclic_group(6);
  const DualObject d = dual_abelian(G);
  const std::vector<int> H{0, 2, 4};
  for (int i = 0; i < 10; ++i) {
    const CVector f = rng.complex_vector(6);
    CHECK(std::abs(poisson_compact_check(f, d, H).rhs - poisson_abelian_check(f, G, H).rhs) < 1e-13);
  }
}

TEST_CASE("quotient Fourier transform") {
  Rng rng(12);
  const DualObject d = irreps_catalog("dihedral:4");
  const std::vector<int> H{0, 4};
  const auto cosets = left_cosets(d.group, H);
  CHECK(cosets.size() == 4);
  CVector fc = rng.complex_vector(4);
  CHECK(quotient_fourier_check_cosets(fc, d, H).residual() < 1e-11);
  CVector f(8);
  for (std::size_t c = 0; c < cosets.size(); ++c)
    for (int g : cosets[c]) f[g] = fc[static_cast<Eigen::Index>(c)];
  CHECK(quotient_fourier_check(f, d, H).residual() < 1e-11);
  f[cosets[0][0]] += 1.0;
  CHECK_CODE(quotient_fourier_check(f, d, H), ErrorCode::NotCosetFunction);
}
