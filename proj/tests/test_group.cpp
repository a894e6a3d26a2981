#include "oracles.hpp"
#include "support.hpp"

using namespace zs_test;

TEST_CASE("table validation names the failure") {
  CHECK_CODE(FiniteGroup::from_table({{0, 1}, {1}}), ErrorCode::ShapeMismatch);
  CHECK_CODE(FiniteGroup::from_table({{0, 1}, {1, 2}}), ErrorCode::OutOfRange);
  CHECK_CODE(FiniteGroup::from_table({{1, 0}, {1, 0}}), ErrorCode::NoIdentity);
  CHECK_CODE(FiniteGroup::from_table({{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}), ErrorCode::NoInverse);
  CHECK_CODE(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), ErrorCode::NotAssociative);
  CHECK_CODE(FiniteGroup::from_table({}), ErrorCode::ShapeMismatch);
}

TEST_CASE("catalog groups") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const FiniteGroup G = catalog_group(name);
    // conjugacy classes against the commuting-pair count
    CHECK(static_cast<int>(G.conjugacy_classes().size()) == oracle::conjugacy_class_count(G.table()));
    for (int g = 0; g < G.order(); ++g) {
      CHECK(G.mul(g, G.inv(g)) == G.identity());
      CHECK(G.order() % G.element_order(g) == 0);
    }
  }
  CHECK(cyclic_group(7).is_abelian());
  CHECK_FALSE(dihedral_group(3).is_abelian());
  CHECK(symmetric_group(4).order() == 24);
  CHECK(dihedral_group(4).conjugacy_classes().size() == 5);
}

TEST_CASE("dihedral element layout") {
  // index f*n + k stands for r^k s^f; s r s = r^-1
  const int n = 5;
  const FiniteGroup D = dihedral_group(n);
  const int r = 1, s = n;
  CHECK(D.mul(D.mul(s, r), s) == D.inv(r));
  CHECK(D.element_order(r) == n);
  CHECK(D.element_order(s) == 2);
}

TEST_CASE("symmetric group multiplication composes permutations") {
  const auto perms = symmetric_group_permutations(3);
  const FiniteGroup S = symmetric_group(3);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      std::vector<int> pq(3);
      for (int i = 0; i < 3; ++i) pq[i] = perms[p][perms[q][i]];
      CHECK(perms[S.mul(p, q)] == pq);
    }
  CHECK(same_group_table(S, group_from_permutations(perms)));
}

TEST_CASE("subgroups and normality") {
  const FiniteGroup S = symmetric_group(3);
  const std::vector<int> A3{0, 3, 4};
  const std::vector<int> T{0, 2};
  CHECK(S.is_subgroup(A3));
  CHECK(S.is_normal(A3));
  CHECK(S.is_subgroup(T));
  CHECK_FALSE(S.is_normal(T));
  CHECK_CODE(S.check_subgroup(std::vector<int>{0, 1, 2}), ErrorCode::NotSubgroup);
  CHECK_CODE(S.check_subgroup(std::vector<int>{}), ErrorCode::NotSubgroup);
  const std::vector<int> gen{3};
  auto sub = generated_subgroup(S, gen);
  std::sort(sub.begin(), sub.end());
  CHECK(sub == A3);
}

TEST_CASE("direct product layout") {
  const FiniteGroup A = cyclic_group(2), B = dihedral_group(3);
  const FiniteGroup P = direct_product(A, B);
  CHECK(P.order() == 12);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 6; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 6; ++b2)
          CHECK(P.mul(a1 * 6 + b1, a2 * 6 + b2) == A.mul(a1, a2) * 6 + B.mul(b1, b2));
}
