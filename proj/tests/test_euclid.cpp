#include "oracles.hpp"
#include "support.hpp"
#include "zakspace/euclid.hpp"

using namespace zs_test;

namespace {

RVector v(std::initializer_list<double> xs) {
  RVector r(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) r[i++] = x;
  return r;
}

IsometryElement random_isometry(Rng& rng, int dim) {
  const RVector axis = rng.real_vector(3).normalized();
  const IsometryElement g = dim == 2 ? rotation2(rng.uniform(-3.0, 3.0), rng.real_vector(2, -5, 5))
                                     : rotation3(axis, rng.uniform(-3.0, 3.0), rng.real_vector(3, -5, 5));
  if (rng.integer(0, 1) == 0) return g;
  // compose with a reflection
  IsometryElement m = IsometryElement::identity(dim);
  m.Q(0, 0) = -1.0;
  return compose(g, m);
}

}  // namespace

TEST_CASE("isometry algebra") {
  Rng rng(1);
  for (int dim : {2, 3})
    for (int i = 0; i < 50; ++i) {
      const IsometryElement a = random_isometry(rng, dim), b = random_isometry(rng, dim);
      const RVector x = rng.real_vector(dim, -3, 3);
      CHECK((act(compose(a, b), x) - act(a, act(b, x))).norm() < 1e-12);
      CHECK(element_distance(compose(a, inverse(a)), IsometryElement::identity(dim)) < 1e-12);
      validate_isometry(a);
    }
  IsometryElement bad = IsometryElement::identity(2);
  bad.Q(0, 1) = 0.1;
  CHECK_CODE(validate_isometry(bad), ErrorCode::InvalidArgument);
  CHECK_CODE(validate_isometry(IsometryElement::identity(4)), ErrorCode::DimensionMismatch);
  CHECK_CODE(compose(IsometryElement::identity(2), IsometryElement::identity(3)), ErrorCode::DimensionMismatch);
}

TEST_CASE("conjugating a translation rotates it") {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const int dim = 2 + i % 2;
    const IsometryElement g = random_isometry(rng, dim);
    CHECK(conjugation_identity_residual(g, rng.real_vector(dim, -4, 4)) < 1e-12);
  }
}

TEST_CASE("screw advance is per full turn") {
  const IsometryElement s = screw(v({0, 0, 1}), kTwoPi / 4, 2.0);
  CHECK(std::abs(s.c[2] - 0.5) < 1e-15);
  const IsometryElement full = compose(compose(s, s), compose(s, s));
  CHECK((full.Q - RMatrix::Identity(3, 3)).norm() < 1e-12);
  CHECK(std::abs(full.c[2] - 2.0) < 1e-12);
}

TEST_CASE("finite closures") {
  const GeneratedGroup c6 = generate(bundled_isometry("c6"), true);
  CHECK(c6.finite);
  CHECK(c6.elements.size() == 6);
  const GeneratedGroup d3 = generate(bundled_isometry("d3"), true);
  CHECK(d3.elements.size() == 6);
  CHECK(element_distance(d3.elements[0], IsometryElement::identity(2)) == 0.0);
}

TEST_CASE("truncated infinite closures") {
  for (const auto& name : {"translation1d", "screw5", "helix"}) {
    CAPTURE(name);
    const IsometryGroupSpec spec = bundled_isometry(name);
    const GeneratedGroup g = generate(spec);
    CHECK_FALSE(g.finite);
    const double advance = spec.generators[0].c.norm();
    CHECK(static_cast<long>(g.elements.size()) ==
          oracle::screw_word_count(spec.truncation.word_length, spec.truncation.radius, advance));
    CHECK_CODE(generate(spec, true), ErrorCode::TruncationExceeded);
  }
}

TEST_CASE("type-one certificates") {
  struct Want {
    const char* name;
    const char* kind;
    long index;
  };
  for (const Want& w : {Want{"c6", "finite group", 1}, Want{"d3", "finite group", 6}, Want{"p2", "translations", 2},
                        Want{"pm", "translations", 2}, Want{"p4", "translations", 4}, Want{"screw5", "translations", 5},
                        Want{"helix", "helical", 1}, Want{"translation1d", "translations", 1},
                        Want{"p4_short", "inconclusive", -1}}) {
    CAPTURE(w.name);
    const TypeOneCertificate c = type_one_certificate(bundled_isometry(w.name));
    CHECK(c.kind == w.kind);
    CHECK(c.index == w.index);
    CHECK(c.subgroup_elements <= c.group_elements);
    if (std::string(w.name) == "helix") CHECK(c.heuristic);
  }
}

TEST_CASE("rational approximation") {
  const auto r = rational_approximation(0.4, 100, 1e-12);
  REQUIRE(r);
  CHECK(r->first == 2);
  CHECK(r->second == 5);
  CHECK_FALSE(rational_approximation((std::sqrt(5.0) - 1.0) / 2.0, 50, 1e-12));
}

TEST_CASE("finite quotient actions") {
  const FiniteIsometryAction c6 = to_finite_action(bundled_isometry("c6"), {v({1.0, 0.2}), v({0.0, 0.0})});
  CHECK(c6.action.group().order() == 6);
  CHECK(c6.action.points() == 7);
  CHECK(orbits(c6.action).num_orbits() == 2);
  const FiniteIsometryAction p2 =
      to_finite_action(bundled_isometry("p2"), {v({0.2, 0.3})}, {v({1.0, 0.0}), v({0.0, 1.0})});
  CHECK(p2.action.group().order() == 2);
  CHECK(p2.action.points() == 2);
  // a half-period point is fixed by the rotation modulo the lattice
  const FiniteIsometryAction half =
      to_finite_action(bundled_isometry("p2"), {v({0.5, 0.0})}, {v({1.0, 0.0}), v({0.0, 1.0})});
  CHECK(half.action.points() == 1);
  CHECK_CODE(to_finite_action(bundled_isometry("p4"), {v({0.2, 0.3})}, {v({1.0, 0.0}), v({0.0, 2.0})}),
             ErrorCode::NotClosable);
  CHECK_CODE(to_finite_action(bundled_isometry("c6"), {}), ErrorCode::EmptySet);
  CHECK_CODE(to_finite_action(bundled_isometry("c6"), {v({1.0, 0.0, 0.0})}), ErrorCode::DimensionMismatch);
}

TEST_CASE("generator set validation") {
  IsometryGroupSpec s = bundled_isometry("c6");
  s.truncation.word_length = 0;
  CHECK_CODE(validate_spec(s), ErrorCode::InvalidArgument);
  s = bundled_isometry("c6");
  s.generators.clear();
  CHECK_CODE(validate_spec(s), ErrorCode::EmptySet);
  s = bundled_isometry("c6");
  s.dim = 3;
  CHECK_CODE(validate_spec(s), ErrorCode::DimensionMismatch);
  CHECK_CODE(bundled_isometry("p6"), ErrorCode::InvalidArgument);
}
