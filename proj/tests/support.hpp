#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "zakspace/bundled.hpp"
#include "zakspace/error.hpp"
#include "zakspace/random.hpp"
#include "zakspace/zak.hpp"

namespace zs_test {

using namespace zakspace;

#define CHECK_CODE(expr, code_)                                   \
  do {                                                            \
    ErrorCode got_ = ErrorCode::Ok;                               \
    try {                                                         \
      (void)(expr);                                               \
    } catch (const Error& e_) {                                   \
      got_ = e_.code();                                           \
    }                                                             \
    CHECK_MESSAGE(got_ == (code_), std::string(error_code_name(got_))); \
  } while (0)

inline std::vector<std::string> catalog_names() {
  return {"cyclic:1", "cyclic:2", "cyclic:5", "cyclic:6", "dihedral:3", "dihedral:4", "dihedral:5", "symmetric:3",
          "symmetric:4", "product:cyclic:2xcyclic:3", "product:cyclic:2xdihedral:3"};
}

// G acting on a disjoint union of coset spaces G/H_i, H_i generated by random
// elements, with random positive weights (not necessarily invariant).
inline GroupAction random_action(const FiniteGroup& G, Rng& rng, int pieces, bool invariant_weights = false) {
  const int n = G.order();
  std::vector<std::vector<int>> orbits;  // per piece: coset representatives
  std::vector<std::vector<int>> subgroup_of;
  std::vector<std::vector<int>> perm(n);
  int offset = 0;
  std::vector<double> weights;
  for (int p = 0; p < pieces; ++p) {
    std::vector<int> gens;
    const int k = rng.integer(0, 2);
    for (int i = 0; i < k; ++i) gens.push_back(rng.integer(0, n - 1));
    const std::vector<int> H = generated_subgroup(G, gens);
    std::vector<int> label(n, -1);
    int cosets = 0;
    for (int g = 0; g < n; ++g) {
      if (label[g] >= 0) continue;
      for (int h : H) label[G.mul(g, h)] = cosets;
      ++cosets;
    }
    std::vector<int> rep(cosets);
    for (int g = n - 1; g >= 0; --g) rep[label[g]] = g;
    for (int g = 0; g < n; ++g)
      for (int c = 0; c < cosets; ++c) perm[g].push_back(offset + label[G.mul(g, rep[c])]);
    const double w0 = rng.uniform(0.5, 2.0);
    for (int c = 0; c < cosets; ++c) weights.push_back(invariant_weights ? w0 : rng.uniform(0.5, 2.0));
    offset += cosets;
  }
  return GroupAction::make(G, perm, weights);
}

inline double max_abs(const CVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace zs_test
