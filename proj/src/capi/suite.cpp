#include "suite.hpp"

#include <algorithm>
#include <cmath>

#include "json_io.hpp"
#include "oracles.hpp"
#include "zakspace/bundled.hpp"
#include "zakspace/parallel.hpp"
#include "zakspace/radiation.hpp"
#include "zakspace/random.hpp"

namespace zakspace::suite {

using io::Json;

namespace {

struct Collector {
  int criterion;
  std::vector<Check> out;

  void add(const std::string& name, double residual, double tol) {
    const CheckReport r = make_report(name, residual, tol);
    out.push_back(Check{criterion, name, r.residual, r.tolerance, r.pass});
  }
  // 0 when the call throws `code`, 1 otherwise.
  template <class Fn>
  void expect_error(const std::string& name, ErrorCode code, Fn&& fn) {
    double r = 1.0;
    try {
      fn();
    } catch (const Error& e) {
      if (e.code() == code) r = 0.0;
    }
    add(name, r, 0.0);
  }
};

std::uint64_t sub_seed(std::uint64_t seed, int criterion, int index) {
  return seed * 1000003ull + static_cast<std::uint64_t>(criterion) * 7919ull + static_cast<std::uint64_t>(index);
}

double l1(const CVector& f) { return f.cwiseAbs().sum(); }
double linf(const CVector& f) { return f.size() ? f.cwiseAbs().maxCoeff() : 0.0; }

std::vector<oracle::cplx> plain(const CVector& f) { return {f.data(), f.data() + f.size()}; }

struct Bundled {
  std::string name;
  WeilSpace space;
  DualObject dual;
};

std::vector<Bundled> bundled_spaces(std::uint64_t seed) {
  std::vector<Bundled> out;
  for (const auto& name : bundled_action_names()) {
    WeilSpace s = WeilSpace::build(bundled_action(name));
    DualObject d = irreps(s.action.group(), bundled_dual_hint(name), seed);
    out.push_back(Bundled{name, std::move(s), std::move(d)});
  }
  return out;
}

// --- 1: Weil and Mackey-Bruhat -------------------------------------------

void criterion_weil(Collector& c, std::uint64_t seed, int jobs) {
  const auto names = bundled_action_names();
  const std::size_t n = names.size();
  struct Row {
    double weil = 0, mb = 0, oracle = 0, measure = 0, cocycle = 0;
  };
  std::vector<Row> rows(n);
  parallel_for(n, jobs, [&](std::size_t a) {
    const WeilSpace s = WeilSpace::build(bundled_action(names[a]));
    Rng rng(sub_seed(seed, 1, static_cast<int>(a)));
    Row& r = rows[a];
    for (int i = 0; i < 20; ++i) {
      const CVector f = rng.complex_vector(s.action.points());
      const double scale = l1(f);
      r.weil = std::max(r.weil, verify_weil(s.action, s.cocycle, s.orbits, f).residual / scale);
      r.mb = std::max(r.mb, verify_mackey_bruhat(s.action, s.cocycle, s.orbits, f).residual / scale);
      // right-hand sides against the closed forms
      const CVector mean = orbital_mean(s.action, f);
      const CVector mean_q = orbital_mean(s.action, f, &s.cocycle);
      cplx rhs = 0.0, rhs_q = 0.0;
      for (int o = 0; o < s.orbits.num_orbits(); ++o) {
        rhs += s.orbits.orbit_measure[o] * mean[o];
        rhs_q += s.orbits.orbit_measure[o] * mean_q[o];
      }
      const auto fp = plain(f);
      r.oracle = std::max({r.oracle, std::abs(rhs - oracle::weil_value(s.action.perm(), s.action.weights(), fp)) / scale,
                           std::abs(rhs_q - oracle::mackey_bruhat_value(s.action.weights(), fp)) / scale});
    }
    const auto ref = oracle::orbit_measures(s.action.perm(), s.action.weights());
    for (int o = 0; o < s.orbits.num_orbits(); ++o)
      r.measure = std::max(r.measure, std::abs(ref[o] - s.orbits.orbit_measure[o]));
    r.cocycle = std::max(cocycle_identity_residual(s.action, s.cocycle), q_equation_residual(s.action, s.cocycle));
  });
  double measure = 0, cocycle = 0, orc = 0;
  for (std::size_t a = 0; a < n; ++a) {
    c.add("weil/" + names[a], rows[a].weil, kExactTol);
    c.add("mackey_bruhat/" + names[a], rows[a].mb, kExactTol);
    measure = std::max(measure, rows[a].measure);
    cocycle = std::max(cocycle, rows[a].cocycle);
    orc = std::max(orc, rows[a].oracle);
  }
  c.add("weil_sides_vs_oracle", orc, kExactTol);
  c.add("orbit_measures_vs_oracle", measure, kExactTol);
  c.add("cocycle_and_q_equation", cocycle, kExactTol);
}

// --- 2: Poisson summation ------------------------------------------------

void criterion_poisson(Collector& c, std::uint64_t seed) {
  struct Case {
    int n;
    std::vector<int> H;
    std::string tag;
  };
  const std::vector<Case> cases{{4, {0, 2}, "Z4_H2"}, {6, {0, 3}, "Z6_H2"}, {6, {0, 2, 4}, "Z6_H3"}};
  int idx = 0;
  for (const auto& cs : cases) {
    const FiniteGroup G = cyclic_group(cs.n);
    Rng rng(sub_seed(seed, 2, idx++));
    std::vector<CVector> fs;
    for (int h : cs.H) {
      CVector f = CVector::Zero(cs.n);
      f[h] = 1.0;
      fs.push_back(f);
    }
    for (int i = 0; i < 50; ++i) fs.push_back(rng.complex_vector(cs.n));
    double lib = 0, orc = 0, compact = 0;
    const DualObject dual = dual_abelian(G);
    for (const auto& f : fs) {
      const PoissonReport p = poisson_abelian_check(f, G, cs.H);
      lib = std::max(lib, p.residual);
      const auto ref = oracle::cyclic_poisson(plain(f), cs.H);
      orc = std::max({orc, std::abs(ref.lhs - p.lhs), std::abs(ref.rhs - p.rhs)});
      compact = std::max(compact, std::abs(poisson_compact_check(f, dual, cs.H).rhs - p.rhs));
    }
    c.add("poisson_abelian/" + cs.tag, lib, kExactTol);
    c.add("poisson_abelian_vs_oracle/" + cs.tag, orc, kExactTol);
    c.add("poisson_compact_matches_abelian/" + cs.tag, compact, kExactTol);
  }

  // S3 with H = <(12)>: lexicographic index 2 is the transposition (0 1).
  const FiniteGroup S3 = symmetric_group(3);
  const DualObject dual = irreps(S3, "", seed);
  const std::vector<int> H{0, 2};
  for (int g : H) {
    CVector f = CVector::Zero(6);
    f[g] = 1.0;
    const PoissonReport p = poisson_compact_check(f, dual, H);
    const std::string tag = g == 0 ? "delta_e" : "delta_12";
    c.add("poisson_s3/" + tag + "_lhs_half", std::abs(p.lhs - 0.5), kExactTol);
    c.add("poisson_s3/" + tag + "_rhs_half", std::abs(p.rhs - 0.5), kExactTol);
  }
  Rng rng(sub_seed(seed, 2, 100));
  std::vector<CMatrix> us;
  for (const auto& s : dual.irreps) us.push_back(rng.unitary(s.dim));
  const DualObject rotated = conjugate_dual(dual, us);
  double rnd = 0, basis = 0, quotient = 0;
  const auto cosets = left_cosets(S3, H);
  for (int i = 0; i < 50; ++i) {
    const CVector f = rng.complex_vector(6);
    const PoissonReport p = poisson_compact_check(f, dual, H);
    rnd = std::max(rnd, p.residual);
    basis = std::max(basis, std::abs(poisson_compact_check(f, rotated, H).rhs - p.rhs));
    CVector fc(6);
    for (const auto& cs : cosets) {
      const cplx v = rng.complex_normal();
      for (int g : cs) fc[g] = v;
    }
    quotient = std::max(quotient, quotient_fourier_check(fc, dual, H).residual() / std::max(1.0, linf(fc)));
  }
  c.add("poisson_s3/random", rnd, kExactTol);
  c.add("poisson_s3/basis_independence", basis, kExactTol);
  c.add("quotient_fourier_s3", quotient, 1e-11);
}

// --- 3: inversion and norm identity -------------------------------------

void criterion_zak_inversion(Collector& c, std::uint64_t seed, int jobs) {
  const auto spaces = bundled_spaces(seed);
  const std::size_t n = spaces.size();
  struct Row {
    double rt = 0, unit = 0, oracle = 0, character = 0, basis = 0;
  };
  std::vector<Row> rows(n);
  parallel_for(n, jobs, [&](std::size_t a) {
    const auto& b = spaces[a];
    Rng rng(sub_seed(seed, 3, static_cast<int>(a)));
    std::vector<CMatrix> us;
    for (const auto& s : b.dual.irreps) us.push_back(rng.unitary(s.dim));
    const DualObject rotated = conjugate_dual(b.dual, us);
    std::vector<Eigen::MatrixXcd> sig;
    Row& r = rows[a];
    for (int i = 0; i < 100; ++i) {
      const CVector f = rng.complex_vector(b.space.action.points());
      const ZakCoefficients z = zak(b.space, f, b.dual);
      r.rt = std::max(r.rt, (zak_inverse(z, 1e-9) - f).cwiseAbs().maxCoeff() / std::max(1.0, linf(f)));
      const UnitarityReport u = verify_unitarity(z, f);
      r.unit = std::max(r.unit, u.residual / std::max(1.0, u.lhs));
      if (i < 5) {
        for (int s = 0; s < b.dual.size(); ++s) {
          const auto& mats = b.dual.irreps[s].matrices;
          sig.assign(mats.begin(), mats.end());
          for (int o = 0; o < b.space.orbits.num_orbits(); ++o) {
            const auto ref = oracle::zak_sum(b.space.action.perm(), b.space.action.group().table(), sig, plain(f),
                                             b.space.orbits.representatives[o]);
            r.oracle = std::max(r.oracle, (ref - z.at(o, s)).norm() / std::max(1.0, f.norm()));
          }
        }
        r.character = std::max(r.character,
                               character_reconstruction_error(b.space, f, b.dual) / std::max(1.0, linf(f)));
        const UnitarityReport ur = verify_unitarity(zak(b.space, f, rotated), f);
        r.basis = std::max(r.basis, std::abs(ur.rhs - u.rhs) / std::max(1.0, u.lhs));
      }
    }
  });
  double orc = 0, chr = 0, basis = 0;
  for (std::size_t a = 0; a < n; ++a) {
    c.add("zak_round_trip/" + spaces[a].name, rows[a].rt, 1e-11);
    c.add("zak_norm_identity/" + spaces[a].name, rows[a].unit, 1e-10);
    orc = std::max(orc, rows[a].oracle);
    chr = std::max(chr, rows[a].character);
    basis = std::max(basis, rows[a].basis);
  }
  c.add("zak_vs_oracle_sum", orc, kExactTol);
  c.add("zak_character_reconstruction", chr, 1e-11);
  c.add("zak_basis_independence", basis, 1e-10);
  // Z2 on {a, b, c} with c fixed: |G_c| = 2
  const WeilSpace fixed = WeilSpace::build(bundled_action("z2_fixed"));
  const int o = fixed.orbits.representative_index(2);
  c.add("fd_measure_fixed_point_half", o < 0 ? 1.0 : std::abs(fixed.orbits.fd_measure[o] - 0.5), kExactTol);
}

// --- 4: intertwining, equivariance, support -----------------------------

void criterion_equivariance(Collector& c, std::uint64_t seed, int jobs) {
  const auto spaces = bundled_spaces(seed);
  const std::size_t n = spaces.size();
  struct Row {
    double inter = 0, equi = 0, vanish = 0, weak = 0, eigen = 0, heis = 0;
  };
  std::vector<Row> rows(n);
  parallel_for(n, jobs, [&](std::size_t a) {
    const auto& b = spaces[a];
    const GroupAction& act = b.space.action;
    Rng rng(sub_seed(seed, 4, static_cast<int>(a)));
    Row& r = rows[a];
    for (int i = 0; i < 10; ++i) {
      const CVector f = rng.complex_vector(act.points());
      const double fn = std::max(1.0, f.norm());
      const ZakCoefficients z = zak(b.space, f, b.dual);
      r.inter = std::max(r.inter, intertwining_residual(b.space, f, b.dual) / fn);
      for (int x = 0; x < act.points(); ++x)
        for (int s = 0; s < b.dual.size(); ++s)
          r.equi = std::max(r.equi, (zak_direct(act, f, b.dual.irreps[s], x) - extended_from_representative(z, x, s)).norm() / fn);
      const SupportResidual sr = support_residual(z);
      r.vanish = std::max({r.vanish, sr.vanishing / fn, sr.projection / fn});
      const CVector phi = rng.complex_vector(act.points());
      const double pn = std::max(1.0, phi.norm());
      r.weak = std::max(r.weak, weak_inversion_residual(b.space, b.dual, f, phi) / (fn * pn));
      r.eigen = std::max(r.eigen, zak_measure_eigen_residual(b.space, b.dual, phi) / pn);
      if (b.dual.abelian() && i < 3) {
        for (int g = 0; g < act.group().order(); ++g)
          for (int ch = 0; ch < b.dual.size(); ++ch) {
            const ZakCoefficients zx = zak(b.space, heisenberg_apply(act, b.dual, g, ch, f), b.dual);
            const cplx w = std::conj(b.dual.irreps[ch].character(g));
            for (int o = 0; o < b.space.orbits.num_orbits(); ++o)
              for (int s = 0; s < b.dual.size(); ++s)
                r.heis = std::max(r.heis, (zx.at(o, s) - w * b.dual.irreps[s].matrices[g] * z.at(o, s)).norm() / fn);
          }
      }
    }
  });
  double weak = 0, eigen = 0, heis = 0;
  for (std::size_t a = 0; a < n; ++a) {
    c.add("intertwining/" + spaces[a].name, rows[a].inter, kExactTol);
    c.add("equivariance/" + spaces[a].name, rows[a].equi, kExactTol);
    c.add("support_vanishing/" + spaces[a].name, rows[a].vanish, kExactTol);
    weak = std::max(weak, rows[a].weak);
    eigen = std::max(eigen, rows[a].eigen);
    heis = std::max(heis, rows[a].heis);
  }
  c.add("zak_measure_weak_inversion", weak, 1e-11);
  c.add("zak_measure_eigen_law", eigen, kExactTol);
  c.add("heisenberg_intertwining", heis, kExactTol);
  const WeilSpace s3 = WeilSpace::build(bundled_action("s3_left"));
  c.expect_error("dual_group_mismatch_rejected", ErrorCode::DualGroupMismatch,
                 [&] { (void)zak(s3, CVector::Ones(6), dual_abelian(cyclic_group(6))); });
}

// --- 5: classic Zak transform -------------------------------------------

void criterion_lattice(Collector& c, std::uint64_t seed, int jobs) {
  struct Case {
    std::vector<int> grid, cells;
    std::string tag;
  };
  const std::vector<Case> cases{{{64}, {1}, "1d_N64"}, {{64}, {4}, "1d_M4_N16"}, {{16, 16}, {1, 1}, "2d_16x16"},
                                {{16, 16}, {2, 4}, "2d_16x16_cells2x4"}};
  int idx = 0;
  for (const auto& cs : cases) {
    const LatticeShape shape = lattice_shape(cs.grid, cs.cells);
    Rng rng(sub_seed(seed, 5, idx++));
    std::vector<cplx> f;
    for (long i = 0; i < shape.grid_size(); ++i) f.push_back(rng.complex_normal());
    const LatticeZakGrid z = classic_zak(f, shape, jobs);
    double scale = 1.0;
    for (const auto& v : f) scale = std::max(scale, std::abs(v));
    const int d = shape.dims();
    double direct = 0, quasi = 0, shifted_k = 0;
    for (long x0 = 0; x0 < shape.cell_count(); ++x0) {
      std::vector<int> xv(d);
      long r = x0;
      for (int a = d - 1; a >= 0; --a) {
        xv[a] = static_cast<int>(r % shape.cells[a]);
        r /= shape.cells[a];
      }
      for (long j = 0; j < shape.period_count(); ++j) {
        const auto k = z.k_value(j);
        direct = std::max(direct, std::abs(oracle::classic_zak_direct(f, shape.cells, shape.periods, xv, k) - z.at(x0, j)));
        std::vector<long> jv(d);
        long rj = j;
        for (int a = d - 1; a >= 0; --a) {
          jv[a] = rj % shape.periods[a];
          rj /= shape.periods[a];
        }
        for (int a = 0; a < d; ++a) {
          auto js = jv;
          js[a] -= shape.periods[a];
          quasi = std::max(quasi, std::abs(z.at(xv, js) - z.at(x0, j)));
        }
        if (x0 == 0 && j < 8) {
          auto k2 = k;
          k2[0] += kTwoPi;
          shifted_k = std::max(shifted_k, std::abs(oracle::classic_zak_direct(f, shape.cells, shape.periods, xv, k2) -
                                                   z.at(x0, j)));
        }
      }
    }
    c.add("fft_vs_direct/" + cs.tag, direct / scale, 1e-10);
    c.add("quasi_periodicity_exact/" + cs.tag, quasi, 0.0);
    c.add("direct_sum_periodic_in_k/" + cs.tag, shifted_k / scale, 1e-10);
    const auto back = classic_zak_inverse(z, jobs);
    double rt = 0;
    for (std::size_t i = 0; i < f.size(); ++i) rt = std::max(rt, std::abs(back[i] - f[i]));
    c.add("lattice_round_trip/" + cs.tag, rt / scale, 1e-11);
    const auto u = lattice_unitarity(z, f);
    c.add("lattice_parseval/" + cs.tag, u.residual / std::max(1.0, u.lhs), 1e-10);
  }
  c.expect_error("lattice_shape_mismatch_rejected", ErrorCode::ShapeMismatch,
                 [] { (void)lattice_shape({10}, {3}); });
}

// --- 6: Bloch bands and block diagonalization ---------------------------

CMatrix flag_operator(const FiniteGroup& G, Rng& rng) {
  // right convolution commutes with the left translation action
  const int n = G.order();
  std::vector<cplx> coef(n);
  for (auto& v : coef) v = rng.complex_normal();
  std::vector<cplx> herm(n);
  for (int h = 0; h < n; ++h) herm[h] = 0.5 * (coef[h] + std::conj(coef[G.inv(h)]));
  CMatrix H = CMatrix::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h) H(x, G.mul(x, h)) += herm[h];
  return H;
}

void criterion_bloch(Collector& c, std::uint64_t seed, int jobs) {
  ChainModel ring{1.0, 1, 6, {0.25}};
  const BandStructure b6 = band_structure(ring, jobs);
  const auto closed = oracle::circulant_band(ring.t, ring.onsite[0], ring.periods);
  const auto dense = oracle::ring_spectrum(ring.t, ring.onsite, ring.periods);
  const auto all6 = b6.all_energies();
  double e_closed = 0, e_dense = 0;
  for (std::size_t i = 0; i < all6.size(); ++i) {
    e_closed = std::max(e_closed, std::abs(all6[i] - closed[i]));
    e_dense = std::max(e_dense, std::abs(all6[i] - dense[i]));
  }
  c.add("c6_band_vs_closed_form", e_closed, 1e-10);
  c.add("c6_band_vs_dense_ring", e_dense, 1e-10);

  const double delta = 0.5;
  ChainModel dimer{1.0, 2, 8, {delta, -delta}};
  const BandStructure bd = band_structure(dimer, jobs);
  const auto alld = bd.all_energies();
  const auto refd = oracle::ring_spectrum(dimer.t, dimer.onsite, dimer.periods);
  double e_union = 0;
  for (std::size_t i = 0; i < alld.size(); ++i) e_union = std::max(e_union, std::abs(alld[i] - refd[i]));
  c.add("dimer_band_union_vs_ring", e_union, 1e-9);
  double lo = 1e300, hi = -1e300;
  for (int j = 0; j < dimer.periods; ++j) {
    hi = std::max(hi, bd.energies[j][0]);
    lo = std::min(lo, bd.energies[j][1]);
  }
  c.add("dimer_gap_equals_2_delta", std::abs((lo - hi) - 2 * delta), 1e-9);

  // C6 ring as an invariant operator of the rotation action
  const WeilSpace c6 = WeilSpace::build(bundled_action("c6_ring"));
  const CMatrix h6 = chain_hamiltonian(ring);
  const DualObject z6 = dual_abelian(c6.action.group());
  const BlockDiagonalization bd6 = block_diagonalize(c6, check_invariance(c6.action, h6), z6, jobs);
  c.add("c6_off_block_mass", bd6.off_block_mass / std::max(1.0, bd6.h_norm), 1e-9);
  c.add("c6_spectrum_conservation", spectrum_conservation_residual(bd6, h6), 1e-9);
  Rng rng(sub_seed(seed, 6, 0));
  std::vector<CVector> tests;
  for (int i = 0; i < 4; ++i) tests.push_back(rng.complex_vector(6));
  c.add("c6_block_intertwining", block_intertwining_residual(bd6, h6, tests), 1e-9);
  const BlochField field = bloch_fields(c6, tests[0], z6);
  c.add("c6_bloch_reconstruction", bloch_reconstruction_error(field, tests[0]), 1e-11);

  // D3 acting freely on its 6 flags
  const WeilSpace d3 = WeilSpace::build(bundled_action("d3_flags"));
  const DualObject dd3 = irreps(d3.action.group(), bundled_dual_hint("d3_flags"), seed);
  const CMatrix hf = flag_operator(d3.action.group(), rng);
  const BlockDiagonalization bf = block_diagonalize(d3, check_invariance(d3.action, hf), dd3, jobs);
  std::vector<int> sizes;
  for (const auto& blk : bf.blocks) sizes.push_back(blk.size);
  std::sort(sizes.begin(), sizes.end());
  c.add("d3_block_sizes_1_1_2_2", sizes == std::vector<int>{1, 1, 2, 2} ? 0.0 : 1.0, 0.0);
  c.add("d3_blocks_repeat", block_repetition_residual(bf), 1e-9);
  c.add("d3_off_block_mass", bf.off_block_mass / std::max(1.0, bf.h_norm), 1e-9);
  c.add("d3_spectrum_conservation", spectrum_conservation_residual(bf, hf), 1e-9);
  CMatrix broken = hf;
  broken(0, 1) += 0.3;
  broken(1, 0) += 0.3;
  c.expect_error("non_invariant_operator_rejected", ErrorCode::NotInvariant,
                 [&] { (void)check_invariance(d3.action, broken); });
}

// --- 7: isometry groups --------------------------------------------------

void criterion_euclid(Collector& c, std::uint64_t seed) {
  Rng rng(sub_seed(seed, 7, 0));
  double conj = 0;
  for (int i = 0; i < 200; ++i) {
    const int dim = 2 + i % 2;
    RMatrix a(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int s = 0; s < dim; ++s) a(r, s) = rng.normal();
    Eigen::HouseholderQR<RMatrix> qr(a);
    const RMatrix q = qr.householderQ();
    conj = std::max(conj, conjugation_identity_residual(IsometryElement{q, rng.real_vector(dim, -5, 5)},
                                                        rng.real_vector(dim, -5, 5)));
  }
  c.add("conjugation_identity", conj, kExactTol);

  struct Expect {
    std::string group, kind;
    long index;
  };
  const std::vector<Expect> expect{{"c6", "finite group", 1},  {"d3", "finite group", 6},
                                   {"p2", "translations", 2},  {"pm", "translations", 2},
                                   {"p4", "translations", 4},  {"screw5", "translations", 5},
                                   {"helix", "helical", 1},    {"translation1d", "translations", 1},
                                   {"p4_short", "inconclusive", -1}};
  for (const auto& e : expect) {
    const TypeOneCertificate cert = type_one_certificate(bundled_isometry(e.group));
    const bool ok = cert.kind == e.kind && cert.index == e.index && (e.kind != "helical" || cert.heuristic);
    c.add("certificate/" + e.group, ok ? 0.0 : 1.0, 0.0);
  }
  const auto count = [](const std::string& name) {
    return static_cast<double>(generate(bundled_isometry(name)).elements.size());
  };
  c.add("helix_element_count_vs_oracle", std::abs(count("helix") - oracle::screw_word_count(24, 10, 0.5)), 0.0);
  c.add("screw5_element_count_vs_oracle", std::abs(count("screw5") - oracle::screw_word_count(24, 10, 1.0)), 0.0);
  c.add("translation1d_count_vs_oracle", std::abs(count("translation1d") - oracle::screw_word_count(24, 10, 1.0)), 0.0);
  c.add("c6_closure_finite", generate(bundled_isometry("c6"), true).elements.size() == 6 ? 0.0 : 1.0, 0.0);
  c.expect_error("truncation_exceeded_reported", ErrorCode::TruncationExceeded,
                 [] { (void)generate(bundled_isometry("p4_short"), true); });
}

// --- 8: radiation --------------------------------------------------------

void criterion_radiation(Collector& c, std::uint64_t seed) {
  const RadiationModel rm = bundled_radiation_model();
  const FiniteIsometryAction model = to_finite_action(rm.spec, rm.seeds, {}, rm.seed_weights);
  const DualObject dual = irreps(model.action.group(), "", seed);
  const OrbitDecomposition orb = orbits(model.action);
  const std::vector<double> per_orbit{1.0, 0.6, 1.7};
  ScatteringSetup st;
  for (int x = 0; x < model.action.points(); ++x) st.density.push_back(per_orbit[orb.orbit_id[x]]);
  st.omega = 2.0;
  std::vector<Vec3> pts;
  for (const auto& p : model.points) pts.emplace_back(p[0], p[1], p[2]);

  struct Wave {
    Vec3 k;
    CVec3 n;
  };
  const std::vector<Wave> waves{{Vec3(0, 0, 1.5), CVec3(1, 0, 0)},
                                {Vec3(0.4, -0.2, 0.0), CVec3(cplx(0, 0), cplx(0, 0), cplx(1, 0.5))}};
  int w = 0;
  for (const auto& wave : waves) {
    double rec = 0, route = 0, quad = 0;
    for (const auto& s0 : fibonacci_directions(16)) {
      st.s0 = s0;
      const SymmetryProjection p = symmetry_projected_transform(model, dual, wave.k, wave.n, st);
      const double scale = std::max(1.0, p.expected.norm());
      rec = std::max(rec, p.recovery_residual / scale);
      route = std::max(route, p.route_residual / scale);
      const cplx ph = oracle::quadrature_fourier(pts, model.action.weights(), st.density, st.omega * s0 - wave.k);
      const Eigen::Matrix3d P = Eigen::Matrix3d::Identity() - s0 * s0.transpose();
      quad = std::max(quad, (P.cast<cplx>() * wave.n * ph - p.expected).norm() / scale);
    }
    const std::string tag = "wave" + std::to_string(w++);
    c.add("radiation_recovery/" + tag, rec, 1e-9);
    c.add("radiation_fd_route/" + tag, route, 1e-9);
    c.add("radiation_expected_vs_quadrature/" + tag, quad, 1e-9);
  }
  ScatteringSetup bad = st;
  bad.density[1] += 0.25;
  c.expect_error("non_invariant_density_rejected", ErrorCode::DensityNotInvariant, [&] {
    (void)symmetry_projected_transform(model, dual, waves[0].k, waves[0].n, bad);
  });
  c.expect_error("non_transverse_wave_rejected", ErrorCode::NotTransverse,
                 [&] { (void)plane_wave(Vec3(0, 0, 1), CVec3(0, 0, 1), model.points); });
}

// --- 9: thread-count independence of the numerics -----------------------

double bitwise_gap(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b) {
  double r = a.size() == b.size() ? 0.0 : 1.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    r = std::max(r, a[i] == b[i] ? 0.0 : std::max(1e-300, (a[i] - b[i]).norm()));
  return r;
}

void criterion_determinism(Collector& c, std::uint64_t seed, int jobs) {
  const int many = std::max(jobs, 8);
  Rng rng(sub_seed(seed, 9, 0));
  const WeilSpace s = WeilSpace::build(bundled_action("d4_square"));
  const DualObject d = irreps(s.action.group(), bundled_dual_hint("d4_square"), seed);
  const CVector f = rng.complex_vector(s.action.points());
  c.add("zak_jobs_independent", bitwise_gap(zak(s, f, d, 1).values, zak(s, f, d, many).values), 0.0);

  const LatticeShape shape = lattice_shape({16, 16}, {2, 2});
  std::vector<cplx> samples;
  for (long i = 0; i < shape.grid_size(); ++i) samples.push_back(rng.complex_normal());
  c.add("lattice_jobs_independent",
        classic_zak(samples, shape, 1).values == classic_zak(samples, shape, many).values ? 0.0 : 1.0, 0.0);

  ChainModel dimer{1.0, 2, 16, {0.3, -0.3}};
  c.add("bands_jobs_independent",
        band_structure(dimer, 1).energies == band_structure(dimer, many).energies ? 0.0 : 1.0, 0.0);

  const WeilSpace d3 = WeilSpace::build(bundled_action("d3_flags"));
  const DualObject dd3 = irreps(d3.action.group(), "dihedral:3", seed);
  const CMatrix h = flag_operator(d3.action.group(), rng);
  const auto op = check_invariance(d3.action, h);
  c.add("blocks_jobs_independent",
        block_diagonalize(d3, op, dd3, 1).unitary == block_diagonalize(d3, op, dd3, many).unitary ? 0.0 : 1.0, 0.0);
  c.add("irreps_seed_reproducible",
        bitwise_gap(irreps_regular(symmetric_group(4), seed).irreps[4].matrices,
                    irreps_regular(symmetric_group(4), seed).irreps[4].matrices),
        0.0);
}

}  // namespace

const char* criterion_name(int criterion) {
  switch (criterion) {
    case 1: return "weil_and_mackey_bruhat";
    case 2: return "poisson_summation";
    case 3: return "zak_inversion_and_norm";
    case 4: return "intertwining_and_support";
    case 5: return "classic_zak_fft";
    case 6: return "bloch_bands_and_blocks";
    case 7: return "isometry_certificates";
    case 8: return "radiation_recovery";
    case 9: return "parallel_determinism";
    default: return "unknown";
  }
}

std::vector<Check> run_criterion(int criterion, std::uint64_t seed, int jobs) {
  Collector c{criterion, {}};
  switch (criterion) {
    case 1: criterion_weil(c, seed, jobs); break;
    case 2: criterion_poisson(c, seed); break;
    case 3: criterion_zak_inversion(c, seed, jobs); break;
    case 4: criterion_equivariance(c, seed, jobs); break;
    case 5: criterion_lattice(c, seed, jobs); break;
    case 6: criterion_bloch(c, seed, jobs); break;
    case 7: criterion_euclid(c, seed); break;
    case 8: criterion_radiation(c, seed); break;
    case 9: criterion_determinism(c, seed, jobs); break;
    default: fail(ErrorCode::InvalidArgument, "no criterion " + std::to_string(criterion));
  }
  return c.out;
}

std::string report_json(const std::vector<Check>& checks, std::uint64_t seed) {
  Json j;
  j["suite"] = "all";
  j["seed"] = seed;
  Json list = Json::array();
  Json criteria = Json::array();
  int passed = 0;
  for (int k = 1; k <= kCriteria; ++k) {
    int n = 0, ok = 0;
    for (const auto& ch : checks)
      if (ch.criterion == k) {
        ++n;
        ok += ch.pass;
      }
    if (n) criteria.push_back(Json{{"criterion", k}, {"name", criterion_name(k)}, {"checks", n}, {"pass", ok == n}});
  }
  for (const auto& ch : checks) {
    passed += ch.pass;
    list.push_back(Json{{"criterion", ch.criterion},
                        {"check", ch.name},
                        {"residual", ch.residual},
                        {"tolerance", ch.tolerance},
                        {"pass", ch.pass}});
  }
  j["criteria"] = std::move(criteria);
  j["checks"] = std::move(list);
  j["total"] = checks.size();
  j["passed"] = passed;
  j["pass"] = passed == static_cast<int>(checks.size());
  return io::dump(j);
}

docs::DocResult suite_all(const docs::RunOptions& opts) {
  std::vector<Check> all;
  for (int k = 1; k <= kCriteria; ++k) {
    auto part = run_criterion(k, opts.seed, opts.jobs);
    all.insert(all.end(), part.begin(), part.end());
  }
  bool pass = true;
  for (const auto& ch : all) pass = pass && ch.pass;
  return {report_json(all, opts.seed), pass};
}

}  // namespace zakspace::suite
