#include "documents.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json_io.hpp"
#include "oracles.hpp"
#include "zakspace/bundled.hpp"
#include "zakspace/radiation.hpp"
#include "zakspace/random.hpp"

namespace zakspace::docs {

using io::Json;

namespace {

double tol_or(const RunOptions& o, double fallback) { return o.tol > 0 ? o.tol : fallback; }

struct Checks {
  Json list = Json::array();
  bool pass = true;

  void add(const std::string& name, double residual, double tol) {
    const CheckReport r = make_report(name, residual, tol);
    pass = pass && r.pass;
    list.push_back(io::to_json(r));
  }
};

DocResult report(Json j, const Checks& c) {
  j["checks"] = c.list;
  j["pass"] = c.pass;
  return {io::dump(j), c.pass};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
  return buf;
}

double max_abs_diff(const CVector& a, const CVector& b) {
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

// --- finite-action Zak configs ------------------------------------------

struct ZakContext {
  WeilSpace space;
  DualObject dual;
};

ZakContext zak_context(const Json& cfg, const RunOptions& opts) {
  GroupAction action = io::action_from_json(io::member(cfg, "action", ""), "/action");
  std::string hint;
  if (cfg.at("action").is_string()) hint = bundled_dual_hint(cfg.at("action").get<std::string>().substr(8));
  ZakContext ctx{WeilSpace::build(std::move(action)), {}};
  if (cfg.contains("dual") && cfg.at("dual").is_object()) {
    ctx.dual = io::dual_from_json(cfg.at("dual"), ctx.space.action.group(), "/dual");
  } else {
    if (cfg.contains("dual")) hint = io::as_string(cfg.at("dual"), "/dual");
    ctx.dual = irreps(ctx.space.action.group(), hint, opts.seed);
  }
  check_dual_matches(ctx.space.action, ctx.dual);
  return ctx;
}

std::vector<CVector> test_functions(const Json& cfg, int points, int default_count, const RunOptions& opts) {
  if (cfg.contains("function")) {
    CVector f = io::as_complex_vector(cfg.at("function"), "/function");
    if (f.size() != points)
      throw io::DocumentError(ErrorCode::SizeMismatch, "/function: expected " + std::to_string(points) + " values");
    return {f};
  }
  const int count = cfg.contains("tests") ? io::as_int(cfg.at("tests"), "/tests") : default_count;
  if (count < 1) io::schema_fail("/tests", "must be positive");
  Rng rng(opts.seed);
  std::vector<CVector> out;
  for (int i = 0; i < count; ++i) out.push_back(rng.complex_vector(points));
  return out;
}

// Largest || Z f(x) - Z f(x0) sigma(g) || over all points and irreps.
double equivariance_residual(const ZakCoefficients& z, const CVector& f) {
  double r = 0.0;
  for (int x = 0; x < z.space.action.points(); ++x)
    for (int s = 0; s < z.dual.size(); ++s)
      r = std::max(r, (zak_direct(z.space.action, f, z.dual.irreps[s], x) -
                       extended_from_representative(z, x, s))
                          .norm());
  return r;
}

// Z[xi f](x0, sigma) = conj(chi(g)) sigma(g) Z f(x0, sigma) for abelian duals.
double heisenberg_residual(const ZakCoefficients& z, const CVector& f, int jobs) {
  double r = 0.0;
  const int G = z.space.action.group().order();
  for (int g = 0; g < G; ++g)
    for (int c = 0; c < z.dual.size(); ++c) {
      const CVector xf = heisenberg_apply(z.space.action, z.dual, g, c, f);
      const ZakCoefficients zx = zak(z.space, xf, z.dual, jobs);
      const cplx chi = std::conj(z.dual.irreps[c].character(g));
      for (int o = 0; o < z.space.orbits.num_orbits(); ++o)
        for (int s = 0; s < z.dual.size(); ++s)
          r = std::max(r, (zx.at(o, s) - chi * z.dual.irreps[s].matrices[g] * z.at(o, s)).norm());
    }
  return r;
}

Json function_json(const CVector& f) {
  Json j;
  j["kind"] = "function";
  j["values"] = io::to_json(f);
  return j;
}

// --- lattice configs ------------------------------------------------------

struct LatticeInput {
  LatticeShape shape;
  std::vector<cplx> samples;
};

LatticeInput lattice_input(const Json& cfg, const RunOptions& opts) {
  const Json& lat = cfg.at("lattice");
  io::check_keys(lat, "/lattice", {"grid", "cells"});
  const auto grid = io::as_int_vector(lat.at("grid"), "/lattice/grid");
  const auto cells = io::as_int_vector(lat.at("cells"), "/lattice/cells");
  LatticeInput in{lattice_shape(grid, cells), {}};
  const long n = in.shape.grid_size();
  if (cfg.contains("samples")) {
    const CVector v = io::as_complex_vector(cfg.at("samples"), "/samples");
    if (v.size() != n) throw io::DocumentError(ErrorCode::SizeMismatch, "/samples: expected " + std::to_string(n));
    in.samples.assign(v.data(), v.data() + v.size());
  } else {
    Rng rng(opts.seed);
    for (long i = 0; i < n; ++i) in.samples.push_back(rng.complex_normal());
  }
  return in;
}

void lattice_checks(const LatticeInput& in, const LatticeZakGrid& z, const RunOptions& opts, Checks& c) {
  const auto back = classic_zak_inverse(z, opts.jobs);
  double rt = 0.0, scale = 1.0;
  for (std::size_t i = 0; i < back.size(); ++i) {
    rt = std::max(rt, std::abs(back[i] - in.samples[i]));
    scale = std::max(scale, std::abs(in.samples[i]));
  }
  c.add("round_trip", rt / scale, tol_or(opts, 1e-11));
  const auto u = lattice_unitarity(z, in.samples);
  c.add("parseval", u.residual / std::max(1.0, u.lhs), tol_or(opts, 1e-10));

  // direct summation at every (x0, k) for small grids, at a strided subset otherwise
  const long nc = in.shape.cell_count(), np = in.shape.period_count();
  const long total = nc * np;
  const long stride = std::max<long>(1, total / 4096);
  const int d = in.shape.dims();
  double direct = 0.0, quasi = 0.0;
  for (long idx = 0; idx < total; idx += stride) {
    const long x0 = idx / np, j = idx % np;
    std::vector<int> xv(d);
    long r = x0;
    for (int a = d - 1; a >= 0; --a) {
      xv[a] = static_cast<int>(r % in.shape.cells[a]);
      r /= in.shape.cells[a];
    }
    const cplx ref = oracle::classic_zak_direct(in.samples, in.shape.cells, in.shape.periods, xv, z.k_value(j));
    direct = std::max(direct, std::abs(ref - z.at(x0, j)));
    // k -> k + 2 pi e_a: the stored value is exactly periodic in the sample index
    std::vector<long> jv(d);
    long rj = j;
    for (int a = d - 1; a >= 0; --a) {
      jv[a] = rj % in.shape.periods[a];
      rj /= in.shape.periods[a];
    }
    for (int a = 0; a < d; ++a) {
      auto shifted = jv;
      shifted[a] += in.shape.periods[a];
      quasi = std::max(quasi, std::abs(z.at(xv, shifted) - z.at(xv, jv)));
    }
  }
  c.add("fft_vs_direct", direct / scale, tol_or(opts, 1e-10));
  c.add("quasi_periodicity", quasi, 0.0);
}

std::string lattice_output(const LatticeZakGrid& z, bool binary) {
  return binary ? io::lattice_to_binary(z) : io::dump(io::lattice_to_json(z));
}

// --- radiation configs ----------------------------------------------------

struct DiffractSetup {
  FiniteIsometryAction model;
  DualObject dual;
  Vec3 k;
  CVec3 n;
  ScatteringSetup setup;
  std::vector<Vec3> directions;
};

Vec3 vec3(const Json& j, const std::string& path) {
  const auto v = io::as_double_vector(j, path);
  if (v.size() != 3) throw io::DocumentError(ErrorCode::DimensionMismatch, path + ": expected 3 components");
  return {v[0], v[1], v[2]};
}

DiffractSetup diffract_setup(const Json& cfg, const RunOptions& opts) {
  io::check_keys(cfg, "", {}, {"model", "k", "n", "omega", "c", "density", "point_density", "directions"});
  RadiationModel rm = bundled_radiation_model();
  if (cfg.contains("model") && !(cfg.at("model").is_string() && cfg.at("model").get<std::string>() == "bundled")) {
    const Json& m = cfg.at("model");
    io::check_keys(m, "/model", {"group", "seeds"}, {"weights"});
    rm.spec = io::isometry_spec_from_json(m.at("group"), "/model/group");
    if (rm.spec.dim != 3) throw io::DocumentError(ErrorCode::DimensionMismatch, "/model/group: must be 3-dimensional");
    rm.seeds.clear();
    const Json& seeds = m.at("seeds");
    if (!seeds.is_array() || seeds.empty()) io::schema_fail("/model/seeds", "expected nonempty array");
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      const Vec3 s = vec3(seeds[i], "/model/seeds/" + std::to_string(i));
      rm.seeds.push_back(RVector(s));
    }
    rm.seed_weights = m.contains("weights") ? io::as_double_vector(m.at("weights"), "/model/weights")
                                            : std::vector<double>(rm.seeds.size(), 1.0);
  }
  DiffractSetup d;
  d.model = to_finite_action(rm.spec, rm.seeds, {}, rm.seed_weights);
  const OrbitDecomposition orb = orbits(d.model.action);
  if (orb.num_orbits() != static_cast<int>(rm.seeds.size()))
    throw io::DocumentError(ErrorCode::InvalidArgument, "/model/seeds: seed points must lie in distinct orbits");
  d.dual = irreps(d.model.action.group(), "", opts.seed);
  d.k = cfg.contains("k") ? vec3(cfg.at("k"), "/k") : Vec3(0.0, 0.0, 1.5);
  if (cfg.contains("n")) {
    const CVector n = io::as_complex_vector(cfg.at("n"), "/n");
    if (n.size() != 3) throw io::DocumentError(ErrorCode::DimensionMismatch, "/n: expected 3 components");
    d.n = n;
  } else {
    d.n = CVec3(1.0, 0.0, 0.0);
  }
  d.setup.omega = cfg.contains("omega") ? io::as_double(cfg.at("omega"), "/omega") : 2.0;
  d.setup.c_light = cfg.contains("c") ? io::as_double(cfg.at("c"), "/c") : 1.0;
  if (d.setup.c_light <= 0) io::schema_fail("/c", "must be positive");
  const int m = d.model.action.points();
  if (cfg.contains("point_density")) {
    d.setup.density = io::as_double_vector(cfg.at("point_density"), "/point_density");
    if (static_cast<int>(d.setup.density.size()) != m)
      throw io::DocumentError(ErrorCode::SizeMismatch, "/point_density: expected " + std::to_string(m) + " values");
  } else {
    std::vector<double> per_seed{1.0, 0.6, 1.7};
    if (cfg.contains("density")) per_seed = io::as_double_vector(cfg.at("density"), "/density");
    per_seed.resize(std::max(per_seed.size(), rm.seeds.size()), 1.0);
    for (int x = 0; x < m; ++x) d.setup.density.push_back(per_seed[static_cast<std::size_t>(orb.orbit_id[x])]);
  }
  if (cfg.contains("directions") && cfg.at("directions").is_array()) {
    const Json& dirs = cfg.at("directions");
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      Vec3 s = vec3(dirs[i], "/directions/" + std::to_string(i));
      if (s.norm() == 0) io::schema_fail("/directions/" + std::to_string(i), "zero direction");
      d.directions.push_back(s.normalized());
    }
  } else {
    const int count = cfg.contains("directions") ? io::as_int(cfg.at("directions"), "/directions") : 16;
    if (count < 1) io::schema_fail("/directions", "must be positive");
    d.directions = fibonacci_directions(count);
  }
  return d;
}

}  // namespace

DocResult group_inspect(std::string_view input, const RunOptions& opts) {
  const Json doc = io::parse_json(input);
  Json cfg = doc;
  if (!doc.is_object() || !doc.contains("action")) cfg = Json{{"action", doc}};
  io::check_keys(cfg, "", {"action"}, {"dual"});
  const ZakContext ctx = zak_context(cfg, opts);
  const GroupAction& a = ctx.space.action;
  const FiniteGroup& G = a.group();
  const OrbitDecomposition& orb = ctx.space.orbits;

  Json out;
  out["order"] = G.order();
  out["abelian"] = G.is_abelian();
  out["identity"] = G.identity();
  out["conjugacy_classes"] = G.conjugacy_classes().size();
  out["points"] = a.points();
  Json orbs = Json::array();
  for (int o = 0; o < orb.num_orbits(); ++o) {
    Json oj;
    oj["representative"] = orb.representatives[o];
    oj["points"] = orb.orbit_points[o];
    oj["stabilizer"] = orb.stabilizers[o];
    oj["orbit_measure"] = orb.orbit_measure[o];
    oj["fd_measure"] = orb.fd_measure[o];
    orbs.push_back(std::move(oj));
  }
  out["orbits"] = std::move(orbs);
  out["q"] = ctx.space.cocycle.q;
  const RVector beta = bruhat_function(a);
  out["bruhat"] = io::to_json(beta);
  Json dual = Json::array();
  for (const auto& s : ctx.dual.irreps) dual.push_back(Json{{"label", s.label}, {"dim", s.dim}});
  out["dual"] = std::move(dual);

  Checks c;
  c.add("cocycle_identity", cocycle_identity_residual(a, ctx.space.cocycle), tol_or(opts, kExactTol));
  c.add("q_equation", q_equation_residual(a, ctx.space.cocycle), tol_or(opts, kExactTol));
  const auto ref = oracle::orbit_measures(a.perm(), a.weights());
  double meas = 0.0;
  for (int o = 0; o < orb.num_orbits(); ++o) meas = std::max(meas, std::abs(ref[o] - orb.orbit_measure[o]));
  c.add("orbit_measure_vs_oracle", meas, tol_or(opts, kExactTol));
  c.add("class_count_vs_oracle",
        std::abs(static_cast<double>(G.conjugacy_classes().size()) - oracle::conjugacy_class_count(G.table())), 0.0);
  double plancherel = 0.0;
  for (const auto& s : ctx.dual.irreps) plancherel += s.dim * s.dim;
  c.add("plancherel_dimension_sum", std::abs(plancherel - G.order()), 0.0);
  c.add("irrep_count_equals_classes",
        std::abs(static_cast<double>(ctx.dual.size()) - static_cast<double>(G.conjugacy_classes().size())), 0.0);
  return report(std::move(out), c);
}

DocResult zak_forward(std::string_view config, const RunOptions& opts, bool binary) {
  const Json cfg = io::parse_json(config);
  if (io::has(cfg, "lattice")) return lattice_zak(config, opts, binary);
  io::check_keys(cfg, "", {"action"}, {"dual", "function", "tests"});
  const ZakContext ctx = zak_context(cfg, opts);
  const auto fs = test_functions(cfg, ctx.space.action.points(), 1, opts);
  const ZakCoefficients z = zak(ctx.space, fs[0], ctx.dual, opts.jobs);
  return {binary ? io::zak_to_binary(z) : io::dump(io::zak_to_json(z)), true};
}

DocResult lattice_zak(std::string_view config, const RunOptions& opts, bool binary) {
  const Json cfg = io::parse_json(config);
  io::check_keys(cfg, "", {"lattice"}, {"samples"});
  const LatticeInput in = lattice_input(cfg, opts);
  return {lattice_output(classic_zak(in.samples, in.shape, opts.jobs), binary), true};
}

DocResult zak_inverse(std::string_view coefficients, std::string_view context, const RunOptions& opts) {
  if (io::is_binary(coefficients)) {
    if (io::binary_kind(coefficients) == io::kBinaryLattice) {
      const LatticeZakGrid g = io::lattice_from_binary(coefficients);
      const auto f = classic_zak_inverse(g, opts.jobs);
      Json j;
      j["kind"] = "lattice_samples";
      j["grid"] = g.shape.grid();
      j["values"] = io::to_json(CVector(Eigen::Map<const CVector>(f.data(), static_cast<Eigen::Index>(f.size()))));
      return {io::dump(j), true};
    }
    if (context.empty())
      throw io::DocumentError(ErrorCode::InvalidArgument,
                              "binary action coefficients need the forward config (--context)");
    const Json cfg = io::parse_json(context);
    io::check_keys(cfg, "", {"action"}, {"dual", "function", "tests"});
    const ZakContext ctx = zak_context(cfg, opts);
    const ZakCoefficients z = io::zak_from_binary(coefficients, ctx.space, ctx.dual);
    return {io::dump(function_json(zak_inverse(z, tol_or(opts, 1e-10)))), true};
  }
  const Json doc = io::parse_json(coefficients);
  const std::string kind = io::as_string(io::member(doc, "kind", ""), "/kind");
  if (kind == "lattice_zak") {
    const LatticeZakGrid g = io::lattice_from_json(doc);
    const auto f = classic_zak_inverse(g, opts.jobs);
    Json j;
    j["kind"] = "lattice_samples";
    j["grid"] = g.shape.grid();
    j["values"] = io::to_json(CVector(Eigen::Map<const CVector>(f.data(), static_cast<Eigen::Index>(f.size()))));
    return {io::dump(j), true};
  }
  const ZakCoefficients z = io::zak_from_json(doc);
  return {io::dump(function_json(zak_inverse(z, tol_or(opts, 1e-10)))), true};
}

DocResult zak_verify(std::string_view config, const RunOptions& opts) {
  const Json cfg = io::parse_json(config);
  Checks c;
  Json out;
  if (io::has(cfg, "lattice")) {
    io::check_keys(cfg, "", {"lattice"}, {"samples"});
    const LatticeInput in = lattice_input(cfg, opts);
    const LatticeZakGrid z = classic_zak(in.samples, in.shape, opts.jobs);
    out["command"] = "zak verify";
    out["kind"] = "lattice";
    out["cells"] = in.shape.cells;
    out["periods"] = in.shape.periods;
    lattice_checks(in, z, opts, c);
    return report(std::move(out), c);
  }
  io::check_keys(cfg, "", {"action"}, {"dual", "function", "tests"});
  const ZakContext ctx = zak_context(cfg, opts);
  const auto fs = test_functions(cfg, ctx.space.action.points(), 20, opts);
  double rt = 0, unit = 0, vanish = 0, proj = 0, inter = 0, equi = 0, chr = 0, weak = 0, eigen = 0, heis = 0;
  Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
  for (const auto& f : fs) {
    const double fnorm = std::max(1.0, f.norm());
    const double finf = std::max(1.0, f.cwiseAbs().maxCoeff());
    const ZakCoefficients z = zak(ctx.space, f, ctx.dual, opts.jobs);
    rt = std::max(rt, max_abs_diff(zak_inverse(z, 1e-9), f) / finf);
    const UnitarityReport u = verify_unitarity(z, f);
    unit = std::max(unit, u.residual / std::max(1.0, u.lhs));
    const SupportResidual s = support_residual(z);
    vanish = std::max(vanish, s.vanishing / fnorm);
    proj = std::max(proj, s.projection / fnorm);
    inter = std::max(inter, intertwining_residual(ctx.space, f, ctx.dual) / fnorm);
    equi = std::max(equi, equivariance_residual(z, f) / fnorm);
    chr = std::max(chr, character_reconstruction_error(ctx.space, f, ctx.dual) / finf);
    const CVector phi = rng.complex_vector(ctx.space.action.points());
    weak = std::max(weak, weak_inversion_residual(ctx.space, ctx.dual, f, phi) / (fnorm * std::max(1.0, phi.norm())));
    eigen = std::max(eigen, zak_measure_eigen_residual(ctx.space, ctx.dual, phi) / std::max(1.0, phi.norm()));
    if (ctx.dual.abelian()) heis = std::max(heis, heisenberg_residual(z, f, 1) / fnorm);
  }
  out["command"] = "zak verify";
  out["kind"] = "action";
  out["points"] = ctx.space.action.points();
  out["order"] = ctx.space.action.group().order();
  out["functions"] = fs.size();
  Json mu = Json::array();
  for (int o = 0; o < ctx.space.orbits.num_orbits(); ++o)
    mu.push_back(Json{{"representative", ctx.space.orbits.representatives[o]},
                      {"fd_measure", ctx.space.orbits.fd_measure[o]}});
  out["fundamental_domain"] = std::move(mu);
  c.add("round_trip", rt, tol_or(opts, 1e-11));
  c.add("norm_identity", unit, tol_or(opts, 1e-10));
  c.add("support_vanishing", vanish, tol_or(opts, kExactTol));
  c.add("support_projection", proj, tol_or(opts, kExactTol));
  c.add("intertwining", inter, tol_or(opts, kExactTol));
  c.add("equivariance", equi, tol_or(opts, kExactTol));
  c.add("character_reconstruction", chr, tol_or(opts, 1e-11));
  c.add("weak_inversion", weak, tol_or(opts, 1e-11));
  c.add("zak_measure_eigen", eigen, tol_or(opts, kExactTol));
  if (ctx.dual.abelian()) c.add("heisenberg", heis, tol_or(opts, kExactTol));
  return report(std::move(out), c);
}

DocResult poisson_check(std::string_view config, const RunOptions& opts) {
  const Json cfg = io::parse_json(config);
  io::check_keys(cfg, "", {"subgroup"}, {"group", "action", "mode", "dual", "function", "tests"});
  if (cfg.contains("group") == cfg.contains("action")) io::schema_fail("", "exactly one of 'group' or 'action' required");
  FiniteGroup G;
  std::string hint;
  if (cfg.contains("group")) {
    G = io::group_from_json(cfg.at("group"), "/group");
    if (cfg.at("group").is_string()) hint = cfg.at("group").get<std::string>();
  } else {
    G = io::action_from_json(cfg.at("action"), "/action").group();
    if (cfg.at("action").is_string()) hint = bundled_dual_hint(cfg.at("action").get<std::string>().substr(8));
  }
  const auto H = io::as_int_vector(cfg.at("subgroup"), "/subgroup");
  G.check_subgroup(H);
  std::string mode = G.is_abelian() ? "abelian" : "compact";
  if (cfg.contains("mode")) mode = io::as_string(cfg.at("mode"), "/mode");
  if (mode != "abelian" && mode != "compact" && mode != "quotient")
    io::schema_fail("/mode", "expected 'abelian', 'compact' or 'quotient'");
  if (mode == "abelian" && !G.is_abelian()) fail(ErrorCode::NotAbelian, "abelian Poisson mode on a non-abelian group");
  if (cfg.contains("dual")) hint = io::as_string(cfg.at("dual"), "/dual");
  const DualObject dual = irreps(G, hint, opts.seed);
  const ReciprocalSpace rs = reciprocal_space(dual, H);

  Json out;
  out["command"] = "poisson check";
  out["mode"] = mode;
  out["order"] = G.order();
  out["subgroup"] = H;
  Json recip = Json::array();
  for (std::size_t i = 0; i < rs.members.size(); ++i)
    recip.push_back(Json{{"irrep", dual.irreps[rs.members[i]].label}, {"mult1", rs.mult1[i]}});
  out["reciprocal"] = std::move(recip);

  Checks c;
  Json results = Json::array();
  const double tol = tol_or(opts, kExactTol);
  if (mode == "quotient") {
    const auto cosets = left_cosets(G, H);
    std::vector<std::pair<std::string, CVector>> fs;
    if (cfg.contains("function")) {
      const CVector f = io::as_complex_vector(cfg.at("function"), "/function");
      if (f.size() != G.order()) throw io::DocumentError(ErrorCode::SizeMismatch, "/function: one value per element");
      fs.emplace_back("function", f);
    } else {
      const int count = cfg.contains("tests") ? io::as_int(cfg.at("tests"), "/tests") : 50;
      Rng rng(opts.seed);
      for (int i = 0; i < count; ++i) {
        CVector f(G.order());
        for (const auto& cs : cosets) {
          const cplx v = rng.complex_normal();
          for (int g : cs) f[g] = v;
        }
        fs.emplace_back("random:" + std::to_string(i), f);
      }
    }
    double worst = 0.0;
    for (const auto& [name, f] : fs) {
      const QuotientFourierReport q = quotient_fourier_check(f, dual, H);
      const double r = q.residual() / std::max(1.0, f.cwiseAbs().maxCoeff());
      worst = std::max(worst, r);
      results.push_back(Json{{"name", name},
                             {"reconstruction_error", q.reconstruction_error},
                             {"support_error", q.support_error}});
    }
    out["cosets"] = cosets.size();
    out["results"] = std::move(results);
    c.add("quotient_fourier", worst, tol_or(opts, 1e-11));
    return report(std::move(out), c);
  }

  std::vector<std::pair<std::string, CVector>> fs;
  if (cfg.contains("function")) {
    const CVector f = io::as_complex_vector(cfg.at("function"), "/function");
    if (f.size() != G.order()) throw io::DocumentError(ErrorCode::SizeMismatch, "/function: one value per element");
    fs.emplace_back("function", f);
  } else {
    std::vector<int> deltas{G.identity()};
    for (int h : H)
      if (h != G.identity()) deltas.push_back(h);
    for (int g : deltas) {
      CVector f = CVector::Zero(G.order());
      f[g] = 1.0;
      fs.emplace_back("delta:" + G.name_of(g), f);
    }
    const int count = cfg.contains("tests") ? io::as_int(cfg.at("tests"), "/tests") : 50;
    Rng rng(opts.seed);
    for (int i = 0; i < count; ++i) fs.emplace_back("random:" + std::to_string(i), rng.complex_vector(G.order()));
  }
  double worst = 0.0;
  for (const auto& [name, f] : fs) {
    const PoissonReport p = mode == "abelian" ? poisson_abelian_check(f, G, H) : poisson_compact_check(f, dual, H);
    worst = std::max(worst, p.residual);
    results.push_back(Json{{"name", name}, {"lhs", io::to_json(p.lhs)}, {"rhs", io::to_json(p.rhs)},
                           {"residual", p.residual}});
  }
  out["results"] = std::move(results);
  c.add("poisson_" + mode, worst, tol);
  return report(std::move(out), c);
}

DocResult bands_run(std::string_view model, const RunOptions& opts) {
  const ChainModel m = io::chain_from_json(io::parse_json(model));
  const BandStructure b = band_structure(m, opts.jobs);
  std::string csv = "k_index,k_value,band_index,energy\n";
  for (int j = 0; j < b.periods; ++j)
    for (int n = 0; n < b.cells; ++n)
      csv += std::to_string(j) + "," + fmt(b.k_values[j]) + "," + std::to_string(n) + "," + fmt(b.energies[j][n]) + "\n";
  return {csv, true};
}

DocResult bands_check(std::string_view model, const RunOptions& opts) {
  const ChainModel m = io::chain_from_json(io::parse_json(model));
  const BandStructure b = band_structure(m, opts.jobs);
  const auto all = b.all_energies();
  Checks c;
  const auto ring = oracle::ring_spectrum(m.t, m.onsite, m.periods);
  double uni = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) uni = std::max(uni, std::abs(ring[i] - all[i]));
  c.add("band_union_vs_ring", uni, tol_or(opts, kEigenTol));
  if (m.cells == 1) {
    const auto circ = oracle::circulant_band(m.t, m.onsite[0], m.periods);
    double e = 0.0;
    for (std::size_t i = 0; i < circ.size(); ++i) e = std::max(e, std::abs(circ[i] - all[i]));
    c.add("band_vs_closed_form", e, tol_or(opts, 1e-10));
  }
  double tr = 0.0;
  for (int j = 0; j < m.periods; ++j)
    for (int n = 0; n < m.cells; ++n)
      tr = std::max(tr, std::abs(b.energies[j][n] - b.energies[(m.periods - j) % m.periods][n]));
  c.add("time_reversal", tr, tol_or(opts, 1e-10));

  // Same spectrum through the symmetry-adapted basis of the Z_N action.
  const WeilSpace space = WeilSpace::build(chain_action(m));
  const CMatrix h = chain_hamiltonian(m);
  const DualObject dual = dual_abelian(space.action.group());
  const BlockDiagonalization bd = block_diagonalize(space, check_invariance(space.action, h), dual, opts.jobs);
  c.add("off_block_mass", bd.off_block_mass / std::max(1.0, bd.h_norm), tol_or(opts, kEigenTol));
  c.add("spectrum_conservation", spectrum_conservation_residual(bd, h), tol_or(opts, kEigenTol));
  double route = 0.0;
  for (const auto& blk : bd.blocks) {
    std::vector<double> ev(blk.eigenvalues.data(), blk.eigenvalues.data() + blk.eigenvalues.size());
    std::sort(ev.begin(), ev.end());
    // chi_j sits at k = 2 pi j / N or its mirror; both carry the same bands
    double best = 1e300;
    for (int j : {blk.sigma, (m.periods - blk.sigma) % m.periods}) {
      double e = 0.0;
      for (int n = 0; n < m.cells; ++n) e = std::max(e, std::abs(ev[n] - b.energies[j][n]));
      best = std::min(best, e);
    }
    route = std::max(route, best);
  }
  c.add("blocks_vs_bloch_bands", route, tol_or(opts, kEigenTol));

  Json out;
  out["command"] = "bands check";
  out["M"] = m.cells;
  out["N"] = m.periods;
  out["bandwidth"] = all.back() - all.front();
  if (m.cells >= 2) {
    double gap = 1e300;
    for (int j = 0; j < m.periods; ++j) gap = std::min(gap, b.energies[j][1]);
    double top = -1e300;
    for (int j = 0; j < m.periods; ++j) top = std::max(top, b.energies[j][0]);
    out["gap_01"] = std::max(0.0, gap - top);
  }
  return report(std::move(out), c);
}

DocResult euclid_generate(std::string_view input, const RunOptions&) {
  const Json doc = io::parse_json(input);
  const IsometryGroupSpec spec = io::isometry_spec_from_json(doc, "", {"require_finite"});
  const bool require_finite = io::has(doc, "require_finite") && io::as_bool(doc.at("require_finite"), "/require_finite");
  const GeneratedGroup g = generate(spec, require_finite);
  Json out;
  out["dim"] = spec.dim;
  out["count"] = g.elements.size();
  out["finite"] = g.finite;
  Json elems = Json::array();
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    Json e = io::isometry_to_json(g.elements[i]);
    e["word_length"] = g.word_length[i];
    elems.push_back(std::move(e));
  }
  out["elements"] = std::move(elems);
  return {io::dump(out), true};
}

DocResult euclid_certify(std::string_view input, const RunOptions& opts) {
  const Json doc = io::parse_json(input);
  const IsometryGroupSpec spec = io::isometry_spec_from_json(doc, "", {"require_finite"});
  const TypeOneCertificate cert = type_one_certificate(spec);
  Json out;
  out["kind"] = cert.kind;
  out["certified"] = cert.kind != "inconclusive";
  out["subgroup"] = cert.subgroup;
  out["index"] = cert.index;
  out["group_elements"] = cert.group_elements;
  out["subgroup_elements"] = cert.subgroup_elements;
  out["heuristic"] = cert.heuristic;
  if (cert.rational_angle)
    out["rational_angle"] = Json::array({cert.rational_angle->first, cert.rational_angle->second});
  else
    out["rational_angle"] = nullptr;
  out["note"] = cert.note;

  // (Q|c')(I|c)(Q|c')^{-1} = (I|Qc) for every generator against sampled translations
  Checks c;
  Rng rng(opts.seed);
  double conj = 0.0;
  for (const auto& g : spec.generators)
    for (int i = 0; i < 8; ++i) conj = std::max(conj, conjugation_identity_residual(g, rng.real_vector(spec.dim, -3, 3)));
  c.add("conjugation_identity", conj, tol_or(opts, kExactTol));
  return report(std::move(out), c);
}

DocResult diffract_run(std::string_view config, const RunOptions& opts) {
  const DiffractSetup d = diffract_setup(io::parse_json(config), opts);
  std::string csv = "s0_x,s0_y,s0_z,intensity";
  for (const auto& s : d.dual.irreps) csv += ",intensity_" + s.label;
  csv += "\n";
  for (const auto& s0 : d.directions) {
    ScatteringSetup st = d.setup;
    st.s0 = s0;
    const SymmetryProjection p = symmetry_projected_transform(d.model, d.dual, d.k, d.n, st);
    csv += fmt(s0.x()) + "," + fmt(s0.y()) + "," + fmt(s0.z()) + "," + fmt(p.total.squaredNorm());
    for (const auto& ch : p.channels) csv += "," + fmt(ch.squaredNorm());
    csv += "\n";
  }
  return {csv, true};
}

DocResult diffract_verify(std::string_view config, const RunOptions& opts) {
  const DiffractSetup d = diffract_setup(io::parse_json(config), opts);
  double rec = 0.0, route = 0.0, quad = 0.0;
  std::vector<Vec3> pts;
  for (const auto& p : d.model.points) pts.emplace_back(p[0], p[1], p[2]);
  for (const auto& s0 : d.directions) {
    ScatteringSetup st = d.setup;
    st.s0 = s0;
    const SymmetryProjection p = symmetry_projected_transform(d.model, d.dual, d.k, d.n, st);
    const double scale = std::max(1.0, p.expected.norm());
    rec = std::max(rec, p.recovery_residual / scale);
    route = std::max(route, p.route_residual / scale);
    // expected value against an independent quadrature of phihat
    const Vec3 l = (st.omega / st.c_light) * s0 - d.k;
    const cplx ph = oracle::quadrature_fourier(pts, d.model.action.weights(), st.density, l);
    const Eigen::Matrix3d P = Eigen::Matrix3d::Identity() - s0 * s0.transpose();
    const CVec3 ref = P.cast<cplx>() * d.n * ph;
    quad = std::max(quad, (ref - p.expected).norm() / scale);
  }
  Checks c;
  c.add("recovery", rec, tol_or(opts, kEigenTol));
  c.add("fundamental_domain_route", route, tol_or(opts, kEigenTol));
  c.add("expected_vs_quadrature", quad, tol_or(opts, kEigenTol));
  Json out;
  out["command"] = "diffract verify";
  out["points"] = d.model.action.points();
  out["order"] = d.model.action.group().order();
  out["directions"] = d.directions.size();
  Json labels = Json::array();
  for (const auto& s : d.dual.irreps) labels.push_back(s.label);
  out["irreps"] = std::move(labels);
  return report(std::move(out), c);
}

}  // namespace zakspace::docs
