#include <fstream>
#include <sstream>

#include "documents.hpp"
#include "json_io.hpp"
#include "support.hpp"
#include "zakspace/lattice_zak.hpp"

using namespace zs_test;
namespace io = zakspace::io;
namespace docs = zakspace::docs;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(ZAKSPACE_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("action and dual round trip through JSON") {
  for (const auto& name : bundled_action_names()) {
    const GroupAction a = bundled_action(name);
    const GroupAction b = io::action_from_json(io::parse_json(io::dump(io::action_to_json(a))), "action");
    CHECK(b.perm() == a.perm());
    CHECK(b.weights() == a.weights());
    CHECK(same_group_table(a.group(), b.group()));
    const DualObject d = irreps(a.group(), bundled_dual_hint(name), 2);
    const DualObject e = io::dual_from_json(io::parse_json(io::dump(io::dual_to_json(d))), a.group(), "dual");
    REQUIRE(e.size() == d.size());
    for (int s = 0; s < d.size(); ++s)
      for (int g = 0; g < a.group().order(); ++g) CHECK(e.irreps[s].matrices[g] == d.irreps[s].matrices[g]);
  }
}

TEST_CASE("coefficients round trip through JSON and binary") {
  Rng rng(1);
  const WeilSpace s = WeilSpace::build(bundled_action("d4_square"));
  const DualObject d = irreps_catalog("dihedral:4");
  const ZakCoefficients z = zak(s, rng.complex_vector(s.action.points()), d);
  const ZakCoefficients j = io::zak_from_json(io::parse_json(io::dump(io::zak_to_json(z))));
  REQUIRE(j.values.size() == z.values.size());
  for (std::size_t i = 0; i < z.values.size(); ++i) CHECK(j.values[i] == z.values[i]);
  const std::string bin = io::zak_to_binary(z);
  CHECK(io::is_binary(bin));
  CHECK(io::binary_kind(bin) == io::kBinaryCoefficients);
  const ZakCoefficients b = io::zak_from_binary(bin, s, d);
  for (std::size_t i = 0; i < z.values.size(); ++i) CHECK(b.values[i] == z.values[i]);
  CHECK_CODE(io::zak_from_binary(bin.substr(0, bin.size() - 3), s, d), ErrorCode::ParseError);
  CHECK_CODE(io::zak_from_binary(bin, s, irreps_catalog("dihedral:4")), ErrorCode::Ok);
  const WeilSpace other = WeilSpace::build(bundled_action("c6_ring"));
  CHECK_CODE(io::zak_from_binary(bin, other, irreps(other.action.group())), ErrorCode::SizeMismatch);
}

TEST_CASE("lattice grids round trip") {
  Rng rng(2);
  const LatticeShape sh = lattice_shape({8, 12}, {2, 3});
  std::vector<cplx> f(static_cast<std::size_t>(sh.grid_size()));
  for (auto& v : f) v = rng.complex_normal();
  const LatticeZakGrid z = classic_zak(f, sh);
  const LatticeZakGrid j = io::lattice_from_json(io::parse_json(io::dump(io::lattice_to_json(z))));
  CHECK(j.values == z.values);
  const std::string bin = io::lattice_to_binary(z);
  CHECK(io::binary_kind(bin) == io::kBinaryLattice);
  const LatticeZakGrid b = io::lattice_from_binary(bin);
  CHECK(b.values == z.values);
  CHECK(b.shape.cells == sh.cells);
  CHECK(b.shape.periods == sh.periods);
  std::string bad = bin;
  bad[0] = 'X';
  CHECK_FALSE(io::is_binary(bad));
  CHECK_CODE(io::lattice_from_binary(bad), ErrorCode::ParseError);
  CHECK_CODE(io::lattice_from_binary(bin.substr(0, 20)), ErrorCode::ParseError);
}

TEST_CASE("parse errors carry a position") {
  try {
    io::parse_json("{\n  \"a\": 1\n  \"b\": 2\n}");
    FAIL("no error");
  } catch (const io::DocumentError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.line() == 3);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("schema errors name the path") {
  const auto j = io::parse_json(R"({"order": 2, "table": [[0,1],[1,0]], "points": 2, "perm": [[0,1],[1,0]], "extra": 1})");
  try {
    io::action_from_json(j, "action");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(std::string(e.what()).find("extra") != std::string::npos);
  }
  CHECK_CODE(io::as_int(io::parse_json("1.5"), "x"), ErrorCode::SchemaError);
  CHECK_CODE(io::as_complex(io::parse_json("[1, 2, 3]"), "z"), ErrorCode::SchemaError);
  CHECK_CODE(io::action_from_json(io::parse_json("\"bundled:nope\""), "action"), ErrorCode::SchemaError);
}

TEST_CASE("fixture documents") {
  const docs::RunOptions opts;
  for (const auto& name : {"zak_z2_fixed.json", "zak_s3.json", "zak_d4.json", "lattice_1d.json", "lattice_2d.json"}) {
    CAPTURE(name);
    CHECK(docs::zak_verify(fixture(name), opts).pass);
  }
  for (const auto& name : {"poisson_z4.json", "poisson_s3.json", "poisson_s3_quotient.json"}) {
    CAPTURE(name);
    CHECK(docs::poisson_check(fixture(name), opts).pass);
  }
  CHECK(docs::bands_check(fixture("chain_c6.json"), opts).pass);
  CHECK(docs::bands_check(fixture("dimer.json"), opts).pass);
  CHECK(docs::diffract_verify(fixture("diffract.json"), opts).pass);
  CHECK(docs::group_inspect(fixture("s3_left.json"), opts).pass);
  CHECK_CODE(docs::group_inspect(fixture("bad_table.json"), opts), ErrorCode::NotAssociative);
  CHECK_CODE(docs::group_inspect(fixture("malformed.json"), opts), ErrorCode::ParseError);
  CHECK_CODE(docs::zak_verify(fixture("unknown_key.json"), opts), ErrorCode::SchemaError);
}

TEST_CASE("forward then inverse through documents") {
  const docs::RunOptions opts;
  const std::string cfg = fixture("zak_d4.json");
  const auto fwd = docs::zak_forward(cfg, opts, false);
  const auto inv = docs::zak_inverse(fwd.output, "", opts);
  const auto bin = docs::zak_forward(cfg, opts, true);
  const auto inv_b = docs::zak_inverse(bin.output, cfg, opts);
  CHECK(inv.output == inv_b.output);
  CHECK_CODE(docs::zak_inverse(bin.output, "", opts), ErrorCode::InvalidArgument);
  const auto lat = docs::zak_forward(fixture("lattice_2d.json"), opts, true);
  CHECK(io::binary_kind(lat.output) == io::kBinaryLattice);
  CHECK(docs::zak_inverse(lat.output, "", opts).output.size() > 0);
}

TEST_CASE("document outputs do not depend on jobs") {
  docs::RunOptions one, many;
  many.jobs = 8;
  const std::string cfg = fixture("zak_s3.json");
  CHECK(docs::zak_forward(cfg, one, false).output == docs::zak_forward(cfg, many, false).output);
  CHECK(docs::zak_verify(cfg, one).output == docs::zak_verify(cfg, many).output);
  CHECK(docs::bands_run(fixture("dimer.json"), one).output == docs::bands_run(fixture("dimer.json"), many).output);
}
