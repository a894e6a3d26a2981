#include "json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#include "zakspace/bundled.hpp"

namespace zakspace::io {

namespace {

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string join(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const char* type_name(const Json& j) { return j.type_name(); }

void put_u32(std::string& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}
void put_u64(std::string& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}
void put_f64(std::string& out, double d) {
  std::uint64_t v;
  std::memcpy(&v, &d, sizeof v);
  put_u64(out, v);
}

struct Reader {
  std::string_view bytes;
  std::size_t pos = 0;

  void need(std::size_t n) const {
    if (pos + n > bytes.size())
      throw DocumentError(ErrorCode::ParseError, "binary input truncated at byte " + std::to_string(pos));
  }
  std::uint64_t uint(int width) {
    need(static_cast<std::size_t>(width));
    std::uint64_t v = 0;
    for (int b = 0; b < width; ++b)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[pos + b])) << (8 * b);
    pos += static_cast<std::size_t>(width);
    return v;
  }
  double f64() {
    const std::uint64_t v = uint(8);
    double d;
    std::memcpy(&d, &v, sizeof d);
    return d;
  }
  cplx complex() {
    const double re = f64();
    return {re, f64()};
  }
};

std::string binary_header(std::uint32_t kind, const std::vector<std::uint64_t>& dims) {
  std::string out = "ZAK1";
  put_u32(out, kind);
  put_u32(out, static_cast<std::uint32_t>(dims.size()));
  for (auto d : dims) put_u64(out, d);
  return out;
}

std::vector<std::uint64_t> read_header(Reader& r, std::uint32_t expected_kind) {
  if (!is_binary(r.bytes)) throw DocumentError(ErrorCode::ParseError, "missing ZAK1 magic");
  r.pos = 4;
  const auto kind = static_cast<std::uint32_t>(r.uint(4));
  if (kind != expected_kind)
    throw DocumentError(ErrorCode::SchemaError, "binary kind " + std::to_string(kind) + ", expected " +
                                                    std::to_string(expected_kind));
  const auto ndims = r.uint(4);
  if (ndims > 64) throw DocumentError(ErrorCode::ParseError, "implausible ndims " + std::to_string(ndims));
  std::vector<std::uint64_t> dims(ndims);
  for (auto& d : dims) {
    d = r.uint(8);
    if (d > (1u << 24)) throw DocumentError(ErrorCode::ParseError, "implausible dimension " + std::to_string(d));
  }
  return dims;
}

}  // namespace

void schema_fail(const std::string& path, const std::string& message) {
  throw DocumentError(ErrorCode::SchemaError, (path.empty() ? std::string("/") : path) + ": " + message);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points at the offending character
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
    throw DocumentError(ErrorCode::ParseError, what, line, column);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional) {
  if (!obj.is_object()) schema_fail(path, std::string("expected object, got ") + type_name(obj));
  for (const char* k : required)
    if (!obj.contains(k)) schema_fail(path, std::string("missing required key '") + k + "'");
  for (const auto& item : obj.items()) {
    const auto& k = item.key();
    const auto match = [&](const char* c) { return k == c; };
    if (std::none_of(required.begin(), required.end(), match) &&
        std::none_of(optional.begin(), optional.end(), match))
      schema_fail(path, "unknown key '" + k + "'");
  }
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) schema_fail(path, std::string("missing required key '") + key + "'");
  return obj.at(key);
}

bool has(const Json& obj, const char* key) { return obj.is_object() && obj.contains(key); }

int as_int(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      schema_fail(path, "integer out of range");
    return static_cast<int>(v);
  }
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (std::floor(d) == d && std::abs(d) < 1e9) return static_cast<int>(d);
  }
  schema_fail(path, std::string("expected integer, got ") + type_name(j));
}

double as_double(const Json& j, const std::string& path) {
  if (!j.is_number()) schema_fail(path, std::string("expected number, got ") + type_name(j));
  return j.get<double>();
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) schema_fail(path, std::string("expected boolean, got ") + type_name(j));
  return j.get<bool>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, std::string("expected string, got ") + type_name(j));
  return j.get<std::string>();
}

std::vector<int> as_int_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, std::string("expected array, got ") + type_name(j));
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], join(path, i)));
  return out;
}

std::vector<double> as_double_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, std::string("expected array, got ") + type_name(j));
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_double(j[i], join(path, i)));
  return out;
}

std::vector<std::vector<int>> as_int_matrix(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, std::string("expected array, got ") + type_name(j));
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int_vector(j[i], join(path, i)));
  return out;
}

RVector as_real_vector(const Json& j, const std::string& path) {
  const auto v = as_double_vector(j, path);
  RVector r(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r[static_cast<Eigen::Index>(i)] = v[i];
  return r;
}

RMatrix as_real_matrix(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_fail(path, "expected nonempty array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(as_double_vector(j[i], join(path, i)));
  const std::size_t cols = rows[0].size();
  RMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) schema_fail(join(path, i), "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
  }
  return m;
}

cplx as_complex(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  schema_fail(path, "expected [re, im] pair or number");
}

CVector as_complex_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, std::string("expected array, got ") + type_name(j));
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = as_complex(j[i], join(path, i));
  return v;
}

CMatrix as_complex_matrix(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_fail(path, "expected nonempty array of rows");
  const std::size_t rows = j.size();
  CMatrix m;
  for (std::size_t i = 0; i < rows; ++i) {
    const CVector r = as_complex_vector(j[i], join(path, i));
    if (i == 0) m.resize(static_cast<Eigen::Index>(rows), r.size());
    if (r.size() != m.cols()) schema_fail(join(path, i), "ragged matrix row");
    m.row(static_cast<Eigen::Index>(i)) = r.transpose();
  }
  return m;
}

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

FiniteGroup group_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return catalog_group(j.get<std::string>());
    } catch (const Error& e) {
      schema_fail(path, e.what());
    }
  }
  check_keys(j, path, {"order", "table"});
  const int order = as_int(j.at("order"), join(path, "order"));
  const auto table = as_int_matrix(j.at("table"), join(path, "table"));
  if (static_cast<int>(table.size()) != order)
    throw DocumentError(ErrorCode::SizeMismatch, join(path, "table") + ": " + std::to_string(table.size()) +
                                                     " rows for order " + std::to_string(order));
  return FiniteGroup::from_table(table);
}

GroupAction action_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.rfind("bundled:", 0) != 0) schema_fail(path, "action string must be 'bundled:<name>'");
    try {
      return bundled_action(s.substr(8));
    } catch (const Error& e) {
      schema_fail(path, e.what());
    }
  }
  check_keys(j, path, {"order", "table", "points", "perm"}, {"weights"});
  const int order = as_int(j.at("order"), join(path, "order"));
  const auto table = as_int_matrix(j.at("table"), join(path, "table"));
  if (static_cast<int>(table.size()) != order)
    throw DocumentError(ErrorCode::SizeMismatch, join(path, "table") + ": " + std::to_string(table.size()) +
                                                     " rows for order " + std::to_string(order));
  const int points = as_int(j.at("points"), join(path, "points"));
  if (points <= 0) schema_fail(join(path, "points"), "must be positive");
  const auto perm = as_int_matrix(j.at("perm"), join(path, "perm"));
  std::vector<double> weights(static_cast<std::size_t>(points), 1.0);
  if (j.contains("weights")) weights = as_double_vector(j.at("weights"), join(path, "weights"));
  if (static_cast<int>(weights.size()) != points)
    throw DocumentError(ErrorCode::SizeMismatch, join(path, "weights") + ": " + std::to_string(weights.size()) +
                                                     " weights for " + std::to_string(points) + " points");
  for (std::size_t g = 0; g < perm.size(); ++g)
    if (static_cast<int>(perm[g].size()) != points)
      throw DocumentError(ErrorCode::SizeMismatch, join(join(path, "perm"), g) + ": row length " +
                                                       std::to_string(perm[g].size()) + " for " +
                                                       std::to_string(points) + " points");
  return GroupAction::make(FiniteGroup::from_table(table), perm, weights);
}

Json action_to_json(const GroupAction& a) {
  Json j;
  j["order"] = a.group().order();
  j["table"] = a.group().table();
  j["points"] = a.points();
  j["perm"] = a.perm();
  j["weights"] = a.weights();
  return j;
}

Json dual_to_json(const DualObject& d) {
  Json irreps = Json::array();
  for (const auto& s : d.irreps) {
    Json ij;
    ij["label"] = s.label;
    ij["dim"] = s.dim;
    Json mats = Json::array();
    for (const auto& m : s.matrices) mats.push_back(to_json(m));
    ij["matrices"] = std::move(mats);
    irreps.push_back(std::move(ij));
  }
  return Json{{"irreps", std::move(irreps)}};
}

DualObject dual_from_json(const Json& j, const FiniteGroup& group, const std::string& path) {
  check_keys(j, path, {"irreps"});
  const Json& list = j.at("irreps");
  if (!list.is_array() || list.empty()) schema_fail(join(path, "irreps"), "expected nonempty array");
  std::vector<UnitaryIrrep> irreps;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = join(join(path, "irreps"), i);
    check_keys(list[i], p, {"label", "dim", "matrices"});
    UnitaryIrrep s;
    s.label = as_string(list[i].at("label"), join(p, "label"));
    s.dim = as_int(list[i].at("dim"), join(p, "dim"));
    const Json& mats = list[i].at("matrices");
    if (!mats.is_array() || static_cast<int>(mats.size()) != group.order())
      throw DocumentError(ErrorCode::SizeMismatch, join(p, "matrices") + ": need one matrix per group element");
    for (std::size_t g = 0; g < mats.size(); ++g) {
      CMatrix m = as_complex_matrix(mats[g], join(join(p, "matrices"), g));
      if (m.rows() != s.dim || m.cols() != s.dim)
        throw DocumentError(ErrorCode::SizeMismatch, join(join(p, "matrices"), g) + ": not " +
                                                         std::to_string(s.dim) + "x" + std::to_string(s.dim));
      s.matrices.push_back(std::move(m));
    }
    irreps.push_back(std::move(s));
  }
  return make_dual(group, std::move(irreps));
}

Json zak_to_json(const ZakCoefficients& z) {
  Json j;
  j["kind"] = "zak_coefficients";
  j["action"] = action_to_json(z.space.action);
  j["dual"] = dual_to_json(z.dual);
  j["representatives"] = z.space.orbits.representatives;
  Json values = Json::array();
  for (int o = 0; o < z.space.orbits.num_orbits(); ++o)
    for (int s = 0; s < z.dual.size(); ++s) {
      Json v;
      v["representative"] = z.space.orbits.representatives[o];
      v["irrep"] = z.dual.irreps[s].label;
      v["matrix"] = to_json(z.at(o, s));
      values.push_back(std::move(v));
    }
  j["values"] = std::move(values);
  return j;
}

ZakCoefficients zak_from_json(const Json& j) {
  check_keys(j, "", {"kind", "action", "dual", "values"}, {"representatives"});
  if (as_string(j.at("kind"), "/kind") != "zak_coefficients") schema_fail("/kind", "expected 'zak_coefficients'");
  ZakCoefficients z;
  z.space = WeilSpace::build(action_from_json(j.at("action"), "/action"));
  z.dual = dual_from_json(j.at("dual"), z.space.action.group(), "/dual");
  check_dual_matches(z.space.action, z.dual);
  if (j.contains("representatives") &&
      as_int_vector(j.at("representatives"), "/representatives") != z.space.orbits.representatives)
    schema_fail("/representatives", "do not match the action's fundamental domain");
  const Json& values = j.at("values");
  const std::size_t expected = static_cast<std::size_t>(z.space.orbits.num_orbits()) * z.dual.size();
  if (!values.is_array() || values.size() != expected)
    throw DocumentError(ErrorCode::SizeMismatch,
                        "/values: expected " + std::to_string(expected) + " (representative, irrep) blocks");
  z.values.resize(expected);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string p = join("/values", i);
    check_keys(values[i], p, {"representative", "irrep", "matrix"});
    const int x0 = as_int(values[i].at("representative"), join(p, "representative"));
    const int o = z.space.orbits.representative_index(x0);
    if (o < 0) throw DocumentError(ErrorCode::NotRepresentative, join(p, "representative") + ": not in F");
    const int s = z.dual.index_of(as_string(values[i].at("irrep"), join(p, "irrep")));
    if (s < 0) schema_fail(join(p, "irrep"), "unknown irrep label");
    CMatrix m = as_complex_matrix(values[i].at("matrix"), join(p, "matrix"));
    const int d = z.dual.irreps[s].dim;
    if (m.rows() != d || m.cols() != d) throw DocumentError(ErrorCode::SizeMismatch, join(p, "matrix") + ": wrong size");
    z.at(o, s) = std::move(m);
  }
  for (const auto& v : z.values)
    if (v.size() == 0) schema_fail("/values", "missing (representative, irrep) block");
  return z;
}

Json lattice_to_json(const LatticeZakGrid& g) {
  Json j;
  j["kind"] = "lattice_zak";
  j["cells"] = g.shape.cells;
  j["periods"] = g.shape.periods;
  Json values = Json::array();
  for (const auto& v : g.values) values.push_back(to_json(v));
  j["values"] = std::move(values);
  return j;
}

LatticeZakGrid lattice_from_json(const Json& j) {
  check_keys(j, "", {"kind", "cells", "periods", "values"});
  if (as_string(j.at("kind"), "/kind") != "lattice_zak") schema_fail("/kind", "expected 'lattice_zak'");
  LatticeZakGrid g;
  g.shape.cells = as_int_vector(j.at("cells"), "/cells");
  g.shape.periods = as_int_vector(j.at("periods"), "/periods");
  if (g.shape.cells.empty() || g.shape.cells.size() != g.shape.periods.size())
    throw DocumentError(ErrorCode::ShapeMismatch, "/periods: must match /cells in length");
  for (std::size_t a = 0; a < g.shape.cells.size(); ++a)
    if (g.shape.cells[a] <= 0 || g.shape.periods[a] <= 0) schema_fail("/cells", "sizes must be positive");
  const CVector v = as_complex_vector(j.at("values"), "/values");
  if (v.size() != g.shape.grid_size())
    throw DocumentError(ErrorCode::SizeMismatch, "/values: expected " + std::to_string(g.shape.grid_size()));
  g.values.assign(v.data(), v.data() + v.size());
  return g;
}

bool is_binary(std::string_view bytes) { return bytes.size() >= 4 && bytes.substr(0, 4) == "ZAK1"; }

std::uint32_t binary_kind(std::string_view bytes) {
  Reader r{bytes, 4};
  if (!is_binary(bytes)) throw DocumentError(ErrorCode::ParseError, "missing ZAK1 magic");
  return static_cast<std::uint32_t>(r.uint(4));
}

std::string zak_to_binary(const ZakCoefficients& z) {
  std::vector<std::uint64_t> dims{static_cast<std::uint64_t>(z.space.orbits.num_orbits()),
                                  static_cast<std::uint64_t>(z.dual.size())};
  for (const auto& s : z.dual.irreps) dims.push_back(static_cast<std::uint64_t>(s.dim));
  std::string out = binary_header(kBinaryCoefficients, dims);
  for (const auto& m : z.values)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        put_f64(out, m(r, c).real());
        put_f64(out, m(r, c).imag());
      }
  return out;
}

ZakCoefficients zak_from_binary(std::string_view bytes, const WeilSpace& space, const DualObject& dual) {
  Reader r{bytes};
  const auto dims = read_header(r, kBinaryCoefficients);
  if (dims.size() < 2 || dims[0] != static_cast<std::uint64_t>(space.orbits.num_orbits()) ||
      dims[1] != static_cast<std::uint64_t>(dual.size()) || dims.size() != 2 + dual.irreps.size())
    throw DocumentError(ErrorCode::SizeMismatch, "binary dims do not match the action and dual");
  for (std::size_t s = 0; s < dual.irreps.size(); ++s)
    if (dims[2 + s] != static_cast<std::uint64_t>(dual.irreps[s].dim))
      throw DocumentError(ErrorCode::SizeMismatch, "binary irrep dimension mismatch at " + std::to_string(s));
  check_dual_matches(space.action, dual);
  ZakCoefficients z{space, dual, {}};
  for (int o = 0; o < space.orbits.num_orbits(); ++o)
    for (const auto& s : dual.irreps) {
      CMatrix m(s.dim, s.dim);
      for (int a = 0; a < s.dim; ++a)
        for (int b = 0; b < s.dim; ++b) m(a, b) = r.complex();
      z.values.push_back(std::move(m));
    }
  if (r.pos != bytes.size()) throw DocumentError(ErrorCode::ParseError, "trailing bytes after coefficients");
  return z;
}

std::string lattice_to_binary(const LatticeZakGrid& g) {
  std::vector<std::uint64_t> dims{static_cast<std::uint64_t>(g.shape.dims())};
  for (int c : g.shape.cells) dims.push_back(static_cast<std::uint64_t>(c));
  for (int p : g.shape.periods) dims.push_back(static_cast<std::uint64_t>(p));
  std::string out = binary_header(kBinaryLattice, dims);
  for (const auto& v : g.values) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  return out;
}

LatticeZakGrid lattice_from_binary(std::string_view bytes) {
  Reader r{bytes};
  const auto dims = read_header(r, kBinaryLattice);
  if (dims.empty() || dims[0] == 0 || dims.size() != 1 + 2 * dims[0])
    throw DocumentError(ErrorCode::ShapeMismatch, "lattice binary dims malformed");
  LatticeZakGrid g;
  const std::size_t d = dims[0];
  for (std::size_t a = 0; a < d; ++a) {
    g.shape.cells.push_back(static_cast<int>(dims[1 + a]));
    g.shape.periods.push_back(static_cast<int>(dims[1 + d + a]));
    if (g.shape.cells.back() <= 0 || g.shape.periods.back() <= 0)
      throw DocumentError(ErrorCode::ShapeMismatch, "lattice binary has an empty axis");
  }
  const long n = g.shape.grid_size();
  if (bytes.size() - r.pos != static_cast<std::size_t>(n) * 16)
    throw DocumentError(ErrorCode::ParseError, "lattice binary payload size mismatch");
  g.values.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) g.values.push_back(r.complex());
  return g;
}

IsometryElement isometry_from_json(const Json& j, int dim, const std::string& path) {
  check_keys(j, path, {"Q", "c"});
  IsometryElement e{as_real_matrix(j.at("Q"), join(path, "Q")), as_real_vector(j.at("c"), join(path, "c"))};
  if (e.Q.rows() != dim || e.Q.cols() != dim || e.c.size() != dim)
    throw DocumentError(ErrorCode::DimensionMismatch, path + ": element is not " + std::to_string(dim) + "-dimensional");
  validate_isometry(e);
  return e;
}

Json isometry_to_json(const IsometryElement& e) {
  Json j;
  j["Q"] = to_json(e.Q);
  j["c"] = to_json(e.c);
  return j;
}

IsometryGroupSpec isometry_spec_from_json(const Json& j, const std::string& path,
                                          std::initializer_list<const char*> extra_keys) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.rfind("bundled:", 0) != 0) schema_fail(path, "group string must be 'bundled:<name>'");
    try {
      return bundled_isometry(s.substr(8));
    } catch (const Error& e) {
      schema_fail(path, e.what());
    }
  }
  std::vector<const char*> optional{"truncation"};
  optional.insert(optional.end(), extra_keys.begin(), extra_keys.end());
  if (!j.is_object()) schema_fail(path, "expected object");
  for (const char* k : {"dim", "generators"})
    if (!j.contains(k)) schema_fail(path, std::string("missing required key '") + k + "'");
  for (const auto& item : j.items())
    if (item.key() != "dim" && item.key() != "generators" &&
        std::none_of(optional.begin(), optional.end(), [&](const char* k) { return item.key() == k; }))
      schema_fail(path, "unknown key '" + item.key() + "'");

  IsometryGroupSpec spec;
  spec.dim = as_int(j.at("dim"), join(path, "dim"));
  if (spec.dim != 2 && spec.dim != 3)
    throw DocumentError(ErrorCode::DimensionMismatch, join(path, "dim") + ": must be 2 or 3");
  const Json& gens = j.at("generators");
  if (!gens.is_array()) schema_fail(join(path, "generators"), "expected array");
  for (std::size_t i = 0; i < gens.size(); ++i)
    spec.generators.push_back(isometry_from_json(gens[i], spec.dim, join(join(path, "generators"), i)));
  if (j.contains("truncation")) {
    const std::string tp = join(path, "truncation");
    const Json& t = j.at("truncation");
    check_keys(t, tp, {}, {"word_length", "radius", "tolerance"});
    if (t.contains("word_length")) spec.truncation.word_length = as_int(t.at("word_length"), join(tp, "word_length"));
    if (t.contains("radius")) spec.truncation.radius = as_double(t.at("radius"), join(tp, "radius"));
    if (t.contains("tolerance")) spec.truncation.tolerance = as_double(t.at("tolerance"), join(tp, "tolerance"));
  }
  validate_spec(spec);
  return spec;
}

ChainModel chain_from_json(const Json& j) {
  check_keys(j, "", {"t", "M", "N", "V"});
  ChainModel m;
  m.t = as_double(j.at("t"), "/t");
  m.cells = as_int(j.at("M"), "/M");
  m.periods = as_int(j.at("N"), "/N");
  m.onsite = as_double_vector(j.at("V"), "/V");
  validate_chain(m);
  return m;
}

}  // namespace zakspace::io
