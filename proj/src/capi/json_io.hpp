#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "zakspace/bloch.hpp"
#include "zakspace/error.hpp"
#include "zakspace/euclid.hpp"
#include "zakspace/lattice_zak.hpp"
#include "zakspace/zak.hpp"

namespace zakspace::io {

using Json = nlohmann::ordered_json;

// Error with a source position (1-based; 0 when unknown).
class DocumentError : public Error {
 public:
  DocumentError(ErrorCode code, const std::string& message, int line = 0, int column = 0)
      : Error(code, message), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] void schema_fail(const std::string& path, const std::string& message);

// ParseError carries line and column.
Json parse_json(std::string_view text);
std::string dump(const Json& j);  // two-space indent, trailing newline

void check_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {});
const Json& member(const Json& obj, const char* key, const std::string& path);
bool has(const Json& obj, const char* key);

int as_int(const Json& j, const std::string& path);
double as_double(const Json& j, const std::string& path);
bool as_bool(const Json& j, const std::string& path);
std::string as_string(const Json& j, const std::string& path);
std::vector<int> as_int_vector(const Json& j, const std::string& path);
std::vector<double> as_double_vector(const Json& j, const std::string& path);
std::vector<std::vector<int>> as_int_matrix(const Json& j, const std::string& path);
RMatrix as_real_matrix(const Json& j, const std::string& path);
RVector as_real_vector(const Json& j, const std::string& path);
// [re, im] pair or plain number.
cplx as_complex(const Json& j, const std::string& path);
CVector as_complex_vector(const Json& j, const std::string& path);
// Rows of [re, im] pairs.
CMatrix as_complex_matrix(const Json& j, const std::string& path);

Json to_json(cplx z);
Json to_json(const CVector& v);
Json to_json(const CMatrix& m);
Json to_json(const RMatrix& m);
Json to_json(const RVector& v);
Json to_json(const CheckReport& r);

// {"order", "table", "points", "perm", "weights"}, or the string
// "bundled:<name>".
GroupAction action_from_json(const Json& j, const std::string& path);
Json action_to_json(const GroupAction& a);

// {"order", "table"} or a catalog name string.
FiniteGroup group_from_json(const Json& j, const std::string& path);

Json dual_to_json(const DualObject& d);
DualObject dual_from_json(const Json& j, const FiniteGroup& group, const std::string& path);

Json zak_to_json(const ZakCoefficients& z);
ZakCoefficients zak_from_json(const Json& j);

Json lattice_to_json(const LatticeZakGrid& g);
LatticeZakGrid lattice_from_json(const Json& j);

// "ZAK1", uint32 kind, uint32 ndims, uint64 dims[ndims], float64 re/im pairs,
// all little-endian. kind 1 dims = [n_reps, n_irreps, d_0, ...]; kind 2 dims
// = [d, cells..., periods...].
constexpr std::uint32_t kBinaryCoefficients = 1;
constexpr std::uint32_t kBinaryLattice = 2;
bool is_binary(std::string_view bytes);
std::uint32_t binary_kind(std::string_view bytes);
std::string zak_to_binary(const ZakCoefficients& z);
// Coefficient values need the action and dual they were computed against.
ZakCoefficients zak_from_binary(std::string_view bytes, const WeilSpace& space, const DualObject& dual);
std::string lattice_to_binary(const LatticeZakGrid& g);
LatticeZakGrid lattice_from_binary(std::string_view bytes);

IsometryElement isometry_from_json(const Json& j, int dim, const std::string& path);
Json isometry_to_json(const IsometryElement& e);
// {"dim", "generators": [{"Q", "c"}], "truncation": {...}} or "bundled:<name>".
IsometryGroupSpec isometry_spec_from_json(const Json& j, const std::string& path,
                                          std::initializer_list<const char*> extra_keys = {});

ChainModel chain_from_json(const Json& j);

}  // namespace zakspace::io
