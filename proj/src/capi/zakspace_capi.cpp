#include "zakspace/zakspace.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "documents.hpp"
#include "json_io.hpp"
#include "suite.hpp"

struct zs_action {
  zakspace::WeilSpace space;
};
struct zs_dual {
  zakspace::DualObject dual;
};
struct zs_zak {
  zakspace::ZakCoefficients coeffs;
};

namespace {

using zakspace::ErrorCode;

thread_local std::string g_message;
thread_local std::string g_json;

void set_error(ErrorCode code, const std::string& message, int line = 0, int column = 0) {
  g_message = message;
  zakspace::io::Json j;
  j["error"] = zakspace::error_code_name(code);
  j["code"] = static_cast<int>(code);
  j["message"] = message;
  if (line > 0) {
    j["line"] = line;
    j["column"] = column;
  }
  g_json = j.dump();
}

template <class Fn>
zs_status guarded(Fn&& fn) {
  g_message.clear();
  g_json.clear();
  try {
    fn();
    return ZS_OK;
  } catch (const zakspace::io::DocumentError& e) {
    set_error(e.code(), e.what(), e.line(), e.column());
    return static_cast<zs_status>(e.code());
  } catch (const zakspace::Error& e) {
    set_error(e.code(), e.what());
    return static_cast<zs_status>(e.code());
  } catch (const std::bad_alloc&) {
    set_error(ErrorCode::Internal, "out of memory");
  } catch (const std::exception& e) {
    set_error(ErrorCode::Internal, e.what());
  } catch (...) {
    set_error(ErrorCode::Internal, "unknown exception");
  }
  return ZS_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) zakspace::fail(ErrorCode::InvalidArgument, what);
}

void emit(const std::string& s, char** out, size_t* len) {
  require(out != nullptr, "null output pointer");
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.data(), s.size());
  buf[s.size()] = '\0';
  *out = buf;
  if (len) *len = s.size();
}

zakspace::docs::RunOptions run_options(const zs_options* o) {
  zakspace::docs::RunOptions r;
  if (o) {
    r.seed = o->seed;
    r.jobs = o->jobs < 1 ? 1 : o->jobs;
    r.tol = o->tol;
  }
  return r;
}

zakspace::CVector read_function(const double* f, size_t points) {
  require(f != nullptr, "null function pointer");
  zakspace::CVector v(static_cast<Eigen::Index>(points));
  for (size_t i = 0; i < points; ++i) v[static_cast<Eigen::Index>(i)] = {f[2 * i], f[2 * i + 1]};
  return v;
}

template <class Doc>
zs_status run_doc(Doc&& doc, char** out, size_t* len, int* pass) {
  return guarded([&] {
    const zakspace::docs::DocResult r = doc();
    emit(r.output, out, len);
    if (pass) *pass = r.pass ? 1 : 0;
  });
}

}  // namespace

extern "C" {

const char* zs_version(void) { return "0.1.0"; }

const char* zs_status_name(zs_status status) { return zakspace::error_code_name(static_cast<ErrorCode>(status)); }

void zs_options_default(zs_options* opts) {
  if (!opts) return;
  opts->seed = 0;
  opts->jobs = 1;
  opts->tol = 0.0;
}

const char* zs_last_error_message(void) { return g_message.c_str(); }
const char* zs_last_error_json(void) { return g_json.c_str(); }

void zs_free_buffer(char* data) { std::free(data); }

zs_status zs_action_from_json(const char* json, zs_action** out) {
  return guarded([&] {
    require(json && out, "null argument");
    const auto j = zakspace::io::parse_json(json);
    *out = new zs_action{zakspace::WeilSpace::build(zakspace::io::action_from_json(j, ""))};
  });
}

void zs_action_free(zs_action* action) { delete action; }
int zs_action_points(const zs_action* a) { return a ? a->space.action.points() : -1; }
int zs_action_order(const zs_action* a) { return a ? a->space.action.group().order() : -1; }
int zs_action_orbits(const zs_action* a) { return a ? a->space.orbits.num_orbits() : -1; }

zs_status zs_dual_compute(const zs_action* action, const char* hint, uint64_t seed, zs_dual** out) {
  return guarded([&] {
    require(action && out, "null argument");
    *out = new zs_dual{zakspace::irreps(action->space.action.group(), hint ? hint : "", seed)};
  });
}

void zs_dual_free(zs_dual* dual) { delete dual; }
int zs_dual_size(const zs_dual* d) { return d ? d->dual.size() : -1; }
int zs_dual_dim(const zs_dual* d, int i) { return d && i >= 0 && i < d->dual.size() ? d->dual.irreps[i].dim : -1; }

zs_status zs_zak_forward(const zs_action* action, const zs_dual* dual, const double* f, size_t points, int jobs,
                         zs_zak** out) {
  return guarded([&] {
    require(action && dual && out, "null argument");
    if (static_cast<int>(points) != action->space.action.points())
      zakspace::fail(ErrorCode::SizeMismatch, "function length does not match the action");
    *out = new zs_zak{zakspace::zak(action->space, read_function(f, points), dual->dual, jobs)};
  });
}

zs_status zs_zak_inverse(const zs_zak* z, double* f_out, size_t points) {
  return guarded([&] {
    require(z && f_out, "null argument");
    if (static_cast<int>(points) != z->coeffs.space.action.points())
      zakspace::fail(ErrorCode::SizeMismatch, "output length does not match the action");
    const zakspace::CVector f = zakspace::zak_inverse(z->coeffs, 1e-10);
    for (size_t i = 0; i < points; ++i) {
      f_out[2 * i] = f[static_cast<Eigen::Index>(i)].real();
      f_out[2 * i + 1] = f[static_cast<Eigen::Index>(i)].imag();
    }
  });
}

zs_status zs_zak_to_json(const zs_zak* z, char** out, size_t* len) {
  return guarded([&] {
    require(z != nullptr, "null argument");
    emit(zakspace::io::dump(zakspace::io::zak_to_json(z->coeffs)), out, len);
  });
}

zs_status zs_zak_from_json(const char* json, zs_zak** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new zs_zak{zakspace::io::zak_from_json(zakspace::io::parse_json(json))};
  });
}

zs_status zs_zak_to_binary(const zs_zak* z, char** out, size_t* len) {
  return guarded([&] {
    require(z != nullptr, "null argument");
    emit(zakspace::io::zak_to_binary(z->coeffs), out, len);
  });
}

zs_status zs_zak_from_binary(const char* data, size_t len, const zs_action* action, const zs_dual* dual,
                             zs_zak** out) {
  return guarded([&] {
    require(data && action && dual && out, "null argument");
    *out = new zs_zak{zakspace::io::zak_from_binary(std::string_view(data, len), action->space, dual->dual)};
  });
}

zs_status zs_zak_verify(const zs_zak* z, const double* f, size_t points, double tol, char** report, size_t* len,
                        int* pass) {
  return guarded([&] {
    require(z != nullptr, "null argument");
    if (static_cast<int>(points) != z->coeffs.space.action.points())
      zakspace::fail(ErrorCode::SizeMismatch, "function length does not match the action");
    const zakspace::CVector fv = read_function(f, points);
    const double t = tol > 0 ? tol : 1e-10;
    const auto u = zakspace::verify_unitarity(z->coeffs, fv);
    const zakspace::CVector back = zakspace::zak_inverse(z->coeffs, 1e-9);
    const double scale = std::max(1.0, fv.cwiseAbs().maxCoeff());
    const auto r_norm = zakspace::make_report("norm_identity", u.residual / std::max(1.0, u.lhs), t);
    const auto r_inv = zakspace::make_report("round_trip", (back - fv).cwiseAbs().maxCoeff() / scale, t);
    zakspace::io::Json j;
    j["checks"] = zakspace::io::Json::array({zakspace::io::to_json(r_norm), zakspace::io::to_json(r_inv)});
    j["pass"] = r_norm.pass && r_inv.pass;
    emit(zakspace::io::dump(j), report, len);
    if (pass) *pass = r_norm.pass && r_inv.pass;
  });
}

void zs_zak_free(zs_zak* z) { delete z; }

zs_status zs_group_inspect_json(const char* input, const zs_options* o, char** out, size_t* len, int* pass) {
  return run_doc([&] { require(input, "null input"); return zakspace::docs::group_inspect(input, run_options(o)); },
                 out, len, pass);
}

zs_status zs_zak_forward_doc(const char* config, const zs_options* o, int binary, char** out, size_t* len) {
  return run_doc([&] {
    require(config, "null input");
    return zakspace::docs::zak_forward(config, run_options(o), binary != 0);
  }, out, len, nullptr);
}

zs_status zs_zak_inverse_doc(const char* data, size_t data_len, const char* context, const zs_options* o,
                             char** out, size_t* len) {
  return run_doc([&] {
    require(data, "null input");
    return zakspace::docs::zak_inverse(std::string_view(data, data_len), context ? context : "", run_options(o));
  }, out, len, nullptr);
}

zs_status zs_zak_verify_json(const char* config, const zs_options* o, char** out, size_t* len, int* pass) {
  return run_doc([&] { require(config, "null input"); return zakspace::docs::zak_verify(config, run_options(o)); },
                 out, len, pass);
}

zs_status zs_lattice_zak_forward_json(const char* config, const zs_options* o, int binary, char** out,
                                      size_t* len) {
  return run_doc([&] {
    require(config, "null input");
    return zakspace::docs::lattice_zak(config, run_options(o), binary != 0);
  }, out, len, nullptr);
}

zs_status zs_poisson_check_json(const char* config, const zs_options* o, char** out, size_t* len, int* pass) {
  return run_doc([&] { require(config, "null input"); return zakspace::docs::poisson_check(config, run_options(o)); },
                 out, len, pass);
}

zs_status zs_bands_run_csv(const char* model, const zs_options* o, char** out, size_t* len) {
  return run_doc([&] { require(model, "null input"); return zakspace::docs::bands_run(model, run_options(o)); },
                 out, len, nullptr);
}

zs_status zs_bands_check_json(const char* model, const zs_options* o, char** out, size_t* len, int* pass) {
  return run_doc([&] { require(model, "null input"); return zakspace::docs::bands_check(model, run_options(o)); },
                 out, len, pass);
}

zs_status zs_euclid_generate_json(const char* spec, const zs_options* o, char** out, size_t* len) {
  return run_doc([&] { require(spec, "null input"); return zakspace::docs::euclid_generate(spec, run_options(o)); },
                 out, len, nullptr);
}

zs_status zs_euclid_certify_json(const char* spec, const zs_options* o, char** out, size_t* len, int* pass) {
  return run_doc([&] { require(spec, "null input"); return zakspace::docs::euclid_certify(spec, run_options(o)); },
                 out, len, pass);
}

zs_status zs_diffract_run_csv(const char* config, const zs_options* o, char** out, size_t* len) {
  return run_doc([&] { require(config, "null input"); return zakspace::docs::diffract_run(config, run_options(o)); },
                 out, len, nullptr);
}

zs_status zs_diffract_verify_json(const char* config, const zs_options* o, char** out, size_t* len, int* pass) {
  return run_doc([&] {
    require(config, "null input");
    return zakspace::docs::diffract_verify(config, run_options(o));
  }, out, len, pass);
}

zs_status zs_suite_all_json(const zs_options* o, char** out, size_t* len, int* pass) {
  return run_doc([&] { return zakspace::suite::suite_all(run_options(o)); }, out, len, pass);
}

}  // extern "C"
