// zakspace command-line front end; uses only the C API.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zakspace/zakspace.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Globals {
  std::uint64_t seed = 0;
  int jobs = 1;
  double tol = 0.0;
  std::string out;
};

std::string json_escape(const std::string& s) {
  std::string r;
  for (char ch : s) {
    switch (ch) {
      case '"': r += "\\\""; break;
      case '\\': r += "\\\\"; break;
      case '\n': r += "\\n"; break;
      case '\t': r += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          r += buf;
        } else {
          r += ch;
        }
    }
  }
  return r;
}

void diagnose(const std::string& error, int code, const std::string& message) {
  std::cerr << "{\"error\":\"" << json_escape(error) << "\",\"code\":" << code << ",\"message\":\""
            << json_escape(message) << "\"}\n";
}

struct InputError {
  std::string message;
};

// Relative paths fall back to $ZAKSPACE_DATA.
std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::filesystem::path p(path);
  if (!std::filesystem::exists(p) && p.is_relative()) {
    if (const char* root = std::getenv("ZAKSPACE_DATA")) {
      const auto alt = std::filesystem::path(root) / p;
      if (std::filesystem::exists(alt)) p = alt;
    }
  }
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const Globals& g, const char* data, size_t len) {
  if (g.out.empty() || g.out == "-") {
    std::cout.write(data, static_cast<std::streamsize>(len));
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw InputError{"cannot write '" + g.out + "'"};
  f.write(data, static_cast<std::streamsize>(len));
}

zs_options options(const Globals& g) {
  zs_options o;
  zs_options_default(&o);
  o.seed = g.seed;
  o.jobs = g.jobs;
  o.tol = g.tol;
  return o;
}

// Status -> exit code; the payload is written only on success.
int finish(const Globals& g, zs_status st, char* buf, size_t len, int pass) {
  if (st != ZS_OK) {
    const char* j = zs_last_error_json();
    std::cerr << (j && *j ? j : "{\"error\":\"Internal\",\"code\":99,\"message\":\"unknown\"}") << "\n";
    return kExitInput;
  }
  write_output(g, buf, len);
  zs_free_buffer(buf);
  return pass ? kExitPass : kExitFail;
}

using Verified = zs_status (*)(const char*, const zs_options*, char**, size_t*, int*);
using Produced = zs_status (*)(const char*, const zs_options*, char**, size_t*);

int run_verified(const Globals& g, Verified fn, const std::string& path) {
  const std::string in = read_input(path);
  const zs_options o = options(g);
  char* buf = nullptr;
  size_t len = 0;
  int pass = 0;
  const zs_status st = fn(in.c_str(), &o, &buf, &len, &pass);
  return finish(g, st, buf, len, pass);
}

int run_produced(const Globals& g, Produced fn, const std::string& path) {
  const std::string in = read_input(path);
  const zs_options o = options(g);
  char* buf = nullptr;
  size_t len = 0;
  const zs_status st = fn(in.c_str(), &o, &buf, &len);
  return finish(g, st, buf, len, 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zakspace: Zak transforms on finite group actions, lattices and isometry groups"};
  app.set_version_flag("--version", std::string(zs_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "seed for random test functions and irrep splitting");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--tol", g.tol, "override the default tolerance of verifying commands")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output file (default stdout)");

  std::string file, context;
  bool binary = false;
  int code = kExitPass;
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "input document")->required(); };

  auto* group = app.add_subcommand("group", "finite group actions")->require_subcommand(1);
  auto* g_inspect = group->add_subcommand("inspect", "orbits, measures and dual of an action");
  add_file(g_inspect);
  g_inspect->callback([&] { code = run_verified(g, zs_group_inspect_json, file); });

  auto* zak = app.add_subcommand("zak", "Zak transform on a finite action or a lattice")->require_subcommand(1);
  auto* z_fwd = zak->add_subcommand("forward", "coefficients Z(x0, sigma) or Z(x0, k)");
  add_file(z_fwd);
  z_fwd->add_flag("--binary", binary, "write ZAK1 binary instead of JSON");
  z_fwd->callback([&] {
    const std::string in = read_input(file);
    const zs_options o = options(g);
    char* buf = nullptr;
    size_t len = 0;
    const zs_status st = zs_zak_forward_doc(in.c_str(), &o, binary ? 1 : 0, &buf, &len);
    code = finish(g, st, buf, len, 1);
  });
  auto* z_inv = zak->add_subcommand("inverse", "function from coefficients (JSON or ZAK1)");
  add_file(z_inv);
  z_inv->add_option("--context", context, "forward config (needed for binary action coefficients)");
  z_inv->callback([&] {
    const std::string in = read_input(file);
    const std::string ctx = context.empty() ? std::string() : read_input(context);
    const zs_options o = options(g);
    char* buf = nullptr;
    size_t len = 0;
    const zs_status st = zs_zak_inverse_doc(in.data(), in.size(), ctx.c_str(), &o, &buf, &len);
    code = finish(g, st, buf, len, 1);
  });
  auto* z_ver = zak->add_subcommand("verify", "inversion, norm identity, intertwining and support checks");
  add_file(z_ver);
  z_ver->callback([&] { code = run_verified(g, zs_zak_verify_json, file); });

  auto* lattice = app.add_subcommand("lattice", "classic Zak transform")->require_subcommand(1);
  auto* l_zak = lattice->add_subcommand("zak", "Z(x0, k) of sampled data by FFT");
  add_file(l_zak);
  l_zak->add_flag("--binary", binary, "write ZAK1 binary instead of JSON");
  l_zak->callback([&] {
    const std::string in = read_input(file);
    const zs_options o = options(g);
    char* buf = nullptr;
    size_t len = 0;
    const zs_status st = zs_lattice_zak_forward_json(in.c_str(), &o, binary ? 1 : 0, &buf, &len);
    code = finish(g, st, buf, len, 1);
  });

  auto* poisson = app.add_subcommand("poisson", "Poisson summation")->require_subcommand(1);
  auto* p_check = poisson->add_subcommand("check", "both sides on deltas and random functions");
  add_file(p_check);
  p_check->callback([&] { code = run_verified(g, zs_poisson_check_json, file); });

  auto* bands = app.add_subcommand("bands", "Bloch bands of a periodic chain")->require_subcommand(1);
  auto* b_run = bands->add_subcommand("run", "band table as CSV");
  add_file(b_run);
  b_run->callback([&] { code = run_produced(g, zs_bands_run_csv, file); });
  auto* b_check = bands->add_subcommand("check", "bands against the dense ring and the block route");
  add_file(b_check);
  b_check->callback([&] { code = run_verified(g, zs_bands_check_json, file); });

  auto* euclid = app.add_subcommand("euclid", "groups of Euclidean isometries")->require_subcommand(1);
  auto* e_gen = euclid->add_subcommand("generate", "truncated closure of the generators");
  add_file(e_gen);
  e_gen->callback([&] { code = run_produced(g, zs_euclid_generate_json, file); });
  auto* e_cert = euclid->add_subcommand("certify", "abelian normal subgroup of finite index");
  add_file(e_cert);
  e_cert->callback([&] { code = run_verified(g, zs_euclid_certify_json, file); });

  auto* diffract = app.add_subcommand("diffract", "symmetry-resolved radiation")->require_subcommand(1);
  auto* d_run = diffract->add_subcommand("run", "intensity pattern as CSV");
  add_file(d_run);
  d_run->callback([&] { code = run_produced(g, zs_diffract_run_csv, file); });
  auto* d_ver = diffract->add_subcommand("verify", "channel sum against the direct transform");
  add_file(d_ver);
  d_ver->callback([&] { code = run_verified(g, zs_diffract_verify_json, file); });

  auto* suite = app.add_subcommand("suite", "acceptance checks")->require_subcommand(1);
  auto* s_all = suite->add_subcommand("all", "every check, deterministic JSON report");
  s_all->callback([&] {
    const zs_options o = options(g);
    char* buf = nullptr;
    size_t len = 0;
    int pass = 0;
    const zs_status st = zs_suite_all_json(&o, &buf, &len, &pass);
    code = finish(g, st, buf, len, pass);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnose("UsageError", kExitInput, e.what());
    return kExitInput;
  } catch (const InputError& e) {
    diagnose("IoError", ZS_IO_ERROR, e.message);
    return kExitInput;
  }
  return code;
}
