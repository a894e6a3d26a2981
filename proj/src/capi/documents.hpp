#pragma once

// Command-level operations on JSON documents. Each returns the bytes to
// write (JSON, CSV or ZAK1 binary) and, for verifying commands, pass/fail.

#include <cstdint>
#include <string>
#include <string_view>

namespace zakspace::docs {

struct RunOptions {
  std::uint64_t seed = 0;
  int jobs = 1;
  double tol = 0.0;  // > 0 overrides the per-check defaults
};

struct DocResult {
  std::string output;
  bool pass = true;
};

DocResult group_inspect(std::string_view input, const RunOptions& opts);

// Config with "action" (finite action) or "lattice" (classic Zak).
DocResult zak_forward(std::string_view config, const RunOptions& opts, bool binary);
// Coefficients as JSON or ZAK1 binary. Binary action coefficients need the
// forward config as context.
DocResult zak_inverse(std::string_view coefficients, std::string_view context, const RunOptions& opts);
DocResult zak_verify(std::string_view config, const RunOptions& opts);
DocResult lattice_zak(std::string_view config, const RunOptions& opts, bool binary);

DocResult poisson_check(std::string_view config, const RunOptions& opts);

DocResult bands_run(std::string_view model, const RunOptions& opts);
DocResult bands_check(std::string_view model, const RunOptions& opts);

DocResult euclid_generate(std::string_view spec, const RunOptions& opts);
DocResult euclid_certify(std::string_view spec, const RunOptions& opts);

DocResult diffract_run(std::string_view config, const RunOptions& opts);
DocResult diffract_verify(std::string_view config, const RunOptions& opts);

}  // namespace zakspace::docs
