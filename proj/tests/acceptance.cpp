// Runs the nine acceptance criteria and prints one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "suite.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runtime budgets in seconds; 0 = none stated.
double budget(int k) {
  switch (k) {
    case 1: return 1.0;
    case 3: return 5.0;
    case 8: return 2.0;
    case 9: return 60.0;
    default: return 0.0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  int failed = 0;
  for (int k = 1; k <= zakspace::suite::kCriteria; ++k) {
    const auto t0 = Clock::now();
    int checks = 0, bad = 0;
    double worst = 0.0;
    std::string first_bad;
    if (k < 9) {
      for (const auto& c : zakspace::suite::run_criterion(k, seed, 1)) {
        ++checks;
        if (c.tolerance > 0) worst = std::max(worst, c.residual / c.tolerance);
        if (!c.pass) {
          if (!bad) first_bad = c.name;
          ++bad;
        }
      }
    } else {
      zakspace::docs::RunOptions one, many;
      one.seed = many.seed = seed;
      many.jobs = 8;
      const auto a = zakspace::suite::suite_all(one);
      const auto b = zakspace::suite::suite_all(many);
      checks = 3;
      if (!a.pass || !b.pass) {
        ++bad;
        first_bad = "suite_all_pass";
      }
      if (a.output != b.output) {
        if (!bad) first_bad = "reports_byte_identical";
        ++bad;
      }
    }
    const double t = seconds_since(t0);
    const double limit = budget(k);
    if (limit > 0 && t >= limit) {
      if (!bad) first_bad = "runtime";
      ++bad;
    }
    const bool ok = bad == 0;
    if (!ok) ++failed;
    std::printf("%s criterion %d %-28s checks=%d worst_ratio=%.2e time=%.3fs%s%s\n", ok ? "PASS" : "FAIL", k,
                zakspace::suite::criterion_name(k), checks, worst, t, ok ? "" : " first_failure=",
                ok ? "" : first_bad.c_str());
  }
  return failed ? 1 : 0;
}
