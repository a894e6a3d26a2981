#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "documents.hpp"

namespace zakspace::suite {

struct Check {
  int criterion = 0;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

constexpr int kCriteria = 9;
const char* criterion_name(int criterion);

// Checks for one acceptance criterion (1..9). Criterion 9 is the parallel
// determinism of the numerics; the byte comparison of whole reports is done
// by the callers.
std::vector<Check> run_criterion(int criterion, std::uint64_t seed, int jobs);

// JSON report; deliberately free of timings and of the job count.
std::string report_json(const std::vector<Check>& checks, std::uint64_t seed);

docs::DocResult suite_all(const docs::RunOptions& opts);

}  // namespace zakspace::suite
