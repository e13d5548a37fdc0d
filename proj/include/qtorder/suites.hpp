#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtorder/mobius.hpp"
#include "qtorder/report.hpp"

namespace qtorder {

struct SuiteOptions {
  std::optional<int> radius;     // ball radius for exhaustive items
  std::optional<long long> iters;  // iteration count for limits
  std::uint64_t seed = 0;          // drives sampling only
};

const std::vector<std::string>& suite_names();

/// Reports in declaration order. "all" concatenates every suite.
std::vector<Report> run_suite(const std::string& suite, const SuiteOptions& opt);

/// Lifts to the universal cover of PSL2(R) used by the bounded-orbit checks.
struct HyperbolicFixture {
  std::string name;
  std::vector<MobiusLift> generators;
  double base = 0.5;
  bool expect_bounded = false;
};

std::vector<HyperbolicFixture> hyperbolic_fixtures();

}  // namespace qtorder
