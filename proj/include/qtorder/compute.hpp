#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtorder/report.hpp"

namespace qtorder {

/// Arguments shared by the compute subjects; unset fields take per-subject
/// defaults.
struct ComputeArgs {
  std::optional<std::string> map;      // path to a JSON lift, or inline JSON
  std::optional<std::string> word;     // free or modular word
  std::string pattern = "ab";
  std::optional<std::string> braid;
  int strands = 3;
  std::optional<long long> iters;
  std::optional<int> radius;
  std::optional<std::string> u, v, g, h;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& compute_subjects();
/// Name of the first report a subject emits ("rotation" -> "rotation_number").
std::string compute_quantity(const std::string& subject);

/// Reports for one subject. Library errors propagate as qtorder::Error.
std::vector<Report> run_compute(const std::string& subject, const ComputeArgs& args);

}  // namespace qtorder
