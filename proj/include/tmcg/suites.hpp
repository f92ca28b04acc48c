// Verification suites: each returns a Report of independent pass/fail entries.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tmcg/bgroup.hpp"
#include "tmcg/report.hpp"
#include "tmcg/surface.hpp"

namespace tmcg {

struct SuiteOptions {
  std::optional<int> n;                ///< extra puncture count, added to each suite's standard range
  std::optional<FiberConfig> fibers;   ///< extra configuration for the kernel suite
  IntersectionOptions geometry;
};

/// relations, dictionary, lattice, kernel, properties, all.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite name.
Report run_suite(const std::string& name, const SuiteOptions& opts = {});

/// Intersection number that is 0 for homotopic curves.
int intersection_or_zero(const TorusModel& model, const Curve& a, const Curve& b, IntersectionOptions opts = {});

}  // namespace tmcg
