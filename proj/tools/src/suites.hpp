#pragma once

// Verification suites; each returns a deterministic Report.

#include <optional>
#include <string>
#include <vector>

#include "alcovekit/rootsys.hpp"
#include "config.hpp"
#include "report.hpp"

namespace alcovekit::cli {

struct SuiteOptions {
  std::optional<CartanType> type;
  std::optional<int> kmax;
  std::optional<int> max_length;
  std::optional<int> max_cas;
  std::optional<int> m;
};

const std::vector<std::string>& suite_names();
// True if the suite needs --type.
bool suite_needs_type(const std::string& name);
// Throws std::invalid_argument for an unknown suite and ScaleError above ceilings.
Report run_suite(const std::string& name, const SuiteOptions& opts, const Config& cfg);

// Shared helpers, also used by the plain commands.
std::uint64_t predicted_alcove_count(const RootSystem& rs, int max_length);
void require_enumerable(const RootSystem& rs, int max_length, const Config& cfg);

}  // namespace alcovekit::cli
