#pragma once

// Scale ceilings for the driver, with an optional JSON override file.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace alcovekit::cli {

// Raised when a request exceeds a configured ceiling.
struct ScaleError : std::length_error {
  using std::length_error::length_error;
};

struct Config {
  int max_length = 40;                     // alcove enumeration by length
  int max_cas = 40;                        // Casimir-bounded enumeration
  std::uint64_t max_alcoves = 500'000;     // predicted number of enumerated alcoves
  std::size_t max_kmax = 60;               // series truncation order
  std::size_t max_direct_k = 15;           // composition enumeration for f_k
  std::uint64_t subset_ceiling = 2'000'000;
  std::uint64_t partition_ceiling = 2'000'000;
  int max_ideal_rank = 8;
  int wedge_max_dim = 14;
  std::uint64_t wedge_max_rows = 3432;

  // Every ceiling lifted.
  Config unbounded() const;
  nlohmann::json to_json() const;
  // Keys present in j replace the defaults; unknown keys are rejected.
  static Config from_json(const nlohmann::json& j);
  // Reads the file named by ALCOVEKIT_CONFIG, or returns defaults.
  static Config from_environment();

  void require(bool within, const std::string& what) const {
    if (!within) throw ScaleError(what + " exceeds the configured ceiling (use --allow-big)");
  }
};

}  // namespace alcovekit::cli
