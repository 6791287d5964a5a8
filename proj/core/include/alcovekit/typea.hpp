#pragma once

// Type A specialization: partitions, the weight <-> partition dictionary for
// SU(m), m-cores via beta-numbers, and the alcove / null-core correspondence.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "alcovekit/rootsys.hpp"

namespace alcovekit {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);  // drops zeros, validates order

  int size() const;
  std::size_t length() const { return parts.size(); }
  bool empty() const { return parts.empty(); }
  std::string to_string() const;
  bool operator==(const Partition&) const = default;
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

// q_i - q_{i+1} = lambda_i, q_m = 0.
Partition weight_to_partition(std::span<const std::int64_t> lambda, int m);
Partition weight_to_partition(const Weight& lambda, int m);
// Throws std::invalid_argument if the partition has more than m - 1 parts.
std::vector<std::int64_t> partition_to_weight(const Partition& p, int m);

// Beta-set of length padded to a multiple of m (at least max(parts, 1)).
std::vector<int> beta_numbers(const Partition& p, int m);
Partition from_beta_numbers(std::vector<int> beta);

// Removes rim hooks of length m until none is removable.
Partition m_core(const Partition& p, int m);
// Same, choosing the removable bead at random at every step.
Partition m_core_random_order(const Partition& p, int m, std::mt19937_64& rng);

// All partitions of n with at most max_parts parts, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n, int max_parts);

struct NullCoreCount {
  int m = 0;
  int k = 0;
  std::uint64_t count = 0;
  std::uint64_t expected = 0;  // binomial(m + k - 2, m - 2)
  bool matches() const { return count == expected; }
};

NullCoreCount count_null_cores(int m, int k, std::uint64_t candidate_ceiling = 2'000'000);

struct NullCoreReport {
  int m = 0;
  int max_length = 0;
  std::size_t alcoves = 0;
  std::size_t non_null_core = 0;
  std::size_t duplicate_images = 0;
  std::size_t size_not_multiple = 0;
  std::size_t sign_mismatches = 0;
  int surjectivity_bound = 0;
  std::vector<Partition> unhit;  // null-core partitions of size <= bound not produced
  bool pass() const {
    return non_null_core == 0 && duplicate_images == 0 && size_not_multiple == 0 && sign_mismatches == 0;
  }
};

// Checks that lambda^sigma maps to pairwise distinct null m-core partitions for
// every sigma of A_{m-1} with length <= max_length.  Null-core partitions of
// size <= surjectivity_bound that were not hit are listed, not asserted.
NullCoreReport verify_null_core_correspondence(int m, int max_length, int surjectivity_bound = -1);

}  // namespace alcovekit
