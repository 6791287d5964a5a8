#pragma once

// Abelian ideals of a Borel subalgebra, encoded as root subsets, and the
// brute-force checks that tie them to dominant alcoves inside 2 A_1.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alcovekit/alcove.hpp"
#include "alcovekit/rootsys.hpp"

namespace alcovekit {

struct AbelianIdeal {
  std::vector<std::size_t> roots;  // sorted indices into positive_roots()
  std::vector<std::int64_t> lambda;  // sum of the roots, fundamental-weight coordinates

  std::size_t k() const { return roots.size(); }
  bool operator==(const AbelianIdeal&) const = default;
};

// Depth-first search over upper sets of the root poset, deciding roots in
// decreasing height.  Result sorted by k, then lambda lexicographically.
std::vector<AbelianIdeal> enumerate_abelian_ideals(const RootSystem& rs);

bool is_abelian_ideal(const RootSystem& rs, const std::vector<std::size_t>& roots);
AbelianIdeal make_ideal(const RootSystem& rs, std::vector<std::size_t> roots);

// Lookup table for W_f^(2), keyed by n_vec.
class Wf2Table {
 public:
  explicit Wf2Table(const RootSystem& rs);
  const std::vector<AffineElement>& elements() const { return elements_; }
  const AffineElement* find(const std::vector<int>& n_vec) const;

 private:
  std::vector<AffineElement> elements_;
  std::map<std::vector<int>, std::size_t> by_nvec_;
};

// Unique sigma in W_f^(2) with n_phi(sigma) = 1 exactly on the ideal's roots.
AffineElement ideal_to_sigma(const RootSystem& rs, const Wf2Table& table, const AbelianIdeal& ideal);
// {phi : n_phi(sigma) = 1}; throws std::invalid_argument if sigma is not in W_f^(2).
AbelianIdeal sigma_to_ideal(const RootSystem& rs, const AffineElement& e);

// Sum of Weyl dimensions over abelian ideals of dimension k.
mpz_class dim_Ck(const RootSystem& rs, const std::vector<AbelianIdeal>& ideals, std::size_t k);
mpz_class dim_Ck(const RootSystem& rs, std::size_t k);

struct KostantReport {
  std::size_t k = 0;
  std::uint64_t subsets = 0;
  std::uint64_t violations = 0;
  std::vector<std::vector<std::size_t>> equality_cases;
  bool equality_matches_ideals = false;
  bool pass() const { return violations == 0 && equality_matches_ideals; }
};

// For every k-subset Phi of positive roots, |rho + <Phi>|^2 - |rho|^2 <= k in
// the Killing form; equality exactly on abelian ideals.  Throws
// std::length_error if the number of subsets exceeds subset_ceiling.
KostantReport verify_kostant_inequality(const RootSystem& rs, std::size_t k,
                                        std::uint64_t subset_ceiling = 2'000'000);

struct RootPartitionReport {
  int cas_ceiling = 0;
  std::uint64_t partitions = 0;
  std::uint64_t violations = 0;
  std::uint64_t equality_cases = 0;
  std::uint64_t expected_equality_cases = 0;
  bool equality_matches_alcoves = false;
  bool pass() const { return violations == 0 && equality_matches_alcoves; }
};

// Every positive-root partition q with c(q) = sum q_i (q_i + 1) / 2 <= ceiling
// satisfies c(q) >= Cas(eta(q)); equality exactly at q = n(sigma).
RootPartitionReport verify_root_partition_bound(const RootSystem& rs, int cas_ceiling,
                                                std::uint64_t candidate_ceiling = 2'000'000);

// Killing-form value |rho + mu|^2 - |rho|^2 for mu = sum of the given roots.
mpq_class shifted_norm_gain(const RootSystem& rs, const std::vector<std::size_t>& roots);

}  // namespace alcovekit
