#pragma once

// Brute-force exterior-algebra oracles for small simple Lie algebras.
//
// The algebra is built from Chevalley generators e_i, f_i in a faithful
// realization (sl(n), sp(4), and the Z/3-graded model sl(3) + C^3 + (C^3)* of
// G2).  Root vectors are iterated brackets of the generators, structure
// constants are read off by exact coordinate extraction, and the result is
// checked against the Cartan matrix, antisymmetry and the Jacobi identity.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "alcovekit/ideals.hpp"
#include "alcovekit/rootsys.hpp"

namespace alcovekit {

struct WedgeLimits {
  int max_dim = 14;              // dimension of g
  std::uint64_t max_rows = 3432;  // dimension of the wedge power
};

class LieAlgebraTable {
 public:
  // Basis order: e_phi for phi in positive_roots(), then f_phi in the same
  // order, then h_1..h_l.  Throws std::length_error above limits.max_dim.
  static LieAlgebraTable build(const RootSystem& rs, const WedgeLimits& limits = {});

  const RootSystem& root_system() const { return rs_; }
  int dim() const { return dim_; }
  // Weight of basis element a in simple-root coordinates.
  const std::vector<int>& weight(int a) const { return weights_[a]; }
  // Coefficient of x_c in [x_a, x_b].
  const mpq_class& structure(int a, int b, int c) const {
    return structure_[(static_cast<std::size_t>(a) * dim_ + b) * dim_ + c];
  }
  const mpq_class& killing(int a, int b) const { return killing_[static_cast<std::size_t>(a) * dim_ + b]; }
  // y_j = sum_k dual(j, k) x_k, dual to x_j under the Killing form.
  const mpq_class& dual(int j, int k) const { return dual_[static_cast<std::size_t>(j) * dim_ + k]; }
  std::size_t killing_rank() const;

  // Number of failing (a, b, c) triples; 0 for a valid table.
  std::uint64_t jacobi_failures() const;
  std::uint64_t antisymmetry_failures() const;
  // sum_j ad(x_j) ad(y_j) == identity.
  bool casimir_is_identity() const;

  int positive_root_vector(std::size_t k) const { return static_cast<int>(k); }

 private:
  explicit LieAlgebraTable(const RootSystem& rs) : rs_(rs) {}
  RootSystem rs_;
  int dim_ = 0;
  std::vector<std::vector<int>> weights_;
  std::vector<mpq_class> structure_;
  std::vector<mpq_class> killing_;
  std::vector<mpq_class> dual_;
};

// A vector of the k-th exterior power, keyed by the bitmask of basis indices.
using WedgeVector = std::map<std::uint64_t, mpq_class>;

class WedgeOracle {
 public:
  explicit WedgeOracle(const LieAlgebraTable& table, const WedgeLimits& limits = {});

  // theta(Cas) applied to a wedge vector of degree k.
  WedgeVector apply_casimir(const WedgeVector& v, int k) const;
  // theta(x_a) applied to a wedge vector.
  WedgeVector apply_derivation(int a, const WedgeVector& v) const;

  // dim {v in wedge^k g : theta(Cas) v = k v}.
  std::uint64_t casimir_eigenspace_dim(int k) const;
  // Largest eigenvalue of theta(Cas) on wedge^k g, found from highest weight
  // vectors; each value is confirmed by applying theta(Cas).
  mpq_class max_casimir_eigenvalue(int k) const;
  // dim of (wedge^{k-2} g) ^ d(g), where du = 1/2 sum_j x_j ^ [y_j, u].
  std::uint64_t dg_ideal_dim(int k) const;
  // d applied to basis element u, as a vector of wedge^2 g.
  WedgeVector coboundary(int u) const;

  struct TopVectorResult {
    std::size_t k = 0;
    mpq_class eigenvalue;
    bool is_eigenvector = false;
  };
  // For each ideal, whether e_phi1 ^ ... ^ e_phik is an eigenvector with eigenvalue k.
  std::vector<TopVectorResult> verify_ideal_top_vectors(const std::vector<AbelianIdeal>& ideals) const;

 private:
  void check_rows(int k) const;
  // Wedge basis of degree k grouped by total weight.
  std::map<std::vector<int>, std::vector<std::uint64_t>> blocks(int k) const;
  std::vector<int> weight_of(std::uint64_t mask) const;

  const LieAlgebraTable& table_;
  WedgeLimits limits_;
  int dim_;
  // pair_[p * dim + q] lists (r, s, coeff) with sum_j [x_j, x_p] (x) [y_j, x_q] = sum coeff x_r (x) x_s.
  struct PairTerm {
    int r, s;
    mpq_class c;
  };
  std::vector<std::vector<PairTerm>> pair_;
  // ad_[a][b] lists (c, coeff) with [x_a, x_b] = sum coeff x_c.
  std::vector<std::vector<std::vector<std::pair<int, mpq_class>>>> ad_;
};

}  // namespace alcovekit
