#pragma once

// Dominant alcoves of the affine Weyl group.
//
// A point x of the real Cartan subalgebra is carried as the vector
// (alpha_1(x), ..., alpha_l(x)) of exact rationals with a common denominator.
// Walls are the level sets phi(x) = n, n integer, and the fundamental alcove is
// A_1 = {alpha_i(x) >= 0, psi(x) <= 1}.  Every dominant alcove A_sigma is
// tracked through x_sigma = sigma(x0), where x0 is the image of 2 rho under the
// Killing identification; x0 lies in the interior of A_1.
//
// Enumeration is a breadth-first search by length.  The open chamber is convex,
// so a straight segment from the interior of A_sigma to x0 crosses walls one at
// a time and every dominant alcove of length n + 1 has a dominant neighbour of
// length n across one of its l + 1 facets.  The same holds inside k A_1, which
// is also convex, so the search may be restricted to n_psi <= k - 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "alcovekit/rootsys.hpp"

namespace alcovekit {

struct CartanPoint {
  std::vector<std::int64_t> num;  // alpha_i(x) = num[i] / den
  std::int64_t den = 1;

  std::vector<mpq_class> values() const;
  // phi(x) * den for a root in simple-root coordinates.
  std::int64_t eval_scaled(std::span<const int> root_coords) const;
  bool operator==(const CartanPoint& other) const;
};

// The image of 2 rho: alpha_i(x0) = (alpha_i, alpha_i)_std / (2 h^vee).
CartanPoint base_point(const RootSystem& rs);
// Point representing 2 (lambda + rho), on the same scale as base_point.
CartanPoint point_of_shifted_weight(const RootSystem& rs, std::span<const std::int64_t> lambda);

struct AffineElement {
  // sigma(x) = w(x) + z.  In point coordinates w is the integer matrix
  // w_lin (row-major, l x l) and z contributes the integer vector z_eval = (alpha_j(z)).
  std::vector<std::int64_t> w_lin;
  std::vector<std::int64_t> z_eval;
  std::vector<std::int64_t> z_coroot;  // z = sum_i z_coroot[i] alpha_i^vee
  CartanPoint x_sigma;
  std::vector<int> n_vec;  // n_phi(sigma) = floor(phi(x_sigma)), indexed like positive_roots()
  int length = 0;
  std::vector<std::int64_t> lambda;  // lambda^sigma, fundamental-weight coordinates
  std::int64_t cas = 0;              // Cas(lambda^sigma) = sum n (n + 1) / 2

  int n_psi() const { return n_vec.empty() ? 0 : n_vec.back(); }
  int sign() const { return length % 2 == 0 ? 1 : -1; }
  Weight lambda_weight() const { return Weight::from_ints(lambda); }
  // Apply sigma to a point with any denominator.
  CartanPoint apply(const CartanPoint& p) const;
};

AffineElement identity_element(const RootSystem& rs);

// All sigma in W_f^+ with length(sigma) <= max_length, each once, ordered by
// length and then lexicographically by n_vec.  When max_npsi is set only
// alcoves inside (max_npsi + 1) A_1 are produced.
std::vector<AffineElement> enumerate_dominant(const RootSystem& rs, int max_length,
                                              std::optional<int> max_npsi = std::nullopt);

// Dominant elements with Cas(lambda^sigma) <= max_cas (uses Cas >= length).
std::vector<AffineElement> enumerate_by_casimir(const RootSystem& rs, int max_cas);

// sigma * s_i for i = 1..l (given as 0..l-1) and i = l for the affine reflection s_{psi,1}.
AffineElement right_multiply(const RootSystem& rs, const AffineElement& e, int generator);

// True iff A_sigma lies in 2 A_1, i.e. n_phi(sigma) in {0, 1} for all phi.
inline bool in_Wf2(const AffineElement& e) { return e.n_psi() <= 1; }

// Number of positive roots sent to negative roots by the linear part w.
int linear_part_length(const RootSystem& rs, const AffineElement& e);
// (2 rho)(z) = sum over positive roots of phi(z).
std::int64_t two_rho_on_translation(const RootSystem& rs, const AffineElement& e);

struct FoldResult {
  CartanPoint folded;
  int parity = 1;
  bool regular = true;
  int reflections = 0;
};

// Folds p into A_1 by reflecting in violated walls of A_1.
FoldResult reduce_to_fundamental(const RootSystem& rs, const CartanPoint& p);

// chi_lambda(a_P) in {-1, 0, 1} for dominant integral lambda.
int chi_at_aP(const RootSystem& rs, const Weight& lambda);
int chi_at_aP(const RootSystem& rs, std::span<const std::int64_t> lambda);

// Delta_i(sigma) = {phi : n_phi(sigma) >= i} for i = 0..n_psi(sigma).
std::vector<std::vector<std::size_t>> ideal_chain(const RootSystem& rs, const AffineElement& e);

// True iff the root subset (given by indices) is an upper ideal of the root poset.
bool is_upper_ideal(const RootSystem& rs, const std::vector<std::size_t>& roots);

}  // namespace alcovekit
