#pragma once

// Exact root-system data for the complex simple Lie types A_l ... G_2.
//
// Conventions used throughout the library:
//   * roots are integer vectors in the simple-root basis;
//   * weights are vectors in the fundamental-weight basis;
//   * the Cartan matrix is a_ij = <alpha_j, alpha_i^vee>;
//   * the "standard" form has (psi, psi) = 2 for the highest root psi, the
//     Killing form is the standard one divided by 2 h^vee.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace alcovekit {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  std::string label() const;
  bool operator==(const CartanType&) const = default;

  // Parses labels such as "A4", "g2", "E8". Throws std::invalid_argument.
  static CartanType parse(std::string_view label);
};

// Throws std::invalid_argument unless (family, rank) names a simple type.
// B and C are accepted from rank 2, D from rank 4, E for 6..8.
void validate_type(const CartanType& type);

using Root = std::vector<int>;

// A weight in fundamental-weight coordinates.
struct Weight {
  std::vector<mpq_class> coords;

  Weight() = default;
  explicit Weight(std::vector<mpq_class> c) : coords(std::move(c)) {}
  static Weight zero(int rank);
  static Weight from_ints(std::span<const std::int64_t> values);

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_dominant_integral() const;
  // Integer coordinates; throws std::domain_error if some coordinate is not integral.
  std::vector<std::int64_t> to_ints() const;
  std::string to_string() const;

  bool operator==(const Weight&) const = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

class RootSystem {
 public:
  static RootSystem build(Family family, int rank);
  static RootSystem build(const CartanType& type) { return build(type.family, type.rank); }

  const CartanType& type() const { return type_; }
  std::string label() const { return type_.label(); }
  int rank() const { return type_.rank; }

  int cartan(int i, int j) const { return cartan_[index(i, j)]; }
  const std::vector<int>& cartan_matrix() const { return cartan_; }

  // Positive roots ordered by height, then lexicographically by coordinates.
  std::span<const Root> positive_roots() const { return roots_; }
  std::size_t num_positive_roots() const { return roots_.size(); }
  const Root& root(std::size_t k) const { return roots_[k]; }
  int height(std::size_t k) const { return heights_[k]; }
  std::size_t highest_root_index() const { return roots_.size() - 1; }
  const Root& highest_root() const { return roots_.back(); }
  // Index of the root with the given coordinates, or -1 if it is not a positive root.
  std::ptrdiff_t find_root(std::span<const int> coords) const;
  // Index of the simple root alpha_i.
  std::size_t simple_root_index(int i) const { return simple_index_[i]; }

  // (alpha_i, alpha_i)_std / 2; equals 1 on long roots.
  const mpq_class& half_norm(int i) const { return half_norm_[i]; }
  // Six times half_norm(i), always a positive integer (6, 3 or 2).
  int half_norm6(int i) const { return half_norm6_[i]; }

  mpq_class norm_std(std::size_t k) const;
  mpq_class norm_killing(std::size_t k) const { return to_killing(norm_std(k)); }
  // Centralized conversion from the standard form to the Killing form.
  mpq_class to_killing(const mpq_class& standard) const;

  int coxeter_number() const { return coxeter_; }
  int dual_coxeter_number() const { return dual_coxeter_; }
  std::span<const int> exponents() const { return exponents_; }
  int dim() const { return static_cast<int>(2 * roots_.size()) + rank(); }

  // Weight <-> root-coordinate conversion through the exact inverse Cartan matrix.
  Weight root_to_weight(std::span<const int> root_coords) const;
  Weight root_to_weight(std::span<const mpq_class> root_coords) const;
  std::vector<mpq_class> weight_to_root_coords(const Weight& w) const;
  bool in_root_lattice(const Weight& w) const;

  Weight rho() const;
  Weight highest_root_weight() const { return root_to_weight(highest_root()); }

  // Standard-form pairings.
  mpq_class inner_std(const Weight& a, const Weight& b) const;
  mpq_class inner_std_roots(std::span<const int> a, std::span<const int> b) const;
  // <mu, alpha_j^vee> for a root given in simple-root coordinates.
  int coroot_pairing(std::span<const int> root_coords, int j) const;
  // <alpha_j, phi^vee> for the positive root with index k.
  int simple_on_coroot(int j, std::size_t k) const;

  // Cas(lambda) = (lambda, lambda + 2 rho)_K. Requires dominant integral lambda.
  mpq_class casimir_eigenvalue(const Weight& lambda) const;
  // Same quadratic form for an arbitrary element of the root lattice.
  mpq_class casimir_of_root_coords(std::span<const std::int64_t> root_coords) const;
  // Weyl dimension formula. Requires dominant integral lambda.
  mpz_class weyl_dimension(const Weight& lambda) const;
  mpz_class weyl_dimension(std::span<const std::int64_t> lambda) const;

  // m with 2m + 1 = #{phi > 0 : (psi, phi) > 0}; asserts m = h^vee - 2.
  int heisenberg_count() const;

  // Index of phi + alpha_i among positive roots, or -1.
  std::ptrdiff_t raise(std::size_t k, int i) const { return raise_[k * rank() + i]; }
  // Index of phi_a + phi_b among positive roots, or -1.
  std::ptrdiff_t sum_index(std::size_t a, std::size_t b) const { return sums_[a * roots_.size() + b]; }

 private:
  RootSystem() = default;
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * rank() + j); }
  void require_dominant(const Weight& w) const;

  CartanType type_;
  std::vector<int> cartan_;
  std::vector<mpq_class> cartan_inverse_;
  std::vector<mpq_class> half_norm_;
  std::vector<int> half_norm6_;
  std::vector<Root> roots_;
  std::vector<int> heights_;
  std::vector<std::size_t> simple_index_;
  std::vector<std::ptrdiff_t> raise_;
  std::vector<std::ptrdiff_t> sums_;
  std::vector<int> exponents_;
  int coxeter_ = 0;
  int dual_coxeter_ = 0;
};

// Dominant integral weights with Cas(lambda) <= max_cas, in lexicographic order.
std::vector<std::vector<std::int64_t>> dominant_weights_up_to_casimir(const RootSystem& rs, const mpq_class& max_cas);

// All types used by the sweeps: A1..A<max_a>, B2.., C2.., D4.., E6..E8, F4, G2 up to max_rank.
std::vector<CartanType> standard_types(int max_rank);

}  // namespace alcovekit
