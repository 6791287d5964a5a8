#pragma once

// Exact power series and polynomials: powers of the Euler product, the signed
// alcove sums that reproduce them, the polynomials f_k(s) with
// prod (1 - x^n)^s = sum f_k(s) x^k, Bott's series, and bigraded wedge dimensions.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "alcovekit/rootsys.hpp"

namespace alcovekit {

// Dense series truncated at x^order.
class IntSeries {
 public:
  explicit IntSeries(std::size_t order) : coeffs_(order + 1, 0) {}
  static IntSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const mpz_class& operator[](std::size_t k) const { return coeffs_[k]; }
  mpz_class& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  IntSeries& operator+=(const IntSeries& other);
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
  IntSeries pow(unsigned long exponent) const;
  bool operator==(const IntSeries&) const = default;

 private:
  std::vector<mpz_class> coeffs_;
};

// Dense polynomial in one variable with exact rational coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);
  static RatPoly constant(const mpq_class& c);
  static RatPoly monomial(const mpq_class& c, std::size_t degree);
  // Product of (s - r) over the given roots, times scale.
  static RatPoly from_roots(const std::vector<mpq_class>& roots, const mpq_class& scale);
  // Lagrange interpolation through (x_i, y_i).
  static RatPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpq_class coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpq_class(0); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class operator()(const mpq_class& s) const;

  RatPoly& operator+=(const RatPoly& other);
  RatPoly& operator*=(const mpq_class& c);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  bool operator==(const RatPoly&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

// prod_{n=1}^{order} (1 - x^n)^exponent mod x^{order+1}.
IntSeries euler_power(unsigned long exponent, std::size_t order);

// b_k = sum over dominant sigma with Cas(lambda^sigma) = k of (-1)^length dim V.
IntSeries alcove_coeffs(const RootSystem& rs, std::size_t order);

// sum_{d | m} 1/d.
mpq_class mu(unsigned long m);

// f_0 .. f_max via k f_k = -s sum_{m=1}^k m mu(m) f_{k-m}.
std::vector<RatPoly> f_polys(std::size_t max_k);
RatPoly f_poly(std::size_t k);
// f_k = sum_n q_{k,n} (-s)^n / n!, with q_{k,n} summed over ordered compositions.
RatPoly f_poly_direct(std::size_t k);
// q_{k,n} by composition enumeration.
mpq_class composition_weight(std::size_t k, std::size_t n);

// prod_i 1 / (1 - t^{m_i}) over the exponents.
IntSeries bott_series(const RootSystem& rs, std::size_t order);

// entry(n, k) = coefficient of y^n x^k in prod_{j>=1} (1 + y x^j)^dim.
class BigradedTable {
 public:
  BigradedTable(std::size_t max_n, std::size_t max_k);
  std::size_t max_n() const { return max_n_; }
  std::size_t max_k() const { return max_k_; }
  const mpz_class& at(std::size_t n, std::size_t k) const { return cells_[n * (max_k_ + 1) + k]; }
  mpz_class& at(std::size_t n, std::size_t k) { return cells_[n * (max_k_ + 1) + k]; }
  // sum_n (-1)^n entry(n, k).
  mpz_class euler_characteristic(std::size_t k) const;

 private:
  std::size_t max_n_;
  std::size_t max_k_;
  std::vector<mpz_class> cells_;
};

BigradedTable bigraded_dims(unsigned long dim_g, std::size_t max_n, std::size_t max_k);

struct LehmerReport {
  std::size_t max_k = 0;
  std::vector<mpz_class> values;  // f_k(24) for k = 1..max_k
  std::vector<std::size_t> zeros;
  bool agrees_with_series = false;
};

LehmerReport lehmer_probe(std::size_t max_k);

}  // namespace alcovekit
