#include "alcovekit/series.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "alcovekit/alcove.hpp"

namespace alcovekit {

IntSeries IntSeries::one(std::size_t order) {
  IntSeries s(order);
  s[0] = 1;
  return s;
}

IntSeries& IntSeries::operator+=(const IntSeries& other) {
  if (other.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  IntSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntSeries IntSeries::pow(unsigned long exponent) const {
  IntSeries result = one(order());
  IntSeries base = *this;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1, 0);
  v[degree] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_roots(const std::vector<mpq_class>& roots, const mpq_class& scale) {
  RatPoly p = constant(scale);
  for (const auto& r : roots) p = p * RatPoly({-r, 1});
  return p;
}

RatPoly RatPoly::interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
  RatPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPoly basis = constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw std::invalid_argument("repeated interpolation node");
      mpq_class d = xs[i] - xs[j];
      basis = basis * RatPoly({-xs[j] / d, 1 / d});
    }
    out += basis;
  }
  return out;
}

mpq_class RatPoly::operator()(const mpq_class& s) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return RatPoly();
  std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string RatPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    const bool unit = (mag == 1 && k > 0);
    if (!unit) os << mag.get_str();
    if (k > 0) os << (unit ? "" : "*") << "s" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

IntSeries euler_power(unsigned long exponent, std::size_t order) {
  IntSeries result = IntSeries::one(order);
  if (exponent == 0) return result;
  for (std::size_t n = 1; n <= order; ++n) {
    // (1 - x^n)^e = sum_j (-1)^j C(e, j) x^{nj}
    IntSeries factor(order);
    mpz_class binom = 1;
    for (std::size_t j = 0; j * n <= order && j <= exponent; ++j) {
      factor[j * n] = (j % 2 == 0) ? binom : mpz_class(-binom);
      binom = binom * static_cast<unsigned long>(exponent - j) / static_cast<unsigned long>(j + 1);
    }
    result = result * factor;
  }
  return result;
}

IntSeries alcove_coeffs(const RootSystem& rs, std::size_t order) {
  IntSeries out(order);
  for (const auto& e : enumerate_by_casimir(rs, static_cast<int>(order))) {
    mpz_class d = rs.weyl_dimension(e.lambda);
    if (e.sign() > 0) out[static_cast<std::size_t>(e.cas)] += d;
    else out[static_cast<std::size_t>(e.cas)] -= d;
  }
  return out;
}

mpq_class mu(unsigned long m) {
  if (m == 0) throw std::invalid_argument("mu is defined for m >= 1");
  mpq_class s = 0;
  for (unsigned long d = 1; d <= m; ++d)
    if (m % d == 0) s += mpq_class(1, d);
  return s;
}

std::vector<RatPoly> f_polys(std::size_t max_k) {
  std::vector<RatPoly> f;
  f.push_back(RatPoly::constant(1));
  const RatPoly minus_s({0, -1});
  for (std::size_t k = 1; k <= max_k; ++k) {
    RatPoly acc;
    for (std::size_t m = 1; m <= k; ++m) {
      RatPoly term = f[k - m];
      term *= mpq_class(static_cast<long>(m)) * mu(m);
      acc += term;
    }
    acc = minus_s * acc;
    acc *= mpq_class(1, k);
    f.push_back(std::move(acc));
  }
  return f;
}

RatPoly f_poly(std::size_t k) { return f_polys(k)[k]; }

mpq_class composition_weight(std::size_t k, std::size_t n) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<mpq_class> mus(k + 1);
  for (std::size_t m = 1; m <= k; ++m) mus[m] = mu(m);
  mpq_class total = 0;
  std::function<void(std::size_t, std::size_t, const mpq_class&)> walk =
      [&](std::size_t parts_left, std::size_t remaining, const mpq_class& prod) {
        if (parts_left == 0) {
          if (remaining == 0) total += prod;
          return;
        }
        // each part is at least 1
        for (std::size_t m = 1; m + (parts_left - 1) <= remaining; ++m)
          walk(parts_left - 1, remaining - m, prod * mus[m]);
      };
  walk(n, k, mpq_class(1));
  return total;
}

RatPoly f_poly_direct(std::size_t k) {
  if (k == 0) return RatPoly::constant(1);
  std::vector<mpq_class> c(k + 1, 0);
  mpz_class fact = 1;
  for (std::size_t n = 1; n <= k; ++n) {
    fact *= static_cast<unsigned long>(n);
    mpq_class v = composition_weight(k, n) / mpq_class(fact);
    c[n] = (n % 2 == 0) ? v : mpq_class(-v);
  }
  return RatPoly(std::move(c));
}

IntSeries bott_series(const RootSystem& rs, std::size_t order) {
  IntSeries result = IntSeries::one(order);
  for (int m : rs.exponents()) {
    IntSeries geo(order);
    for (std::size_t j = 0; j <= order; j += static_cast<std::size_t>(m)) geo[j] = 1;
    result = result * geo;
  }
  return result;
}

BigradedTable::BigradedTable(std::size_t max_n, std::size_t max_k)
    : max_n_(max_n), max_k_(max_k), cells_((max_n + 1) * (max_k + 1), 0) {}

mpz_class BigradedTable::euler_characteristic(std::size_t k) const {
  mpz_class s = 0;
  for (std::size_t n = 0; n <= max_n_; ++n) {
    if (n % 2 == 0) s += at(n, k);
    else s -= at(n, k);
  }
  return s;
}

BigradedTable bigraded_dims(unsigned long dim_g, std::size_t max_n, std::size_t max_k) {
  if (max_n > max_k) throw std::invalid_argument("bigraded table needs max_n <= max_k");
  BigradedTable t(max_n, max_k);
  t.at(0, 0) = 1;
  for (std::size_t j = 1; j <= max_k; ++j) {
    // multiply by (1 + y x^j)^dim = sum_a C(dim, a) y^a x^{ja}
    BigradedTable next(max_n, max_k);
    for (std::size_t n = 0; n <= max_n; ++n)
      for (std::size_t k = 0; k <= max_k; ++k) {
        const mpz_class& v = t.at(n, k);
        if (v == 0) continue;
        mpz_class binom = 1;
        for (std::size_t a = 0; a <= dim_g && n + a <= max_n && k + a * j <= max_k; ++a) {
          next.at(n + a, k + a * j) += v * binom;
          binom = binom * static_cast<unsigned long>(dim_g - a) / static_cast<unsigned long>(a + 1);
        }
      }
    t = std::move(next);
  }
  return t;
}

LehmerReport lehmer_probe(std::size_t max_k) {
  if (max_k < 1) throw std::invalid_argument("lehmer probe needs max_k >= 1");
  LehmerReport rep;
  rep.max_k = max_k;
  auto f = f_polys(max_k);
  IntSeries series = euler_power(24, max_k);
  rep.agrees_with_series = true;
  for (std::size_t k = 1; k <= max_k; ++k) {
    mpq_class v = f[k](mpq_class(24));
    if (v.get_den() != 1) throw std::logic_error("f_k(24) is not an integer");
    rep.values.push_back(v.get_num());
    if (v == 0) rep.zeros.push_back(k);
    if (v.get_num() != series[k]) rep.agrees_with_series = false;
  }
  return rep;
}

}  // namespace alcovekit
