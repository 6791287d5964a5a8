#include "alcovekit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace alcovekit::linalg {

std::vector<IntRow> clear_denominators(const std::vector<RatRow>& rows) {
  std::vector<IntRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    mpz_class l = 1;
    for (const auto& q : r)
      if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntRow ir;
    ir.reserve(r.size());
    for (const auto& q : r) ir.push_back(q.get_num() * (l / q.get_den()));
    out.push_back(std::move(ir));
  }
  return out;
}

std::size_t rank(std::vector<IntRow> a) {
  if (a.empty()) return 0;
  const std::size_t m = a.size(), n = a[0].size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<RatRow>& rows) { return rank(clear_denominators(rows)); }

std::vector<RatRow> nullspace(std::vector<RatRow> a, std::size_t n) {
  const std::size_t m = a.size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (std::size_t j = c; j < n; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<RatRow> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatRow v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatRow> inverse(const std::vector<RatRow>& m) {
  const std::size_t n = m.size();
  std::vector<RatRow> a(n, RatRow(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    std::swap(a[p], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<RatRow> out(n, RatRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace alcovekit::linalg
