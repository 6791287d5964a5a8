#include "alcovekit/wedge.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <stdexcept>

#include "alcovekit/linalg.hpp"

namespace alcovekit {

namespace {

using Vec = std::vector<mpq_class>;

struct Realization {
  std::size_t ambient = 0;
  std::function<Vec(const Vec&, const Vec&)> bracket;
  std::vector<Vec> e, f;
};

Vec matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Vec m(n * n, 0);
  m[i * n + j] = 1;
  return m;
}

Vec combine(const Vec& a, const mpq_class& s, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

Realization matrix_realization(std::size_t n) {
  Realization r;
  r.ambient = n * n;
  r.bracket = [n](const Vec& x, const Vec& y) {
    Vec out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i * n + k] != 0)
          for (std::size_t j = 0; j < n; ++j) out[i * n + j] += x[i * n + k] * y[k * n + j];
        if (y[i * n + k] != 0)
          for (std::size_t j = 0; j < n; ++j) out[i * n + j] -= y[i * n + k] * x[k * n + j];
      }
    return out;
  };
  return r;
}

Realization special_linear(int rank) {
  const std::size_t n = static_cast<std::size_t>(rank) + 1;
  Realization r = matrix_realization(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    r.e.push_back(matrix_unit(n, i, i + 1));
    r.f.push_back(matrix_unit(n, i + 1, i));
  }
  return r;
}

// sp(4) preserving [[0, I], [-I, 0]]; short root e1 - e2, long root 2 e2.
Realization symplectic4(bool long_first) {
  Realization r = matrix_realization(4);
  Vec short_e = combine(matrix_unit(4, 0, 1), -1, matrix_unit(4, 3, 2));
  Vec short_f = combine(matrix_unit(4, 1, 0), -1, matrix_unit(4, 2, 3));
  Vec long_e = matrix_unit(4, 1, 3);
  Vec long_f = matrix_unit(4, 3, 1);
  if (long_first) {
    r.e = {long_e, short_e};
    r.f = {long_f, short_f};
  } else {
    r.e = {short_e, long_e};
    r.f = {short_f, long_f};
  }
  return r;
}

// G2 = sl(3) + V + V*, coordinates (A[9], v[3], p[3]).
Realization g2_model() {
  Realization r;
  r.ambient = 15;
  r.bracket = [](const Vec& x, const Vec& y) {
    auto A = [](const Vec& z, int i, int j) -> const mpq_class& { return z[i * 3 + j]; };
    auto V = [](const Vec& z, int i) -> const mpq_class& { return z[9 + i]; };
    auto P = [](const Vec& z, int i) -> const mpq_class& { return z[12 + i]; };
    Vec out(15, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out[i * 3 + j] += A(x, i, k) * A(y, k, j) - A(y, i, k) * A(x, k, j);
    // [v, p] = -3 (v p^T - (p.v)/3 I)
    auto vp = [&](const Vec& a, const Vec& b, int sign) {
      mpq_class dot = 0;
      for (int i = 0; i < 3; ++i) dot += P(b, i) * V(a, i);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          mpq_class t = V(a, i) * P(b, j);
          if (i == j) t -= dot / 3;
          out[i * 3 + j] += sign * -3 * t;
        }
    };
    vp(x, y, 1);
    vp(y, x, -1);
    auto cross = [](const mpq_class& a0, const mpq_class& a1, const mpq_class& a2, const mpq_class& b0,
                    const mpq_class& b1, const mpq_class& b2) {
      return std::array<mpq_class, 3>{a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0};
    };
    auto pc = cross(P(x, 0), P(x, 1), P(x, 2), P(y, 0), P(y, 1), P(y, 2));
    auto vc = cross(V(x, 0), V(x, 1), V(x, 2), V(y, 0), V(y, 1), V(y, 2));
    for (int i = 0; i < 3; ++i) {
      mpq_class v = 0, p = 0;
      for (int k = 0; k < 3; ++k) {
        v += A(x, i, k) * V(y, k) - A(y, i, k) * V(x, k);
        p += -A(x, k, i) * P(y, k) + A(y, k, i) * P(x, k);
      }
      out[9 + i] = v + 2 * pc[i];
      out[12 + i] = p + 2 * vc[i];
    }
    return out;
  };
  auto unit = [](int pos) {
    Vec z(15, 0);
    z[pos] = 1;
    return z;
  };
  // alpha_1 short = eps_2 (vector part), alpha_2 long = eps_1 - eps_2 (E_12).
  r.e = {unit(9 + 1), unit(0 * 3 + 1)};
  r.f = {unit(12 + 1), unit(1 * 3 + 0)};
  return r;
}

Realization realization_for(const RootSystem& rs) {
  const CartanType& t = rs.type();
  switch (t.family) {
    case Family::A: return special_linear(t.rank);
    case Family::B:
      if (t.rank == 2) return symplectic4(true);
      break;
    case Family::C:
      if (t.rank == 2) return symplectic4(false);
      break;
    case Family::G: return g2_model();
    default: break;
  }
  throw std::invalid_argument("no exterior-algebra realization for type " + t.label());
}

// Sorts seq, returning (mask, sign), or nullopt on a repeated index.
std::optional<std::pair<std::uint64_t, int>> canonical(std::vector<int>& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return std::nullopt;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  std::uint64_t mask = 0;
  for (int s : seq) mask |= std::uint64_t{1} << s;
  return std::make_pair(mask, sign);
}

std::vector<int> indices_of(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

void add_to(WedgeVector& v, std::uint64_t mask, const mpq_class& c) {
  auto [it, inserted] = v.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  } else if (c == 0) {
    v.erase(it);
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b.get_ui();
}

}  // namespace

LieAlgebraTable LieAlgebraTable::build(const RootSystem& rs, const WedgeLimits& limits) {
  if (rs.dim() > limits.max_dim)
    throw std::length_error("dim " + std::to_string(rs.dim()) + " of " + rs.label() +
                            " exceeds the exterior-algebra ceiling " + std::to_string(limits.max_dim));
  Realization real = realization_for(rs);
  const int n = rs.rank();
  const std::size_t np = rs.num_positive_roots();

  // Normalize f_i so that [[e_i, f_i], e_i] = 2 e_i.
  for (int i = 0; i < n; ++i) {
    Vec h = real.bracket(real.e[i], real.f[i]);
    Vec he = real.bracket(h, real.e[i]);
    std::size_t pos = 0;
    while (real.e[i][pos] == 0) ++pos;
    mpq_class c = he[pos] / real.e[i][pos];
    if (c == 0) throw std::logic_error("degenerate Chevalley generator");
    for (auto& x : real.f[i]) x *= mpq_class(2) / c;
  }

  LieAlgebraTable t(rs);
  t.dim_ = rs.dim();
  const int dim = t.dim_;
  std::vector<Vec> basis(static_cast<std::size_t>(dim));
  for (std::size_t k = 0; k < np; ++k) {
    const Root& phi = rs.root(k);
    int simple = -1;
    for (int i = 0; i < n; ++i)
      if (phi[i] == 1 && rs.height(k) == 1) simple = i;
    if (simple >= 0) {
      basis[k] = real.e[simple];
      basis[np + k] = real.f[simple];
      continue;
    }
    for (int i = 0; i < n; ++i) {
      Root lower = phi;
      lower[i] -= 1;
      auto idx = rs.find_root(lower);
      if (idx < 0) continue;
      basis[k] = real.bracket(real.e[i], basis[static_cast<std::size_t>(idx)]);
      basis[np + k] = real.bracket(real.f[i], basis[np + static_cast<std::size_t>(idx)]);
      break;
    }
  }
  for (int i = 0; i < n; ++i) basis[2 * np + i] = real.bracket(real.e[i], real.f[i]);

  t.weights_.resize(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (std::size_t k = 0; k < np; ++k) {
    t.weights_[k] = rs.root(k);
    for (int i = 0; i < n; ++i) t.weights_[np + k][i] = -rs.root(k)[i];
  }

  // Coordinate extraction: choose dim independent ambient rows.
  std::vector<std::size_t> rows;
  {
    std::vector<linalg::RatRow> reduced;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t amb = 0; amb < real.ambient && rows.size() < static_cast<std::size_t>(dim); ++amb) {
      linalg::RatRow row(static_cast<std::size_t>(dim));
      for (int a = 0; a < dim; ++a) row[a] = basis[a][amb];
      for (std::size_t r = 0; r < reduced.size(); ++r) {
        if (row[pivot_cols[r]] == 0) continue;
        mpq_class f = row[pivot_cols[r]] / reduced[r][pivot_cols[r]];
        for (int a = 0; a < dim; ++a) row[a] -= f * reduced[r][a];
      }
      auto it = std::find_if(row.begin(), row.end(), [](const mpq_class& q) { return q != 0; });
      if (it == row.end()) continue;
      pivot_cols.push_back(static_cast<std::size_t>(it - row.begin()));
      reduced.push_back(row);
      rows.push_back(amb);
    }
    if (rows.size() != static_cast<std::size_t>(dim)) throw std::logic_error("realization basis is degenerate");
  }
  std::vector<linalg::RatRow> sub(static_cast<std::size_t>(dim), linalg::RatRow(static_cast<std::size_t>(dim)));
  for (int r = 0; r < dim; ++r)
    for (int a = 0; a < dim; ++a) sub[r][a] = basis[a][rows[r]];
  auto sub_inv = linalg::inverse(sub);
  auto coords = [&](const Vec& v) {
    Vec c(static_cast<std::size_t>(dim), 0);
    for (int a = 0; a < dim; ++a)
      for (int r = 0; r < dim; ++r)
        if (v[rows[r]] != 0) c[a] += sub_inv[a][r] * v[rows[r]];
    Vec back(real.ambient, 0);
    for (int a = 0; a < dim; ++a)
      if (c[a] != 0)
        for (std::size_t amb = 0; amb < real.ambient; ++amb) back[amb] += c[a] * basis[a][amb];
    if (back != v) throw std::logic_error("bracket left the span of the basis");
    return c;
  };

  t.structure_.assign(static_cast<std::size_t>(dim) * dim * dim, 0);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Vec c = coords(real.bracket(basis[a], basis[b]));
      for (int d = 0; d < dim; ++d) t.structure_[(static_cast<std::size_t>(a) * dim + b) * dim + d] = c[d];
    }

  // Chevalley relations against the Cartan matrix.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int hi = static_cast<int>(2 * np) + i;
      const int ej = static_cast<int>(rs.simple_root_index(j));
      const int fj = static_cast<int>(np + rs.simple_root_index(j));
      const int ei = static_cast<int>(rs.simple_root_index(i));
      for (int d = 0; d < dim; ++d) {
        mpq_class expect_he = (d == ej) ? mpq_class(rs.cartan(i, j)) : mpq_class(0);
        mpq_class expect_ef = (i == j && d == static_cast<int>(2 * np) + i) ? mpq_class(1) : mpq_class(0);
        if (t.structure(hi, ej, d) != expect_he || t.structure(ei, fj, d) != expect_ef)
          throw std::logic_error("Chevalley relations fail for " + rs.label());
      }
    }

  t.killing_.assign(static_cast<std::size_t>(dim) * dim, 0);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      mpq_class s = 0;
      for (int c = 0; c < dim; ++c)
        for (int d = 0; d < dim; ++d) {
          const mpq_class& x = t.structure(a, d, c);
          if (x == 0) continue;
          const mpq_class& y = t.structure(b, c, d);
          if (y != 0) s += x * y;
        }
      t.killing_[static_cast<std::size_t>(a) * dim + b] = s;
      t.killing_[static_cast<std::size_t>(b) * dim + a] = s;
    }
  std::vector<linalg::RatRow> kil(static_cast<std::size_t>(dim), linalg::RatRow(static_cast<std::size_t>(dim)));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) kil[a][b] = t.killing(a, b);
  auto kinv = linalg::inverse(kil);
  t.dual_.assign(static_cast<std::size_t>(dim) * dim, 0);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) t.dual_[static_cast<std::size_t>(j) * dim + k] = kinv[j][k];
  return t;
}

std::size_t LieAlgebraTable::killing_rank() const {
  std::vector<linalg::RatRow> kil(static_cast<std::size_t>(dim_), linalg::RatRow(static_cast<std::size_t>(dim_)));
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) kil[a][b] = killing(a, b);
  return linalg::rank(kil);
}

std::uint64_t LieAlgebraTable::antisymmetry_failures() const {
  std::uint64_t bad = 0;
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c)
        if (structure(a, b, c) != -structure(b, a, c)) ++bad;
  return bad;
}

std::uint64_t LieAlgebraTable::jacobi_failures() const {
  // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0, coefficient by coefficient.
  std::uint64_t bad = 0;
  auto nested = [&](int x, int y, int z, std::vector<mpq_class>& acc) {
    for (int m = 0; m < dim_; ++m) {
      const mpq_class& inner = structure(y, z, m);
      if (inner == 0) continue;
      for (int out = 0; out < dim_; ++out) {
        const mpq_class& o = structure(x, m, out);
        if (o != 0) acc[out] += inner * o;
      }
    }
  };
  std::vector<mpq_class> acc(static_cast<std::size_t>(dim_));
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c) {
        std::fill(acc.begin(), acc.end(), 0);
        nested(a, b, c, acc);
        nested(b, c, a, acc);
        nested(c, a, b, acc);
        if (std::any_of(acc.begin(), acc.end(), [](const mpq_class& q) { return q != 0; })) ++bad;
      }
  return bad;
}

bool LieAlgebraTable::casimir_is_identity() const {
  for (int u = 0; u < dim_; ++u) {
    std::vector<mpq_class> out(static_cast<std::size_t>(dim_), 0);
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const mpq_class& dk = dual(j, k);
        if (dk == 0) continue;
        // ad(x_j) ad(x_k) x_u
        for (int m = 0; m < dim_; ++m) {
          const mpq_class& inner = structure(k, u, m);
          if (inner == 0) continue;
          for (int o = 0; o < dim_; ++o) {
            const mpq_class& s = structure(j, m, o);
            if (s != 0) out[o] += dk * inner * s;
          }
        }
      }
    for (int o = 0; o < dim_; ++o)
      if (out[o] != (o == u ? 1 : 0)) return false;
  }
  return true;
}

WedgeOracle::WedgeOracle(const LieAlgebraTable& table, const WedgeLimits& limits)
    : table_(table), limits_(limits), dim_(table.dim()) {
  ad_.assign(static_cast<std::size_t>(dim_), std::vector<std::vector<std::pair<int, mpq_class>>>(static_cast<std::size_t>(dim_)));
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c)
        if (table.structure(a, b, c) != 0) ad_[a][b].emplace_back(c, table.structure(a, b, c));

  pair_.resize(static_cast<std::size_t>(dim_) * dim_);
  std::vector<mpq_class> acc(static_cast<std::size_t>(dim_) * dim_);
  for (int p = 0; p < dim_; ++p)
    for (int q = 0; q < dim_; ++q) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int j = 0; j < dim_; ++j) {
        if (ad_[j][p].empty()) continue;
        for (int k = 0; k < dim_; ++k) {
          const mpq_class& djk = table.dual(j, k);
          if (djk == 0) continue;
          for (const auto& [r, c1] : ad_[j][p])
            for (const auto& [s, c2] : ad_[k][q]) acc[static_cast<std::size_t>(r) * dim_ + s] += djk * c1 * c2;
        }
      }
      auto& terms = pair_[static_cast<std::size_t>(p) * dim_ + q];
      for (int r = 0; r < dim_; ++r)
        for (int s = 0; s < dim_; ++s)
          if (acc[static_cast<std::size_t>(r) * dim_ + s] != 0)
            terms.push_back({r, s, acc[static_cast<std::size_t>(r) * dim_ + s]});
    }
}

void WedgeOracle::check_rows(int k) const {
  if (binomial(dim_, k) > limits_.max_rows)
    throw std::length_error("wedge power of degree " + std::to_string(k) + " exceeds the matrix ceiling");
}

std::vector<int> WedgeOracle::weight_of(std::uint64_t mask) const {
  std::vector<int> w(static_cast<std::size_t>(table_.root_system().rank()), 0);
  for (int a : indices_of(mask))
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += table_.weight(a)[i];
  return w;
}

std::map<std::vector<int>, std::vector<std::uint64_t>> WedgeOracle::blocks(int k) const {
  std::map<std::vector<int>, std::vector<std::uint64_t>> out;
  if (k < 0 || k > dim_) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    out[weight_of(mask)].push_back(mask);
    int i = k - 1;
    while (i >= 0 && idx[i] == dim_ - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

WedgeVector WedgeOracle::apply_derivation(int a, const WedgeVector& v) const {
  WedgeVector out;
  for (const auto& [mask, coeff] : v) {
    auto u = indices_of(mask);
    for (std::size_t pos = 0; pos < u.size(); ++pos)
      for (const auto& [r, c] : ad_[a][u[pos]]) {
        auto seq = u;
        seq[pos] = r;
        auto canon = canonical(seq);
        if (!canon) continue;
        add_to(out, canon->first, coeff * c * canon->second);
      }
  }
  return out;
}

WedgeVector WedgeOracle::apply_casimir(const WedgeVector& v, int k) const {
  // theta(Cas) = k (Cas acts as 1 on g) + sum over ordered position pairs.
  WedgeVector out;
  for (const auto& [mask, coeff] : v) {
    add_to(out, mask, coeff * k);
    auto u = indices_of(mask);
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = 0; b < u.size(); ++b) {
        if (a == b) continue;
        for (const auto& term : pair_[static_cast<std::size_t>(u[a]) * dim_ + u[b]]) {
          auto seq = u;
          seq[a] = term.r;
          seq[b] = term.s;
          auto canon = canonical(seq);
          if (!canon) continue;
          add_to(out, canon->first, coeff * term.c * canon->second);
        }
      }
  }
  return out;
}

std::uint64_t WedgeOracle::casimir_eigenspace_dim(int k) const {
  if (k < 0 || k > dim_) return 0;
  check_rows(k);
  std::uint64_t total = 0;
  for (const auto& [w, masks] : blocks(k)) {
    std::map<std::uint64_t, std::size_t> pos;
    for (std::size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = i;
    // Kernel of theta(Cas) - k on this block.
    std::vector<linalg::RatRow> m(masks.size(), linalg::RatRow(masks.size(), 0));
    for (std::size_t col = 0; col < masks.size(); ++col) {
      WedgeVector image = apply_casimir({{masks[col], mpq_class(1)}}, k);
      for (const auto& [mask, c] : image) m[pos.at(mask)][col] += c;
      m[col][col] -= k;
    }
    total += masks.size() - linalg::rank(m);
  }
  return total;
}

mpq_class WedgeOracle::max_casimir_eigenvalue(int k) const {
  if (k < 0 || k > dim_) throw std::invalid_argument("degree out of range");
  check_rows(k);
  const RootSystem& rs = table_.root_system();
  const std::size_t np = rs.num_positive_roots();
  auto all = blocks(k);
  std::optional<mpq_class> best;
  for (const auto& [w, masks] : all) {
    bool dominant = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.coroot_pairing(w, i) < 0) dominant = false;
    if (!dominant) continue;
    // Highest weight vectors: common kernel of theta(e_i).
    std::map<std::uint64_t, std::size_t> target_row;
    std::vector<linalg::RatRow> m;
    for (std::size_t col = 0; col < masks.size(); ++col) {
      for (int i = 0; i < rs.rank(); ++i) {
        WedgeVector image = apply_derivation(static_cast<int>(rs.simple_root_index(i)), {{masks[col], mpq_class(1)}});
        for (const auto& [mask, c] : image) {
          auto [it, inserted] = target_row.emplace(mask, m.size());
          if (inserted) m.emplace_back(masks.size(), 0);
          m[it->second][col] += c;
        }
      }
    }
    std::vector<linalg::RatRow> kernel;
    if (m.empty()) {
      for (std::size_t col = 0; col < masks.size(); ++col) {
        linalg::RatRow v(masks.size(), 0);
        v[col] = 1;
        kernel.push_back(std::move(v));
      }
    } else {
      kernel = linalg::nullspace(m, masks.size());
    }
    if (kernel.empty()) continue;
    WedgeVector v;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (kernel[0][i] != 0) v[masks[i]] = kernel[0][i];
    WedgeVector image = apply_casimir(v, k);
    const auto& [lead_mask, lead] = *v.begin();
    mpq_class eigen = image.count(lead_mask) ? image.at(lead_mask) / lead : mpq_class(0);
    WedgeVector scaled;
    for (const auto& [mask, c] : v) add_to(scaled, mask, c * eigen);
    if (scaled != image) throw std::logic_error("highest weight vector is not a Casimir eigenvector");
    if (!best || eigen > *best) best = eigen;
  }
  (void)np;
  return best.value_or(mpq_class(0));
}

WedgeVector WedgeOracle::coboundary(int u) const {
  WedgeVector out;
  for (int j = 0; j < dim_; ++j)
    for (int kk = 0; kk < dim_; ++kk) {
      const mpq_class& djk = table_.dual(j, kk);
      if (djk == 0) continue;
      for (const auto& [d, c] : ad_[kk][u]) {
        std::vector<int> seq{j, d};
        auto canon = canonical(seq);
        if (!canon) continue;
        add_to(out, canon->first, djk * c * canon->second / 2);
      }
    }
  return out;
}

std::uint64_t WedgeOracle::dg_ideal_dim(int k) const {
  if (k < 2 || k > dim_) return 0;
  check_rows(k);
  auto target_blocks = blocks(k);
  std::vector<WedgeVector> d(static_cast<std::size_t>(dim_));
  for (int u = 0; u < dim_; ++u) d[u] = coboundary(u);

  std::map<std::vector<int>, std::vector<WedgeVector>> spanning;
  for (const auto& [w, masks] : blocks(k - 2))
    for (std::uint64_t wm : masks) {
      auto wi = indices_of(wm);
      for (int u = 0; u < dim_; ++u) {
        WedgeVector prod;
        for (const auto& [pm, c] : d[u]) {
          if (pm & wm) continue;
          auto seq = wi;
          for (int x : indices_of(pm)) seq.push_back(x);
          auto canon = canonical(seq);
          if (!canon) continue;
          add_to(prod, canon->first, c * canon->second);
        }
        if (prod.empty()) continue;
        spanning[weight_of(prod.begin()->first)].push_back(std::move(prod));
      }
    }
  std::uint64_t total = 0;
  for (auto& [w, vecs] : spanning) {
    const auto& masks = target_blocks.at(w);
    std::map<std::uint64_t, std::size_t> pos;
    for (std::size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = i;
    std::vector<linalg::RatRow> rows;
    rows.reserve(vecs.size());
    for (const auto& v : vecs) {
      linalg::RatRow r(masks.size(), 0);
      for (const auto& [mask, c] : v) r[pos.at(mask)] = c;
      rows.push_back(std::move(r));
    }
    total += linalg::rank(rows);
  }
  return total;
}

std::vector<WedgeOracle::TopVectorResult> WedgeOracle::verify_ideal_top_vectors(
    const std::vector<AbelianIdeal>& ideals) const {
  std::vector<TopVectorResult> out;
  for (const auto& ideal : ideals) {
    TopVectorResult r;
    r.k = ideal.k();
    std::uint64_t mask = 0;
    for (auto k : ideal.roots) mask |= std::uint64_t{1} << table_.positive_root_vector(k);
    WedgeVector v{{mask, mpq_class(1)}};
    WedgeVector image = apply_casimir(v, static_cast<int>(r.k));
    r.eigenvalue = image.count(mask) ? image.at(mask) : mpq_class(0);
    WedgeVector scaled;
    add_to(scaled, mask, r.eigenvalue);
    r.is_eigenvector = (scaled == image) && r.eigenvalue == static_cast<long>(r.k);
    out.push_back(r);
  }
  return out;
}

}  // namespace alcovekit
