#include "alcovekit/alcove.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace alcovekit {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Reflection data for generator g: v -> v - (phi(v) - shift) * coroot, with
// coroot[j] = <alpha_j, phi^vee>.
struct Reflection {
  const Root* root;
  std::vector<std::int64_t> coroot;
  std::int64_t shift;
};

Reflection reflection_for(const RootSystem& rs, int g) {
  const int n = rs.rank();
  Reflection r;
  std::size_t k = g < n ? rs.simple_root_index(g) : rs.highest_root_index();
  r.root = &rs.root(k);
  r.shift = g < n ? 0 : 1;
  r.coroot.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) r.coroot[j] = rs.simple_on_coroot(j, k);
  return r;
}

void finish(const RootSystem& rs, AffineElement& e) {
  const int n = rs.rank();
  const auto& roots = rs.positive_roots();
  e.n_vec.resize(roots.size());
  e.length = 0;
  e.cas = 0;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::int64_t v = e.x_sigma.eval_scaled(roots[k]);
    int f = static_cast<int>(floor_div(v, e.x_sigma.den));
    e.n_vec[k] = f;
    e.length += f;
    e.cas += static_cast<std::int64_t>(f) * (f + 1) / 2;
  }
  // lambda_i = h^vee alpha_i(x) / d_i - 1 with den = 6 h^vee.
  e.lambda.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::int64_t scale = rs.half_norm6(i) * (e.x_sigma.den / (6 * rs.dual_coxeter_number()));
    if (e.x_sigma.num[i] % scale != 0) throw std::logic_error("lambda^sigma is not integral");
    e.lambda[i] = e.x_sigma.num[i] / scale - 1;
  }
  // z in the coroot basis: alpha_j(z) = sum_i m_i a_ij.
  std::vector<mpq_class> m(static_cast<std::size_t>(n), 0);
  {
    // Solve A^T m = z_eval exactly.
    std::vector<mpq_class> aug(static_cast<std::size_t>(n * (n + 1)));
    auto at = [&](int r, int c) -> mpq_class& { return aug[static_cast<std::size_t>(r * (n + 1) + c)]; };
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) at(r, c) = rs.cartan(c, r);
      at(r, n) = static_cast<long>(e.z_eval[r]);
    }
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (at(p, c) == 0) ++p;
      if (p != c)
        for (int j = 0; j <= n; ++j) std::swap(at(p, j), at(c, j));
      mpq_class piv = at(c, c);
      for (int j = 0; j <= n; ++j) at(c, j) /= piv;
      for (int r = 0; r < n; ++r) {
        if (r == c || at(r, c) == 0) continue;
        mpq_class f = at(r, c);
        for (int j = 0; j <= n; ++j) at(r, j) -= f * at(c, j);
      }
    }
    for (int r = 0; r < n; ++r) m[r] = at(r, n);
  }
  e.z_coroot.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (m[i].get_den() != 1) throw std::logic_error("translation part is not in the coroot lattice");
    e.z_coroot[i] = m[i].get_num().get_si();
  }
}

bool dominant(const CartanPoint& p) {
  return std::all_of(p.num.begin(), p.num.end(), [](std::int64_t v) { return v > 0; });
}

}  // namespace

std::vector<mpq_class> CartanPoint::values() const {
  std::vector<mpq_class> out;
  out.reserve(num.size());
  for (auto v : num) {
    mpq_class q(static_cast<long>(v), static_cast<unsigned long>(den));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

std::int64_t CartanPoint::eval_scaled(std::span<const int> root_coords) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < num.size(); ++i) s += root_coords[i] * num[i];
  return s;
}

bool CartanPoint::operator==(const CartanPoint& other) const {
  if (num.size() != other.num.size()) return false;
  for (std::size_t i = 0; i < num.size(); ++i) {
    mpz_class lhs = mpz_class(static_cast<long>(num[i])) * static_cast<long>(other.den);
    mpz_class rhs = mpz_class(static_cast<long>(other.num[i])) * static_cast<long>(den);
    if (lhs != rhs) return false;
  }
  return true;
}

CartanPoint base_point(const RootSystem& rs) {
  CartanPoint p;
  p.den = 6 * rs.dual_coxeter_number();
  for (int i = 0; i < rs.rank(); ++i) p.num.push_back(rs.half_norm6(i));
  return p;
}

CartanPoint point_of_shifted_weight(const RootSystem& rs, std::span<const std::int64_t> lambda) {
  CartanPoint p;
  p.den = 6 * rs.dual_coxeter_number();
  for (int i = 0; i < rs.rank(); ++i) p.num.push_back(rs.half_norm6(i) * (lambda[i] + 1));
  return p;
}

CartanPoint AffineElement::apply(const CartanPoint& p) const {
  const std::size_t n = p.num.size();
  CartanPoint out;
  out.den = p.den;
  out.num.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t s = z_eval[j] * p.den;
    for (std::size_t k = 0; k < n; ++k) s += w_lin[j * n + k] * p.num[k];
    out.num[j] = s;
  }
  return out;
}

AffineElement identity_element(const RootSystem& rs) {
  const int n = rs.rank();
  AffineElement e;
  e.w_lin.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) e.w_lin[static_cast<std::size_t>(i * n + i)] = 1;
  e.z_eval.assign(static_cast<std::size_t>(n), 0);
  e.x_sigma = base_point(rs);
  finish(rs, e);
  return e;
}

AffineElement right_multiply(const RootSystem& rs, const AffineElement& e, int generator) {
  // (sigma s)(v) = W (v - (phi(v) - shift) c) + t = W S v + (W c shift + t).
  const int n = rs.rank();
  Reflection r = reflection_for(rs, generator);
  AffineElement out;
  out.w_lin.assign(static_cast<std::size_t>(n * n), 0);
  out.z_eval = e.z_eval;
  for (int j = 0; j < n; ++j) {
    // Row j of W S where S = I - c phi^T.
    std::int64_t wc = 0;
    for (int k = 0; k < n; ++k) wc += e.w_lin[j * n + k] * r.coroot[k];
    for (int k = 0; k < n; ++k)
      out.w_lin[j * n + k] = e.w_lin[j * n + k] - wc * (*r.root)[k];
    out.z_eval[j] += wc * r.shift;
  }
  out.x_sigma = out.apply(base_point(rs));
  finish(rs, out);
  return out;
}

std::vector<AffineElement> enumerate_dominant(const RootSystem& rs, int max_length,
                                              std::optional<int> max_npsi) {
  if (max_length < 0) throw std::invalid_argument("max_length must be nonnegative");
  std::vector<AffineElement> all;
  std::vector<AffineElement> level{identity_element(rs)};
  for (int len = 0;; ++len) {
    std::sort(level.begin(), level.end(),
              [](const AffineElement& a, const AffineElement& b) { return a.n_vec < b.n_vec; });
    all.insert(all.end(), level.begin(), level.end());
    if (len == max_length || level.empty()) break;
    std::set<std::vector<std::int64_t>> seen;
    std::vector<AffineElement> next;
    for (const auto& e : level) {
      for (int g = 0; g <= rs.rank(); ++g) {
        AffineElement c = right_multiply(rs, e, g);
        if (c.length != len + 1 || !dominant(c.x_sigma)) continue;
        if (max_npsi && c.n_psi() > *max_npsi) continue;
        if (!seen.insert(c.x_sigma.num).second) continue;
        next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  return all;
}

std::vector<AffineElement> enumerate_by_casimir(const RootSystem& rs, int max_cas) {
  auto all = enumerate_dominant(rs, max_cas);
  std::erase_if(all, [&](const AffineElement& e) { return e.cas > max_cas; });
  return all;
}

int linear_part_length(const RootSystem& rs, const AffineElement& e) {
  // Row j of w_lin holds w^{-1}(alpha_j) in simple-root coordinates.
  const int n = rs.rank();
  int count = 0;
  for (const Root& phi : rs.positive_roots()) {
    bool negative = false;
    for (int k = 0; k < n; ++k) {
      std::int64_t c = 0;
      for (int j = 0; j < n; ++j) c += phi[j] * e.w_lin[j * n + k];
      if (c < 0) { negative = true; break; }
      if (c > 0) break;
    }
    if (negative) ++count;
  }
  return count;
}

std::int64_t two_rho_on_translation(const RootSystem& rs, const AffineElement& e) {
  std::int64_t s = 0;
  for (const Root& phi : rs.positive_roots())
    for (int j = 0; j < rs.rank(); ++j) s += phi[j] * e.z_eval[j];
  return s;
}

FoldResult reduce_to_fundamental(const RootSystem& rs, const CartanPoint& p) {
  const int n = rs.rank();
  FoldResult out;
  out.folded = p;
  if (p.den <= 0) throw std::invalid_argument("point denominator must be positive");
  for (const Root& phi : rs.positive_roots()) {
    std::int64_t v = p.eval_scaled(phi);
    if (v % p.den == 0) { out.regular = false; break; }
  }
  std::vector<Reflection> refl;
  for (int g = 0; g <= n; ++g) refl.push_back(reflection_for(rs, g));
  CartanPoint& x = out.folded;
  const Root& psi = rs.highest_root();
  while (true) {
    int g = -1;
    for (int i = 0; i < n; ++i)
      if (x.num[i] < 0) { g = i; break; }
    if (g < 0 && x.eval_scaled(psi) > x.den) g = n;
    if (g < 0) break;
    const Reflection& r = refl[g];
    const std::int64_t offset = x.eval_scaled(*r.root) - r.shift * x.den;
    for (int j = 0; j < n; ++j) x.num[j] -= offset * r.coroot[j];
    out.parity = -out.parity;
    ++out.reflections;
  }
  return out;
}

int chi_at_aP(const RootSystem& rs, std::span<const std::int64_t> lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank()) throw std::invalid_argument("weight rank mismatch");
  for (auto v : lambda)
    if (v < 0) throw std::invalid_argument("chi_at_aP requires a dominant weight");
  FoldResult f = reduce_to_fundamental(rs, point_of_shifted_weight(rs, lambda));
  if (!f.regular) return 0;
  return f.folded == base_point(rs) ? f.parity : 0;
}

int chi_at_aP(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant_integral())
    throw std::invalid_argument("chi_at_aP requires a dominant integral weight");
  auto ints = lambda.to_ints();
  return chi_at_aP(rs, ints);
}

std::vector<std::vector<std::size_t>> ideal_chain(const RootSystem& rs, const AffineElement& e) {
  std::vector<std::vector<std::size_t>> chain;
  for (int i = 0; i <= e.n_psi(); ++i) {
    std::vector<std::size_t> level;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
      if (e.n_vec[k] >= i) level.push_back(k);
    chain.push_back(std::move(level));
  }
  return chain;
}

bool is_upper_ideal(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  std::vector<char> in(rs.num_positive_roots(), 0);
  for (auto k : roots) in[k] = 1;
  for (auto k : roots)
    for (int i = 0; i < rs.rank(); ++i) {
      auto up = rs.raise(k, i);
      if (up >= 0 && !in[static_cast<std::size_t>(up)]) return false;
    }
  return true;
}

}  // namespace alcovekit
