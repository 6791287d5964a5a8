#include "alcovekit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace alcovekit {

namespace {

char family_letter(Family f) {
  static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return letters[static_cast<int>(f)];
}

// Cartan matrix with a_ij = <alpha_j, alpha_i^vee>, Bourbaki labelling.
std::vector<int> cartan_matrix_for(Family family, int n) {
  std::vector<int> a(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto link = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };

  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 1, n - 2) = -2;
      break;
    case Family::C:  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 2, n - 1) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:  // 1-3-4-5-6-7-8 with 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      link(0, 1);
      link(1, 2);
      link(2, 3);
      at(2, 1) = -2;
      break;
    case Family::G:  // alpha_1 short
      at(0, 1) = -3;
      at(1, 0) = -1;
      break;
  }
  return a;
}

std::vector<mpq_class> invert(const std::vector<int>& m, int n) {
  std::vector<mpq_class> a(static_cast<std::size_t>(n * 2 * n));
  auto at = [&](int i, int j) -> mpq_class& { return a[static_cast<std::size_t>(i * 2 * n + j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = m[static_cast<std::size_t>(i * n + j)];
    at(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    if (pivot != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(at(pivot, j), at(col, j));
    mpq_class p = at(col, col);
    for (int j = 0; j < 2 * n; ++j) at(col, j) /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || at(r, col) == 0) continue;
      mpq_class f = at(r, col);
      for (int j = 0; j < 2 * n; ++j) at(r, j) -= f * at(col, j);
    }
  }
  std::vector<mpq_class> inv(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[static_cast<std::size_t>(i * n + j)] = at(i, n + j);
  return inv;
}

}  // namespace

std::string CartanType::label() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

CartanType CartanType::parse(std::string_view label) {
  if (label.size() < 2) throw std::invalid_argument("bad type label '" + std::string(label) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (c < 'A' || c > 'G') throw std::invalid_argument("bad type label '" + std::string(label) + "'");
  int rank = 0;
  for (char d : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(d)) || rank > 1000)
      throw std::invalid_argument("bad type label '" + std::string(label) + "'");
    rank = rank * 10 + (d - '0');
  }
  CartanType t{static_cast<Family>(c - 'A'), rank};
  validate_type(t);
  return t;
}

void validate_type(const CartanType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B: ok = t.rank >= 2; break;
    case Family::C: ok = t.rank >= 2; break;
    case Family::D: ok = t.rank >= 4; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::F: ok = t.rank == 4; break;
    case Family::G: ok = t.rank == 2; break;
  }
  if (!ok || t.rank > 64)
    throw std::invalid_argument("not a simple type: " + t.label());
}

Weight Weight::zero(int rank) { return Weight(std::vector<mpq_class>(static_cast<std::size_t>(rank), 0)); }

Weight Weight::from_ints(std::span<const std::int64_t> values) {
  std::vector<mpq_class> c;
  c.reserve(values.size());
  for (auto v : values) c.emplace_back(static_cast<long>(v));
  return Weight(std::move(c));
}

bool Weight::is_dominant_integral() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const mpq_class& q) { return q >= 0 && q.get_den() == 1; });
}

std::vector<std::int64_t> Weight::to_ints() const {
  std::vector<std::int64_t> out;
  out.reserve(coords.size());
  for (const auto& q : coords) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
      throw std::domain_error("weight coordinate is not a machine integer: " + q.get_str());
    out.push_back(q.get_num().get_si());
  }
  return out;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].get_str();
  os << ')';
  return os.str();
}

RootSystem RootSystem::build(Family family, int rank) {
  CartanType type{family, rank};
  validate_type(type);

  RootSystem rs;
  rs.type_ = type;
  const int n = rank;
  rs.cartan_ = cartan_matrix_for(family, n);
  rs.cartan_inverse_ = invert(rs.cartan_, n);

  // Symmetrizer: d_i a_ij = d_j a_ji, propagated along the Dynkin diagram.
  std::vector<mpq_class> d(static_cast<std::size_t>(n), 0);
  d[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || rs.cartan(i, j) == 0 || d[j] != 0) continue;
      d[j] = d[i] * rs.cartan(i, j) / rs.cartan(j, i);
      stack.push_back(j);
    }
  }
  mpq_class dmax = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x /= dmax;
  rs.half_norm_ = d;
  for (const auto& x : d) {
    mpq_class six = x * 6;
    if (six.get_den() != 1) throw std::logic_error("unexpected root length ratio");
    rs.half_norm6_.push_back(static_cast<int>(six.get_num().get_si()));
  }

  // Positive roots by breadth-first closure over heights.
  std::map<Root, int> known;
  std::vector<Root> level;
  for (int i = 0; i < n; ++i) {
    Root r(static_cast<std::size_t>(n), 0);
    r[i] = 1;
    level.push_back(r);
    known.emplace(r, 1);
  }
  int height = 1;
  while (!level.empty()) {
    std::vector<Root> next;
    for (const Root& beta : level) {
      for (int i = 0; i < n; ++i) {
        int q = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++q;
        }
        const int p = q - rs.coroot_pairing(beta, i);
        if (p <= 0) continue;
        Root up = beta;
        up[i] += 1;
        if (known.emplace(up, height + 1).second) next.push_back(up);
      }
    }
    level = std::move(next);
    ++height;
  }
  for (auto& [r, h] : known) rs.roots_.push_back(r);
  auto height_of = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0); };
  std::stable_sort(rs.roots_.begin(), rs.roots_.end(), [&](const Root& a, const Root& b) {
    int ha = height_of(a), hb = height_of(b);
    return ha != hb ? ha < hb : a < b;
  });
  for (const auto& r : rs.roots_) rs.heights_.push_back(height_of(r));

  const std::size_t count = rs.roots_.size();
  if (count >= 2 && rs.heights_[count - 1] == rs.heights_[count - 2])
    throw std::logic_error("highest root is not unique");
  rs.simple_index_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Root r(static_cast<std::size_t>(n), 0);
    r[i] = 1;
    rs.simple_index_[i] = static_cast<std::size_t>(rs.find_root(r));
  }
  rs.raise_.assign(count * static_cast<std::size_t>(n), -1);
  rs.sums_.assign(count * count, -1);
  for (std::size_t k = 0; k < count; ++k) {
    for (int i = 0; i < n; ++i) {
      Root up = rs.roots_[k];
      up[i] += 1;
      rs.raise_[k * n + i] = rs.find_root(up);
    }
    for (std::size_t m = 0; m < count; ++m) {
      Root s = rs.roots_[k];
      for (int i = 0; i < n; ++i) s[i] += rs.roots_[m][i];
      rs.sums_[k * count + m] = rs.find_root(s);
    }
  }

  rs.coxeter_ = rs.heights_.back() + 1;
  mpq_class hv = 1;
  for (int i = 0; i < n; ++i) hv += rs.highest_root()[i] * d[i];
  if (hv.get_den() != 1) throw std::logic_error("non-integral dual Coxeter number");
  rs.dual_coxeter_ = static_cast<int>(hv.get_num().get_si());

  // Exponents: the multiplicity of j equals #(height j) - #(height j+1).
  std::vector<int> by_height(static_cast<std::size_t>(rs.coxeter_ + 1), 0);
  for (int h : rs.heights_) ++by_height[h];
  for (int j = 1; j < rs.coxeter_; ++j)
    for (int c = by_height[j] - by_height[j + 1]; c > 0; --c) rs.exponents_.push_back(j);

  if (static_cast<int>(rs.exponents_.size()) != n ||
      std::accumulate(rs.exponents_.begin(), rs.exponents_.end(), std::size_t{0}) != count)
    throw std::logic_error("exponent data inconsistent for " + type.label());
  return rs;
}

std::ptrdiff_t RootSystem::find_root(std::span<const int> coords) const {
  Root key(coords.begin(), coords.end());
  auto it = std::lower_bound(roots_.begin(), roots_.end(), key, [](const Root& a, const Root& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });
  if (it == roots_.end() || *it != key) return -1;
  return it - roots_.begin();
}

mpq_class RootSystem::norm_std(std::size_t k) const {
  return inner_std_roots(roots_[k], roots_[k]);
}

mpq_class RootSystem::to_killing(const mpq_class& standard) const {
  return standard / (2 * dual_coxeter_);
}

Weight RootSystem::root_to_weight(std::span<const int> root_coords) const {
  std::vector<mpq_class> c(static_cast<std::size_t>(rank()), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) c[i] += cartan(i, j) * root_coords[j];
  return Weight(std::move(c));
}

Weight RootSystem::root_to_weight(std::span<const mpq_class> root_coords) const {
  std::vector<mpq_class> c(static_cast<std::size_t>(rank()), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) c[i] += cartan(i, j) * root_coords[j];
  return Weight(std::move(c));
}

std::vector<mpq_class> RootSystem::weight_to_root_coords(const Weight& w) const {
  std::vector<mpq_class> r(static_cast<std::size_t>(rank()), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) r[i] += cartan_inverse_[index(i, j)] * w.coords[j];
  return r;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
  auto r = weight_to_root_coords(w);
  return std::all_of(r.begin(), r.end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

Weight RootSystem::rho() const {
  return Weight(std::vector<mpq_class>(static_cast<std::size_t>(rank()), 1));
}

mpq_class RootSystem::inner_std(const Weight& a, const Weight& b) const {
  auto r = weight_to_root_coords(a);
  mpq_class s = 0;
  for (int i = 0; i < rank(); ++i) s += r[i] * half_norm_[i] * b.coords[i];
  return s;
}

mpq_class RootSystem::inner_std_roots(std::span<const int> a, std::span<const int> b) const {
  mpq_class s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    s += a[i] * half_norm_[i] * coroot_pairing(b, i);
  }
  return s;
}

int RootSystem::coroot_pairing(std::span<const int> root_coords, int j) const {
  int s = 0;
  for (int k = 0; k < rank(); ++k) s += cartan(j, k) * root_coords[k];
  return s;
}

int RootSystem::simple_on_coroot(int j, std::size_t k) const {
  // <alpha_j, phi^vee> = 2 (alpha_j, phi) / (phi, phi)
  Root aj(static_cast<std::size_t>(rank()), 0);
  aj[j] = 1;
  mpq_class v = 2 * inner_std_roots(aj, roots_[k]) / norm_std(k);
  if (v.get_den() != 1) throw std::logic_error("non-integral coroot pairing");
  return static_cast<int>(v.get_num().get_si());
}

void RootSystem::require_dominant(const Weight& w) const {
  if (w.rank() != rank()) throw std::invalid_argument("weight rank mismatch for " + label());
  if (!w.is_dominant_integral())
    throw std::invalid_argument("weight " + w.to_string() + " is not dominant integral");
}

mpq_class RootSystem::casimir_eigenvalue(const Weight& lambda) const {
  require_dominant(lambda);
  Weight shifted = lambda;
  for (auto& c : shifted.coords) c += 2;
  return to_killing(inner_std(lambda, shifted));
}

mpq_class RootSystem::casimir_of_root_coords(std::span<const std::int64_t> root_coords) const {
  // (mu, mu + 2 rho)_std with mu = sum r_i alpha_i, using (alpha_i, nu) = d_i <nu, alpha_i^vee>.
  mpq_class s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (root_coords[i] == 0) continue;
    std::int64_t pairing = 2;  // <2 rho, alpha_i^vee>
    for (int k = 0; k < rank(); ++k) pairing += cartan(i, k) * root_coords[k];
    s += mpq_class(static_cast<long>(root_coords[i] * pairing)) * half_norm_[i];
  }
  return to_killing(s);
}

mpz_class RootSystem::weyl_dimension(const Weight& lambda) const {
  require_dominant(lambda);
  auto ints = lambda.to_ints();
  return weyl_dimension(ints);
}

mpz_class RootSystem::weyl_dimension(std::span<const std::int64_t> lambda) const {
  if (static_cast<int>(lambda.size()) != rank()) throw std::invalid_argument("weight rank mismatch");
  mpz_class num = 1, den = 1;
  for (const Root& phi : roots_) {
    // 6 (lambda + rho, phi)_std and 6 (rho, phi)_std
    std::int64_t top = 0, bottom = 0;
    for (int i = 0; i < rank(); ++i) {
      if (lambda[i] < 0) throw std::invalid_argument("weight is not dominant");
      top += static_cast<std::int64_t>(phi[i]) * half_norm6_[i] * (lambda[i] + 1);
      bottom += static_cast<std::int64_t>(phi[i]) * half_norm6_[i];
    }
    num *= static_cast<long>(top);
    den *= static_cast<long>(bottom);
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("Weyl dimension product is not integral");
  mpz_class q = num / den;
  return q;
}

int RootSystem::heisenberg_count() const {
  const Root& psi = highest_root();
  int positive = 0;
  for (const Root& phi : roots_)
    if (inner_std_roots(psi, phi) > 0) ++positive;
  if (positive % 2 != 1) throw std::logic_error("even count of roots pairing positively with psi");
  const int m = (positive - 1) / 2;
  if (m != dual_coxeter_ - 2) throw std::logic_error("Heisenberg count differs from h^vee - 2");
  return m;
}

std::vector<std::vector<std::int64_t>> dominant_weights_up_to_casimir(const RootSystem& rs, const mpq_class& max_cas) {
  // Cas is increasing in every coordinate on the dominant cone, so a partial
  // assignment with the remaining coordinates at zero is a lower bound.
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(rs.rank()), 0);
  auto cas = [&] { return rs.casimir_eigenvalue(Weight::from_ints(cur)); };
  auto walk = [&](auto&& self, int i) -> void {
    if (i == rs.rank()) {
      out.push_back(cur);
      return;
    }
    for (cur[i] = 0; cas() <= max_cas; ++cur[i]) self(self, i + 1);
    cur[i] = 0;
  };
  if (max_cas >= 0) walk(walk, 0);
  return out;
}

std::vector<CartanType> standard_types(int max_rank) {
  std::vector<CartanType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace alcovekit
