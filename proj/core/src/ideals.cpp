#include "alcovekit/ideals.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace alcovekit {

namespace {

std::vector<std::int64_t> root_sum_coords(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  std::vector<std::int64_t> r(static_cast<std::size_t>(rs.rank()), 0);
  for (auto k : roots)
    for (int i = 0; i < rs.rank(); ++i) r[i] += rs.root(k)[i];
  return r;
}

std::vector<std::int64_t> root_coords_to_weight(const RootSystem& rs, const std::vector<std::int64_t>& r) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(rs.rank()), 0);
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) w[i] += rs.cartan(i, j) * r[j];
  return w;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  if (b > cap) return cap + 1;
  return b.get_ui();
}

}  // namespace

bool is_abelian_ideal(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  if (!is_upper_ideal(rs, roots)) return false;
  for (auto a : roots)
    for (auto b : roots)
      if (rs.sum_index(a, b) >= 0) return false;
  return true;
}

AbelianIdeal make_ideal(const RootSystem& rs, std::vector<std::size_t> roots) {
  std::sort(roots.begin(), roots.end());
  AbelianIdeal out;
  out.lambda = root_coords_to_weight(rs, root_sum_coords(rs, roots));
  out.roots = std::move(roots);
  return out;
}

std::vector<AbelianIdeal> enumerate_abelian_ideals(const RootSystem& rs) {
  const std::size_t count = rs.num_positive_roots();
  std::vector<char> in(count, 0);
  std::vector<std::size_t> chosen;
  std::vector<AbelianIdeal> out;

  // Roots are stored in increasing height, so index count-1 is decided first.
  std::function<void(std::ptrdiff_t)> dfs = [&](std::ptrdiff_t idx) {
    if (idx < 0) {
      out.push_back(make_ideal(rs, chosen));
      return;
    }
    const auto k = static_cast<std::size_t>(idx);
    bool can_include = true;
    for (int i = 0; i < rs.rank() && can_include; ++i) {
      auto up = rs.raise(k, i);
      if (up >= 0 && !in[static_cast<std::size_t>(up)]) can_include = false;
    }
    for (std::size_t j = 0; j < chosen.size() && can_include; ++j)
      if (rs.sum_index(k, chosen[j]) >= 0) can_include = false;
    if (can_include) {
      in[k] = 1;
      chosen.push_back(k);
      dfs(idx - 1);
      chosen.pop_back();
      in[k] = 0;
    }
    dfs(idx - 1);
  };
  dfs(static_cast<std::ptrdiff_t>(count) - 1);

  std::sort(out.begin(), out.end(), [](const AbelianIdeal& a, const AbelianIdeal& b) {
    if (a.k() != b.k()) return a.k() < b.k();
    return a.lambda < b.lambda;
  });
  return out;
}

Wf2Table::Wf2Table(const RootSystem& rs)
    : elements_(enumerate_dominant(rs, static_cast<int>(rs.num_positive_roots()), 1)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) by_nvec_.emplace(elements_[i].n_vec, i);
}

const AffineElement* Wf2Table::find(const std::vector<int>& n_vec) const {
  auto it = by_nvec_.find(n_vec);
  return it == by_nvec_.end() ? nullptr : &elements_[it->second];
}

AffineElement ideal_to_sigma(const RootSystem& rs, const Wf2Table& table, const AbelianIdeal& ideal) {
  if (!is_abelian_ideal(rs, ideal.roots)) throw std::invalid_argument("not an abelian ideal");
  std::vector<int> n_vec(rs.num_positive_roots(), 0);
  for (auto k : ideal.roots) n_vec[k] = 1;
  const AffineElement* e = table.find(n_vec);
  if (!e) throw std::logic_error("no alcove in 2 A_1 matches the ideal");
  return *e;
}

AbelianIdeal sigma_to_ideal(const RootSystem& rs, const AffineElement& e) {
  if (!in_Wf2(e)) throw std::invalid_argument("sigma is not in W_f^(2)");
  std::vector<std::size_t> roots;
  for (std::size_t k = 0; k < e.n_vec.size(); ++k)
    if (e.n_vec[k] == 1) roots.push_back(k);
  return make_ideal(rs, std::move(roots));
}

mpz_class dim_Ck(const RootSystem& rs, const std::vector<AbelianIdeal>& ideals, std::size_t k) {
  if (k == 0) return 1;
  mpz_class total = 0;
  for (const auto& ideal : ideals)
    if (ideal.k() == k) total += rs.weyl_dimension(ideal.lambda);
  return total;
}

mpz_class dim_Ck(const RootSystem& rs, std::size_t k) {
  return dim_Ck(rs, enumerate_abelian_ideals(rs), k);
}

mpq_class shifted_norm_gain(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  return rs.casimir_of_root_coords(root_sum_coords(rs, roots));
}

KostantReport verify_kostant_inequality(const RootSystem& rs, std::size_t k,
                                        std::uint64_t subset_ceiling) {
  const std::size_t n = rs.num_positive_roots();
  KostantReport rep;
  rep.k = k;
  if (binomial_capped(n, k, subset_ceiling) > subset_ceiling)
    throw std::length_error("subset enumeration exceeds the configured ceiling");
  std::set<std::vector<std::size_t>> expected;
  for (const auto& ideal : enumerate_abelian_ideals(rs))
    if (ideal.k() == k) expected.insert(ideal.roots);

  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  std::set<std::vector<std::size_t>> equal;
  const mpq_class bound(static_cast<long>(k));
  if (k <= n) {
    while (true) {
      ++rep.subsets;
      mpq_class gain = shifted_norm_gain(rs, subset);
      if (gain > bound) ++rep.violations;
      else if (gain == bound) equal.insert(subset);
      // next combination
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
      while (i >= 0 && subset[i] == n - k + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++subset[i];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  rep.equality_cases.assign(equal.begin(), equal.end());
  rep.equality_matches_ideals = (equal == expected);
  return rep;
}

RootPartitionReport verify_root_partition_bound(const RootSystem& rs, int cas_ceiling,
                                                std::uint64_t candidate_ceiling) {
  if (cas_ceiling < 0) throw std::invalid_argument("cas ceiling must be nonnegative");
  const std::size_t n = rs.num_positive_roots();
  RootPartitionReport rep;
  rep.cas_ceiling = cas_ceiling;

  std::set<std::vector<int>> expected;
  for (const auto& e : enumerate_by_casimir(rs, cas_ceiling)) expected.insert(e.n_vec);
  rep.expected_equality_cases = expected.size();

  std::set<std::vector<int>> equal;
  std::vector<int> q(n, 0);
  std::vector<std::int64_t> mu(static_cast<std::size_t>(rs.rank()), 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int budget) {
    if (pos == n) {
      if (++rep.partitions > candidate_ceiling)
        throw std::length_error("root-partition enumeration exceeds the configured ceiling");
      const int c = cas_ceiling - budget;
      mpq_class cas = rs.casimir_of_root_coords(mu);
      if (cas > c) ++rep.violations;
      else if (cas == c) equal.insert(q);
      return;
    }
    for (int v = 0; v * (v + 1) / 2 <= budget; ++v) {
      q[pos] = v;
      for (int i = 0; i < rs.rank(); ++i) mu[i] += static_cast<std::int64_t>(v) * rs.root(pos)[i];
      walk(pos + 1, budget - v * (v + 1) / 2);
      for (int i = 0; i < rs.rank(); ++i) mu[i] -= static_cast<std::int64_t>(v) * rs.root(pos)[i];
    }
    q[pos] = 0;
  };
  walk(0, cas_ceiling);
  rep.equality_cases = equal.size();
  rep.equality_matches_alcoves = (equal == expected);
  return rep;
}

}  // namespace alcovekit
