#include "alcovekit/typea.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "alcovekit/alcove.hpp"

namespace alcovekit {

Partition::Partition(std::vector<int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && p[i] > p[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  parts = std::move(p);
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

Partition weight_to_partition(std::span<const std::int64_t> lambda, int m) {
  if (m < 2 || static_cast<int>(lambda.size()) != m - 1)
    throw std::invalid_argument("weight must have m - 1 coordinates");
  std::vector<int> q(static_cast<std::size_t>(m - 1), 0);
  std::int64_t acc = 0;
  for (int i = m - 2; i >= 0; --i) {
    if (lambda[i] < 0) throw std::invalid_argument("weight is not dominant");
    acc += lambda[i];
    q[i] = static_cast<int>(acc);
  }
  return Partition(std::move(q));
}

Partition weight_to_partition(const Weight& lambda, int m) {
  auto ints = lambda.to_ints();
  return weight_to_partition(ints, m);
}

std::vector<std::int64_t> partition_to_weight(const Partition& p, int m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (static_cast<int>(p.length()) > m - 1) throw std::invalid_argument("partition has more than m - 1 parts");
  std::vector<std::int64_t> w(static_cast<std::size_t>(m - 1), 0);
  for (int i = 0; i < m - 1; ++i) {
    const int qi = i < static_cast<int>(p.length()) ? p.parts[i] : 0;
    const int qn = i + 1 < static_cast<int>(p.length()) ? p.parts[i + 1] : 0;
    w[i] = qi - qn;
  }
  return w;
}

std::vector<int> beta_numbers(const Partition& p, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  std::size_t len = std::max<std::size_t>(p.length(), 1);
  len = (len + m - 1) / m * m;
  std::vector<int> beta(len);
  for (std::size_t i = 0; i < len; ++i) {
    const int part = i < p.length() ? p.parts[i] : 0;
    beta[i] = part + static_cast<int>(len - 1 - i);
  }
  return beta;
}

Partition from_beta_numbers(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> parts(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) parts[i] = beta[i] - static_cast<int>(beta.size() - 1 - i);
  return Partition(std::move(parts));
}

namespace {

template <class Pick>
Partition core_with(const Partition& p, int m, Pick pick) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  auto beta = beta_numbers(p, m);
  std::set<int> beads(beta.begin(), beta.end());
  while (true) {
    std::vector<int> movable;
    for (int b : beads)
      if (b - m >= 0 && !beads.count(b - m)) movable.push_back(b);
    if (movable.empty()) break;
    int b = pick(movable);
    beads.erase(b);
    beads.insert(b - m);
  }
  return from_beta_numbers(std::vector<int>(beads.begin(), beads.end()));
}

}  // namespace

Partition m_core(const Partition& p, int m) {
  return core_with(p, m, [](const std::vector<int>& movable) { return movable.back(); });
}

Partition m_core_random_order(const Partition& p, int m, std::mt19937_64& rng) {
  return core_with(p, m, [&](const std::vector<int>& movable) {
    std::uniform_int_distribution<std::size_t> d(0, movable.size() - 1);
    return movable[d(rng)];
  });
}

std::vector<Partition> partitions_of(int n, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> walk = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int v = std::min(remaining, cap); v >= 1; --v) {
      cur.push_back(v);
      walk(remaining - v, v);
      cur.pop_back();
    }
  };
  if (n >= 0) walk(n, n);
  return out;
}

NullCoreCount count_null_cores(int m, int k, std::uint64_t candidate_ceiling) {
  if (m < 2 || k < 0) throw std::invalid_argument("count_null_cores needs m >= 2, k >= 0");
  NullCoreCount out;
  out.m = m;
  out.k = k;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m + k - 2), static_cast<unsigned long>(m - 2));
  out.expected = b.get_ui();
  auto candidates = partitions_of(m * k, m - 1);
  if (candidates.size() > candidate_ceiling)
    throw std::length_error("partition enumeration exceeds the configured ceiling");
  for (const auto& p : candidates)
    if (m_core(p, m).empty()) ++out.count;
  return out;
}

NullCoreReport verify_null_core_correspondence(int m, int max_length, int surjectivity_bound) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  NullCoreReport rep;
  rep.m = m;
  rep.max_length = max_length;
  RootSystem rs = RootSystem::build(Family::A, m - 1);
  std::set<Partition> images;
  for (const auto& e : enumerate_dominant(rs, max_length)) {
    ++rep.alcoves;
    Partition q = weight_to_partition(e.lambda, m);
    if (q.size() % m != 0) ++rep.size_not_multiple;
    if (!m_core(q, m).empty()) ++rep.non_null_core;
    if (!images.insert(q).second) ++rep.duplicate_images;
    if (chi_at_aP(rs, e.lambda) != e.sign()) ++rep.sign_mismatches;
  }
  rep.surjectivity_bound = surjectivity_bound < 0 ? 2 * m : surjectivity_bound;
  for (int n = 0; n <= rep.surjectivity_bound; n += m)
    for (const auto& p : partitions_of(n, m - 1))
      if (m_core(p, m).empty() && !images.count(p)) rep.unhit.push_back(p);
  return rep;
}

}  // namespace alcovekit
