#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "alcovekit/alcove.hpp"
#include "alcovekit/ideals.hpp"
#include "alcovekit/series.hpp"
#include "alcovekit/typea.hpp"
#include "alcovekit/wedge.hpp"

namespace alcovekit::cli {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

mpz_class signed_coeff(const IntSeries& b, std::size_t k) { return k % 2 ? mpz_class(-b[k]) : b[k]; }

RootSystem require_type(const SuiteOptions& o) {
  if (!o.type) throw std::invalid_argument("this suite needs --type");
  return RootSystem::build(*o.type);
}

json root_json(const RootSystem& rs, std::size_t k) { return dec_list(rs.root(k)); }

json roots_json(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  json out = json::array();
  for (auto k : roots) out.push_back(root_json(rs, k));
  return out;
}

// Sum of dim V over dominant sigma of each length (legs six and seven), and
// the part with Cas(lambda^sigma) equal to the length.
struct HarmonicSums {
  std::vector<mpz_class> full;
  std::vector<mpz_class> graded;
};

HarmonicSums harmonic_sums(const RootSystem& rs, int max_length) {
  HarmonicSums h{std::vector<mpz_class>(static_cast<std::size_t>(max_length) + 1, 0),
                 std::vector<mpz_class>(static_cast<std::size_t>(max_length) + 1, 0)};
  for (const auto& e : enumerate_dominant(rs, max_length)) {
    mpz_class d = rs.weyl_dimension(e.lambda);
    h.full[e.length] += d;
    if (e.cas == e.length) h.graded[e.length] += d;
  }
  return h;
}

// Largest ideal dimension for the three types where it is below h^vee.
std::optional<std::size_t> malcev_table(const CartanType& t) {
  if (t.family == Family::A && t.rank == 1) return 1;
  if (t.family == Family::A && t.rank == 2) return 2;
  if (t.family == Family::G) return 3;
  return std::nullopt;
}

Report peterson(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  cfg.require(rs.rank() <= cfg.max_ideal_rank, "rank for ideal enumeration");
  Report r("peterson", rs.label());
  auto ideals = enumerate_abelian_ideals(rs);
  const mpz_class expected = mpz_class(1) << rs.rank();
  r.check("ideal-count", "abelian ideal count is 2^rank", mpz_class(ideals.size()) == expected,
          {{"count", dec(ideals.size())}, {"expected", dec(expected)}});
  Wf2Table table(rs);
  r.check("alcoves-in-2A1", "dominant alcoves inside twice the fundamental alcove",
          mpz_class(table.elements().size()) == expected,
          {{"count", dec(table.elements().size())}, {"expected", dec(expected)}});
  std::size_t round_trips = 0, length_matches = 0, max_k = 0;
  for (const auto& ideal : ideals) {
    auto sigma = ideal_to_sigma(rs, table, ideal);
    if (sigma_to_ideal(rs, sigma) == ideal && sigma.lambda == ideal.lambda) ++round_trips;
    if (static_cast<std::size_t>(sigma.length) == ideal.k() && static_cast<std::size_t>(sigma.cas) == ideal.k())
      ++length_matches;
    max_k = std::max(max_k, ideal.k());
  }
  r.check("bijection-round-trip", "ideal to alcove bijection", round_trips == ideals.size(),
          {{"round_trips", dec(round_trips)}, {"ideals", dec(ideals.size())}});
  r.check("length-equals-casimir-equals-k", "length, Casimir and ideal dimension coincide",
          length_matches == ideals.size(), {{"matches", dec(length_matches)}, {"ideals", dec(ideals.size())}});
  if (auto m = malcev_table(rs.type()))
    r.check("malcev-number", "maximal abelian dimension below h^vee", max_k == *m,
            {{"max_k", dec(max_k)}, {"expected", dec(*m)}});
  else
    r.check("malcev-at-least-h-dual", "maximal abelian dimension at least h^vee",
            max_k >= static_cast<std::size_t>(rs.dual_coxeter_number()),
            {{"max_k", dec(max_k)}, {"h_dual", dec(rs.dual_coxeter_number())}});
  return r;
}

Report seven_numbers(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  cfg.require(rs.rank() <= cfg.max_ideal_rank, "rank for ideal enumeration");
  const int hv = rs.dual_coxeter_number();
  const int kmax = o.kmax.value_or(hv);
  if (kmax < 0 || kmax > hv) throw std::invalid_argument("--kmax must lie in 0..h^vee");
  require_enumerable(rs, kmax, cfg);
  Report r("seven-numbers", rs.label());
  r.parameters()["kmax"] = dec(kmax);
  auto b = euler_power(static_cast<unsigned long>(rs.dim()), static_cast<std::size_t>(kmax));
  auto ideals = enumerate_abelian_ideals(rs);
  auto harmonic = harmonic_sums(rs, kmax);
  std::optional<LieAlgebraTable> table;
  std::optional<WedgeOracle> oracle;
  WedgeLimits limits{cfg.wedge_max_dim, cfg.wedge_max_rows};
  std::string wedge_skip;
  try {
    table.emplace(LieAlgebraTable::build(rs, limits));
    oracle.emplace(*table, limits);
  } catch (const std::exception& e) {
    wedge_skip = e.what();
  }
  json rows = json::array();
  for (int k = 0; k <= kmax; ++k) {
    json row;
    row["k"] = dec(k);
    mpz_class series = signed_coeff(b, k);
    mpz_class ideal_sum = dim_Ck(rs, ideals, static_cast<std::size_t>(k));
    row["series"] = dec(series);
    row["ideal_sum"] = dec(ideal_sum);
    row["harmonic"] = dec(harmonic.full[k]);
    row["harmonic_graded"] = dec(harmonic.graded[k]);
    bool equal = series == ideal_sum && series == harmonic.graded[k];
    if (oracle) {
      try {
        mpz_class eig = oracle->casimir_eigenspace_dim(k);
        mpz_class quotient = binom(static_cast<unsigned long>(rs.dim()), static_cast<unsigned long>(k)) -
                             mpz_class(oracle->dg_ideal_dim(k));
        row["casimir_eigenspace"] = dec(eig);
        row["wedge_quotient"] = dec(quotient);
        equal = equal && eig == series && quotient == series;
      } catch (const std::length_error& e) {
        row["casimir_eigenspace"] = "skipped";
        row["wedge_quotient"] = "skipped";
      }
    }
    r.check("equal-at-k=" + std::to_string(k), "seven equal numbers", equal, row);
    // Below h^vee every alcove of length k lies in W_f^(2); at h^vee the full
    // sum also picks up alcoves outside it and is only reported.
    if (k < hv)
      r.check("harmonic-full-sum-at-k=" + std::to_string(k), "harmonic sum over alcoves of length k",
              harmonic.full[k] == series, {{"harmonic", dec(harmonic.full[k])}, {"series", dec(series)}});
    rows.push_back(row);
  }
  if (!oracle) r.skip("exterior-algebra-legs", "seven equal numbers", wedge_skip);
  r.data()["rows"] = rows;
  if (kmax == hv && harmonic.full[hv] != harmonic.graded[hv])
    r.data()["note"] = "at k = h^vee alcoves outside W_f^(2) of length k add " +
                       dec(mpz_class(harmonic.full[hv] - harmonic.graded[hv])) +
                       " to the harmonic sum; the graded part with Cas = k matches the other legs";
  return r;
}

Report bott(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  const int kmax = o.kmax.value_or(12);
  require_enumerable(rs, kmax, cfg);
  Report r("bott", rs.label());
  r.parameters()["kmax"] = dec(kmax);
  auto series = bott_series(rs, static_cast<std::size_t>(kmax));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(kmax) + 1, 0);
  for (const auto& e : enumerate_dominant(rs, kmax)) ++counts[e.length];
  bool ok = true;
  json s = json::array(), c = json::array();
  for (int k = 0; k <= kmax; ++k) {
    ok = ok && series[k] == counts[k];
    s.push_back(dec(series[k]));
    c.push_back(dec(counts[k]));
  }
  r.check("count-by-length", "Poincare series of dominant alcoves", ok, {{"series", s}, {"alcoves", c}});
  r.data()["exponents"] = dec_list(rs.exponents());
  return r;
}

Report betti_ideals(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  cfg.require(rs.rank() <= cfg.max_ideal_rank, "rank for ideal enumeration");
  Report r("betti-ideals", rs.label());
  const int hv = rs.dual_coxeter_number();
  auto p = bott_series(rs, static_cast<std::size_t>(hv));
  std::vector<std::uint64_t> by_k(static_cast<std::size_t>(rs.num_positive_roots()) + 1, 0);
  for (const auto& i : enumerate_abelian_ideals(rs)) ++by_k[i.k()];
  for (int k = 0; k < hv; ++k) {
    const std::uint64_t count = static_cast<std::size_t>(k) < by_k.size() ? by_k[k] : 0;
    r.check("ideals-of-dim-" + std::to_string(k), "ideal counts equal Betti numbers below h^vee", p[k] == count,
            {{"ideals", dec(count)}, {"betti", dec(p[k])}});
  }
  return r;
}

Report kostant(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  const int np = static_cast<int>(rs.num_positive_roots());
  const int kmax = std::min(o.kmax.value_or(np), np);
  Report r("kostant-inequality", rs.label());
  r.parameters()["kmax"] = dec(kmax);
  for (int k = 0; k <= kmax; ++k) {
    cfg.require(binom(static_cast<unsigned long>(np), static_cast<unsigned long>(k)) <= cfg.subset_ceiling,
                "subset count");
    auto rep = verify_kostant_inequality(rs, static_cast<std::size_t>(k), cfg.subset_ceiling);
    r.check("k=" + std::to_string(k), "shifted norm gain at most k, equality on abelian ideals", rep.pass(),
            {{"subsets", dec(rep.subsets)},
             {"violations", dec(rep.violations)},
             {"equality_cases", dec(rep.equality_cases.size())},
             {"equality_matches_ideals", rep.equality_matches_ideals ? "true" : "false"}});
  }
  return r;
}

Report root_partitions(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  const int cas = o.max_cas.value_or(6);
  cfg.require(cas <= cfg.max_cas, "Casimir bound");
  require_enumerable(rs, cas, cfg);
  Report r("root-partitions", rs.label());
  r.parameters()["max_cas"] = dec(cas);
  auto rep = verify_root_partition_bound(rs, cas, cfg.partition_ceiling);
  r.check("partition-bound", "c(q) bounds the Casimir of the partitioned weight, equality at alcoves", rep.pass(),
          {{"partitions", dec(rep.partitions)},
           {"violations", dec(rep.violations)},
           {"equality_cases", dec(rep.equality_cases)},
           {"expected_equality_cases", dec(rep.expected_equality_cases)}});
  return r;
}

bool subset_of(const std::vector<std::size_t>& a, const std::set<std::size_t>& b) {
  return std::all_of(a.begin(), a.end(), [&](auto x) { return b.count(x) != 0; });
}

Report ideal_chains(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  const int len = o.max_length.value_or(8);
  require_enumerable(rs, len, cfg);
  Report r("ideal-chains", rs.label());
  r.parameters()["max_length"] = dec(len);
  std::uint64_t elements = 0, not_ideal = 0, not_additive = 0, wrong_sum = 0, top_not_abelian = 0, wf2_bad = 0;
  for (const auto& e : enumerate_dominant(rs, len)) {
    ++elements;
    auto chain = ideal_chain(rs, e);
    std::vector<std::set<std::size_t>> sets;
    for (const auto& c : chain) {
      if (!is_upper_ideal(rs, c)) ++not_ideal;
      sets.emplace_back(c.begin(), c.end());
    }
    const std::size_t L = chain.size() - 1;
    bool additive = true;
    for (std::size_t i = 1; i <= L; ++i)
      for (std::size_t j = 1; i + j <= L; ++j)
        for (auto a : chain[i])
          for (auto b : chain[j]) {
            auto s = rs.sum_index(a, b);
            if (s >= 0 && !sets[i + j].count(static_cast<std::size_t>(s))) additive = false;
          }
    if (!additive) ++not_additive;
    std::vector<std::int64_t> total(static_cast<std::size_t>(rs.rank()), 0);
    for (std::size_t i = 1; i <= L; ++i)
      for (auto k : chain[i])
        for (int j = 0; j < rs.rank(); ++j) total[j] += rs.coroot_pairing(rs.root(k), j);
    if (total != e.lambda) ++wrong_sum;
    if (L >= 1 && !is_abelian_ideal(rs, chain[L])) ++top_not_abelian;
    if (in_Wf2(e) && e.length > 0 && (L != 1 || !(sigma_to_ideal(rs, e).roots == chain[1]))) ++wf2_bad;
  }
  r.check("chain-members-are-ideals", "each level set is an ideal", not_ideal == 0, {{"failures", dec(not_ideal)}});
  r.check("chain-is-additive", "sum of levels i and j lies in level i + j", not_additive == 0,
          {{"failures", dec(not_additive)}});
  r.check("chain-sums-to-lambda", "levels sum to lambda^sigma", wrong_sum == 0, {{"failures", dec(wrong_sum)}});
  r.check("top-level-abelian", "top level is an abelian ideal", top_not_abelian == 0,
          {{"failures", dec(top_not_abelian)}});
  r.check("wf2-chain-is-matched-ideal", "chain inside twice the fundamental alcove", wf2_bad == 0,
          {{"failures", dec(wf2_bad)}, {"elements", dec(elements)}});
  return r;
}

Report parity(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  const int len = o.max_length.value_or(10);
  require_enumerable(rs, len, cfg);
  Report r("parity", rs.label());
  r.parameters()["max_length"] = dec(len);
  std::uint64_t elements = 0, sum_bad = 0, odd = 0;
  for (const auto& e : enumerate_dominant(rs, len)) {
    ++elements;
    const std::int64_t lhs = e.length + linear_part_length(rs, e);
    const std::int64_t rhs = two_rho_on_translation(rs, e);
    if (lhs != rhs) ++sum_bad;
    if (rhs % 2 != 0) ++odd;
  }
  r.check("length-plus-linear-length", "length of sigma plus length of w equals 2 rho on z", sum_bad == 0,
          {{"failures", dec(sum_bad)}, {"elements", dec(elements)}});
  r.check("even", "2 rho on z is even", odd == 0, {{"failures", dec(odd)}});
  return r;
}

Report gap(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  const int hv = rs.dual_coxeter_number();
  const int len = o.max_length.value_or(hv + 4);
  require_enumerable(rs, len, cfg);
  Report r("gap", rs.label());
  r.parameters()["max_length"] = dec(len);
  std::uint64_t short_outside = 0, low_cas_bad = 0, cas_below_length = 0, eq_bad = 0, elements = 0;
  for (const auto& e : enumerate_dominant(rs, len)) {
    ++elements;
    if (!in_Wf2(e) && e.length < hv) ++short_outside;
    if (e.cas <= hv && (!in_Wf2(e) || e.cas != e.length)) ++low_cas_bad;
    if (e.cas < e.length) ++cas_below_length;
    if ((e.cas == e.length) != in_Wf2(e)) ++eq_bad;
  }
  r.check("outside-wf2-length-at-least-h-dual", "gap below h^vee", short_outside == 0,
          {{"failures", dec(short_outside)}, {"elements", dec(elements)}});
  r.check("small-casimir-in-wf2", "Casimir at most h^vee forces twice the fundamental alcove", low_cas_bad == 0,
          {{"failures", dec(low_cas_bad)}});
  r.check("casimir-at-least-length", "Casimir bounds the length", cas_below_length == 0,
          {{"failures", dec(cas_below_length)}});
  r.check("equality-iff-wf2", "Casimir equals length exactly in twice the fundamental alcove", eq_bad == 0,
          {{"failures", dec(eq_bad)}});
  return r;
}

Report euler_char(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  const int kmax = o.kmax.value_or(12);
  cfg.require(static_cast<std::size_t>(kmax) <= cfg.max_kmax, "series order");
  Report r("euler-char", rs.label());
  r.parameters()["kmax"] = dec(kmax);
  const auto dim = static_cast<unsigned long>(rs.dim());
  auto table = bigraded_dims(dim, static_cast<std::size_t>(kmax), static_cast<std::size_t>(kmax));
  auto b = euler_power(dim, static_cast<std::size_t>(kmax));
  for (int k = 0; k <= kmax; ++k) {
    auto chi = table.euler_characteristic(static_cast<std::size_t>(k));
    r.check("euler-characteristic-k=" + std::to_string(k), "graded Euler characteristic of the wedge complex",
            chi == b[k], {{"euler_characteristic", dec(chi)}, {"b", dec(b[k])}});
  }
  for (int k = 0; k <= std::min(kmax, rs.dual_coxeter_number()); ++k) {
    const auto& top = table.at(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    r.check("diagonal-dominates-k=" + std::to_string(k), "homology concentrated in degree k",
            top >= signed_coeff(b, k), {{"diagonal", dec(top)}, {"signed_b", dec(signed_coeff(b, k))}});
  }
  return r;
}

Report roots_f234(const SuiteOptions& o, const Config& cfg) {
  const int kmax = o.kmax.value_or(12);
  cfg.require(static_cast<std::size_t>(kmax) <= cfg.max_direct_k, "composition enumeration order");
  Report r("roots-f234", "");
  r.parameters()["kmax"] = dec(kmax);
  struct Expected {
    int k;
    std::vector<mpq_class> roots;
    mpq_class scale;
  };
  const std::vector<Expected> expected = {{2, {0, 3}, mpq_class(1, 2)},
                                          {3, {0, 1, 8}, mpq_class(-1, 6)},
                                          {4, {0, 1, 3, 14}, mpq_class(1, 24)}};
  for (const auto& e : expected) {
    auto f = f_poly(static_cast<std::size_t>(e.k));
    auto g = RatPoly::from_roots(e.roots, e.scale);
    r.check("f" + std::to_string(e.k) + "-factorization", "roots of f_2, f_3, f_4", f == g,
            {{"f", f.to_string()}, {"expected", g.to_string()}});
  }
  r.check("f1", "f_1(s) = -s", f_poly(1) == RatPoly::monomial(-1, 1), {{"f", f_poly(1).to_string()}});
  auto rec = f_polys(static_cast<std::size_t>(kmax));
  for (int k = 0; k <= kmax; ++k) {
    auto direct = f_poly_direct(static_cast<std::size_t>(k));
    r.check("recurrence-equals-direct-k=" + std::to_string(k), "two expansions of f_k", rec[k] == direct,
            {{"degree", dec(rec[k].degree())}});
  }
  return r;
}

Report interpolation(const SuiteOptions& o, const Config& cfg) {
  const int kmax = o.kmax.value_or(4);
  const int mmax = o.m.value_or(6);
  cfg.require(mmax - 1 <= cfg.max_ideal_rank, "rank for ideal enumeration");
  Report r("interpolation", "");
  r.parameters()["kmax"] = dec(kmax);
  r.parameters()["mmax"] = dec(mmax);
  auto f = f_polys(static_cast<std::size_t>(kmax));
  std::map<int, std::vector<AbelianIdeal>> ideals;
  std::map<int, RootSystem> systems;
  auto dimc = [&](int m, int k) {
    if (!systems.count(m)) {
      systems.emplace(m, RootSystem::build(Family::A, m - 1));
      ideals[m] = enumerate_abelian_ideals(systems.at(m));
    }
    mpz_class d = dim_Ck(systems.at(m), ideals[m], static_cast<std::size_t>(k));
    return k % 2 ? mpz_class(-d) : d;
  };
  for (int k = 1; k <= kmax; ++k)
    for (int m = std::max(k, 2); m <= mmax; ++m) {
      const mpq_class s = m * m - 1;
      const mpq_class value = f[k](s);
      const mpz_class expect = dimc(m, k);
      r.check("value-k=" + std::to_string(k) + "-m=" + std::to_string(m), "f_k(m^2 - 1) from type A ideals",
              value == expect, {{"f_k", dec(value)}, {"signed_dim_C", dec(expect)}});
      // Nonvanishing holds exactly when sl(m) has an abelian subalgebra of
      // dimension k, i.e. floor(m^2 / 4) >= k; it fails for m = k = 2, 3.
      const bool malcev_ok = (m * m) / 4 >= k;
      r.check("nonzero-iff-malcev-k=" + std::to_string(k) + "-m=" + std::to_string(m),
              "f_k(m^2 - 1) != 0 when M >= k", (value != 0) == malcev_ok,
              {{"f_k", dec(value)}, {"malcev", dec((m * m) / 4)}});
    }
  for (int k = 2; k <= kmax; ++k) {
    std::vector<mpq_class> xs{0}, ys{0};
    for (int m = std::max(k, 2); static_cast<int>(xs.size()) < k + 1; ++m) {
      xs.emplace_back(m * m - 1);
      ys.emplace_back(dimc(m, k));
    }
    auto g = RatPoly::interpolate(xs, ys);
    r.check("interpolated-k=" + std::to_string(k), "f_k determined by k values of m", g == f[k],
            {{"interpolated", g.to_string()}, {"f_k", f[k].to_string()}});
  }
  return r;
}

Report mcore(const SuiteOptions& o, const Config& cfg) {
  Report r("mcore", "");
  std::vector<int> ms = o.m ? std::vector<int>{*o.m} : std::vector<int>{3, 4, 5, 6};
  const int kmax = o.kmax.value_or(3);
  const int len = o.max_length.value_or(6);
  r.parameters()["kmax"] = dec(kmax);
  r.parameters()["max_length"] = dec(len);
  for (int m : ms)
    for (int k = 0; k <= kmax; ++k) {
      auto c = count_null_cores(m, k, cfg.partition_ceiling);
      r.check("null-core-count-m=" + std::to_string(m) + "-k=" + std::to_string(k), "null m-cores of size mk",
              c.matches(), {{"count", dec(c.count)}, {"binomial", dec(c.expected)}});
    }
  std::vector<int> corr = o.m ? std::vector<int>{*o.m} : std::vector<int>{3, 4, 5};
  for (int m : corr) {
    RootSystem rs = RootSystem::build(Family::A, m - 1);
    require_enumerable(rs, len, cfg);
    auto rep = verify_null_core_correspondence(m, len);
    json unhit = json::array();
    for (const auto& p : rep.unhit) unhit.push_back(p.to_string());
    r.check("alcove-null-core-m=" + std::to_string(m), "dominant alcoves map injectively to null m-cores",
            rep.pass(),
            {{"alcoves", dec(rep.alcoves)},
             {"non_null_core", dec(rep.non_null_core)},
             {"duplicates", dec(rep.duplicate_images)},
             {"size_not_multiple", dec(rep.size_not_multiple)},
             {"sign_mismatches", dec(rep.sign_mismatches)},
             {"surjectivity_bound", dec(rep.surjectivity_bound)},
             {"unhit", unhit}});
  }
  return r;
}

Report sign(const SuiteOptions& o, const Config& cfg) {
  RootSystem rs = require_type(o);
  const int len = o.max_length.value_or(8);
  const int cas = o.max_cas.value_or(6);
  require_enumerable(rs, std::max(len, cas), cfg);
  cfg.require(cas <= cfg.max_cas, "Casimir bound");
  Report r("sign", rs.label());
  r.parameters()["max_length"] = dec(len);
  r.parameters()["max_cas"] = dec(cas);
  std::uint64_t elements = 0, wrong = 0;
  for (const auto& e : enumerate_dominant(rs, len)) {
    ++elements;
    if (chi_at_aP(rs, e.lambda) != e.sign()) ++wrong;
  }
  r.check("sign-on-alcove-weights", "character value is (-1)^length on lambda^sigma", wrong == 0,
          {{"elements", dec(elements)}, {"failures", dec(wrong)}});
  std::set<std::vector<std::int64_t>> alcove_weights;
  for (const auto& e : enumerate_by_casimir(rs, cas)) alcove_weights.insert(e.lambda);
  std::uint64_t others = 0, nonzero = 0;
  for (const auto& w : dominant_weights_up_to_casimir(rs, cas)) {
    if (alcove_weights.count(w)) continue;
    ++others;
    if (chi_at_aP(rs, w) != 0) ++nonzero;
  }
  r.check("zero-off-alcove-weights", "character value vanishes off lambda^sigma", nonzero == 0,
          {{"weights", dec(others)}, {"failures", dec(nonzero)}, {"alcove_weights", dec(alcove_weights.size())}});
  return r;
}

using SuiteFn = std::function<Report(const SuiteOptions&, const Config&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"peterson", peterson},
      {"seven-numbers", seven_numbers},
      {"bott", bott},
      {"betti-ideals", betti_ideals},
      {"kostant-inequality", kostant},
      {"root-partitions", root_partitions},
      {"ideal-chains", ideal_chains},
      {"parity", parity},
      {"gap", gap},
      {"euler-char", euler_char},
      {"roots-f234", roots_f234},
      {"interpolation", interpolation},
      {"mcore", mcore},
      {"sign", sign},
  };
  return r;
}

}  // namespace

std::uint64_t predicted_alcove_count(const RootSystem& rs, int max_length) {
  if (max_length < 0) return 0;
  auto p = bott_series(rs, static_cast<std::size_t>(max_length));
  mpz_class total = 0;
  for (const auto& c : p.coeffs()) total += c;
  return total.fits_ulong_p() ? total.get_ui() : std::numeric_limits<std::uint64_t>::max();
}

void require_enumerable(const RootSystem& rs, int max_length, const Config& cfg) {
  cfg.require(max_length <= cfg.max_length, "maximum length");
  cfg.require(predicted_alcove_count(rs, max_length) <= cfg.max_alcoves, "number of dominant alcoves");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool suite_needs_type(const std::string& name) {
  return name != "roots-f234" && name != "interpolation" && name != "mcore";
}

Report run_suite(const std::string& name, const SuiteOptions& opts, const Config& cfg) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    Report r = fn(opts, cfg);
    return r;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace alcovekit::cli
