#include <gtest/gtest.h>

#include <set>

#include "alcovekit/alcove.hpp"
#include "alcovekit/series.hpp"

using namespace alcovekit;

namespace {

std::vector<RootSystem> small_systems() {
  std::vector<RootSystem> out;
  for (const char* t : {"A1", "A2", "A3", "B2", "C3", "D4", "G2", "B3", "F4"})
    out.push_back(RootSystem::build(CartanType::parse(t)));
  return out;
}

std::vector<mpq_class> sub(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  std::vector<mpq_class> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

TEST(Enumerate, LengthZeroIsIdentity) {
  for (const auto& rs : small_systems()) {
    auto e = enumerate_dominant(rs, 0);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].length, 0);
    EXPECT_EQ(e[0].cas, 0);
    EXPECT_EQ(e[0].lambda, std::vector<std::int64_t>(static_cast<std::size_t>(rs.rank()), 0));
    EXPECT_EQ(e[0].x_sigma, base_point(rs));
  }
}

TEST(Enumerate, RankOneChain) {
  auto rs = RootSystem::build(Family::A, 1);
  auto e = enumerate_dominant(rs, 5);
  ASSERT_EQ(e.size(), 6u);
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(e[n].length, n);
    EXPECT_EQ(e[n].n_vec, std::vector<int>{n});
    EXPECT_EQ(e[n].lambda, std::vector<std::int64_t>{2 * n});  // n alpha = 2n omega
    EXPECT_EQ(e[n].cas, n * (n + 1) / 2);
    EXPECT_EQ(rs.weyl_dimension(e[n].lambda), 2 * n + 1);
  }
}

TEST(Enumerate, A2CountsByLength) {
  auto rs = RootSystem::build(Family::A, 2);
  std::vector<int> counts(6, 0);
  for (const auto& e : enumerate_dominant(rs, 5)) ++counts[e.length];
  EXPECT_EQ(counts, (std::vector<int>{1, 1, 2, 2, 3, 3}));
}

TEST(Enumerate, OrderingContract) {
  for (const auto& rs : small_systems()) {
    auto e = enumerate_dominant(rs, 6);
    for (std::size_t i = 1; i < e.size(); ++i) {
      EXPECT_TRUE(e[i - 1].length < e[i].length || (e[i - 1].length == e[i].length && e[i - 1].n_vec < e[i].n_vec));
    }
  }
}

TEST(Enumerate, CountsMatchPoincareSeries) {
  for (const auto& rs : small_systems()) {
    const int L = rs.rank() >= 4 ? 8 : 12;
    auto p = bott_series(rs, static_cast<std::size_t>(L));
    std::vector<int> counts(static_cast<std::size_t>(L) + 1, 0);
    for (const auto& e : enumerate_dominant(rs, L)) ++counts[e.length];
    for (int k = 0; k <= L; ++k) EXPECT_EQ(p[k], counts[k]) << rs.label() << " k=" << k;
  }
}

TEST(Enumerate, ElementInvariants) {
  for (const auto& rs : small_systems()) {
    auto elems = enumerate_dominant(rs, 7);
    std::set<std::vector<std::int64_t>> lambdas;
    for (const auto& e : elems) {
      // Length is the number of separating walls.
      int total = 0;
      for (int n : e.n_vec) total += n;
      EXPECT_EQ(total, e.length);
      // Dominant and wall-free.
      for (int i = 0; i < rs.rank(); ++i) EXPECT_GT(e.x_sigma.num[i], 0);
      for (const auto& phi : rs.positive_roots()) EXPECT_NE(e.x_sigma.eval_scaled(phi) % e.x_sigma.den, 0);
      // sigma(x0) reproduces x_sigma.
      EXPECT_EQ(e.apply(base_point(rs)), e.x_sigma);
      // lambda is the n-weighted root sum, dominant, in the root lattice.
      std::vector<mpq_class> sum(static_cast<std::size_t>(rs.rank()), 0);
      for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
        for (int i = 0; i < rs.rank(); ++i) sum[i] += e.n_vec[k] * rs.root(k)[i];
      EXPECT_EQ(rs.root_to_weight(sum), e.lambda_weight());
      EXPECT_TRUE(e.lambda_weight().is_dominant_integral());
      EXPECT_TRUE(rs.in_root_lattice(e.lambda_weight()));
      // Cas from the n-vector equals the Casimir eigenvalue, bounded below by the length.
      EXPECT_EQ(rs.casimir_eigenvalue(e.lambda_weight()), e.cas);
      EXPECT_GE(e.cas, e.length);
      EXPECT_EQ(e.cas == e.length, in_Wf2(e));
      EXPECT_GT(rs.weyl_dimension(e.lambda), 0);
      // Parity identity.
      EXPECT_EQ(e.length + linear_part_length(rs, e), two_rho_on_translation(rs, e));
      EXPECT_EQ(two_rho_on_translation(rs, e) % 2, 0);
      lambdas.insert(e.lambda);
    }
    EXPECT_EQ(lambdas.size(), elems.size()) << rs.label();
  }
}

TEST(Enumerate, AlcovesInsideDilatedFundamentalAlcove) {
  for (const char* t : {"A1", "A2", "A3", "B2", "C3", "G2", "B3"}) {
    auto rs = RootSystem::build(CartanType::parse(t));
    for (int k = 1; k <= 3; ++k) {
      // A_sigma in k A_1 has length at most k |Delta_+|.
      const int L = k * static_cast<int>(rs.num_positive_roots());
      auto restricted = enumerate_dominant(rs, L, k - 1);
      std::size_t expect = 1;
      for (int i = 0; i < rs.rank(); ++i) expect *= static_cast<std::size_t>(k);
      EXPECT_EQ(restricted.size(), expect) << t << " k=" << k;
      for (const auto& e : restricted) EXPECT_LE(e.n_psi(), k - 1);
    }
  }
}

TEST(Wf2, Membership) {
  auto rs = RootSystem::build(Family::A, 1);
  auto e = enumerate_dominant(rs, 2);
  EXPECT_TRUE(in_Wf2(e[0]));
  EXPECT_TRUE(in_Wf2(e[1]));
  EXPECT_FALSE(in_Wf2(e[2]));
}

TEST(Gap, OutsideWf2LengthAtLeastDualCoxeter) {
  for (const auto& rs : small_systems()) {
    const int hv = rs.dual_coxeter_number();
    for (const auto& e : enumerate_dominant(rs, hv + 3)) {
      if (!in_Wf2(e)) EXPECT_GE(e.length, hv) << rs.label();
      if (e.cas <= hv) {
        EXPECT_TRUE(in_Wf2(e));
        EXPECT_EQ(e.cas, e.length);
      }
    }
  }
}

TEST(ByCasimir, FiltersCorrectly) {
  auto rs = RootSystem::build(Family::A, 2);
  auto e = enumerate_by_casimir(rs, 2);
  ASSERT_EQ(e.size(), 4u);
  for (const auto& x : e) EXPECT_LE(x.cas, 2);
}

TEST(Fold, BasePointIsFixed) {
  for (const auto& rs : small_systems()) {
    auto f = reduce_to_fundamental(rs, base_point(rs));
    EXPECT_EQ(f.folded, base_point(rs));
    EXPECT_EQ(f.parity, 1);
    EXPECT_TRUE(f.regular);
  }
}

TEST(Fold, AlcovePointsFoldBackWithParity) {
  for (const auto& rs : small_systems())
    for (const auto& e : enumerate_dominant(rs, 6)) {
      auto f = reduce_to_fundamental(rs, e.x_sigma);
      EXPECT_EQ(f.folded, base_point(rs));
      EXPECT_EQ(f.parity, e.sign());
      EXPECT_TRUE(f.regular);
    }
}

TEST(Fold, WallPointIsSingular) {
  auto rs = RootSystem::build(Family::A, 1);
  CartanPoint p{{1}, 1};
  EXPECT_FALSE(reduce_to_fundamental(rs, p).regular);
  CartanPoint q{{3}, 2};
  EXPECT_TRUE(reduce_to_fundamental(rs, q).regular);
}

TEST(Chi, Examples) {
  auto a2 = RootSystem::build(Family::A, 2);
  EXPECT_EQ(chi_at_aP(a2, Weight::zero(2)), 1);
  EXPECT_EQ(chi_at_aP(a2, a2.highest_root_weight()), -1);
  EXPECT_EQ(chi_at_aP(a2, Weight::from_ints(std::vector<std::int64_t>{1, 0})), 0);
  EXPECT_THROW(chi_at_aP(a2, Weight::from_ints(std::vector<std::int64_t>{-1, 0})), std::invalid_argument);
  for (const auto& rs : small_systems()) EXPECT_EQ(chi_at_aP(rs, rs.highest_root_weight()), -1) << rs.label();
}

TEST(Chi, SignOnAlcoveWeightsAndZeroElsewhere) {
  for (const auto& rs : small_systems()) {
    for (const auto& e : enumerate_dominant(rs, 6)) EXPECT_EQ(chi_at_aP(rs, e.lambda), e.sign());
    std::set<std::vector<std::int64_t>> alcove;
    for (const auto& e : enumerate_by_casimir(rs, 5)) alcove.insert(e.lambda);
    for (const auto& w : dominant_weights_up_to_casimir(rs, 5))
      if (!alcove.count(w)) EXPECT_EQ(chi_at_aP(rs, w), 0) << rs.label();
  }
}

TEST(Chain, Examples) {
  auto a1 = RootSystem::build(Family::A, 1);
  auto e = enumerate_dominant(a1, 2);
  auto id = ideal_chain(a1, e[0]);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0], std::vector<std::size_t>{0});
  auto c2 = ideal_chain(a1, e[2]);
  ASSERT_EQ(c2.size(), 3u);
  EXPECT_EQ(c2[1], std::vector<std::size_t>{0});
  EXPECT_EQ(c2[2], std::vector<std::size_t>{0});
}

TEST(Chain, LevelsAreIdealsAndSumToLambda) {
  for (const auto& rs : small_systems())
    for (const auto& e : enumerate_dominant(rs, 7)) {
      auto chain = ideal_chain(rs, e);
      ASSERT_EQ(static_cast<int>(chain.size()), e.n_psi() + 1);
      std::vector<mpq_class> sum(static_cast<std::size_t>(rs.rank()), 0);
      for (std::size_t i = 0; i < chain.size(); ++i) {
        EXPECT_TRUE(is_upper_ideal(rs, chain[i]));
        if (i == 0) continue;
        for (auto k : chain[i])
          for (int j = 0; j < rs.rank(); ++j) sum[j] += rs.root(k)[j];
      }
      EXPECT_EQ(rs.root_to_weight(sum), e.lambda_weight());
    }
}

// sigma(rho) - rho is not lambda^sigma: it is off by z / 2, so every
// non-identity dominant element is a counterexample to the naive formula.
TEST(NaiveShift, SigmaRhoMinusRhoDiffersFromLambda) {
  for (const auto& rs : small_systems()) {
    CartanPoint rho = base_point(rs);
    rho.den *= 2;
    for (const auto& e : enumerate_dominant(rs, 5)) {
      auto naive = sub(e.apply(rho).values(), rho.values());
      auto lambda = sub(e.x_sigma.values(), base_point(rs).values());
      for (auto& v : lambda) v /= 2;
      std::vector<mpq_class> corrected = lambda;
      for (std::size_t i = 0; i < corrected.size(); ++i) {
        mpq_class half(e.z_eval[i], 2);
        half.canonicalize();
        corrected[i] += half;
      }
      EXPECT_EQ(naive, corrected);
      if (e.length > 0) EXPECT_NE(naive, lambda) << rs.label();
    }
  }
}

TEST(NaiveShift, RankOneWitness) {
  auto rs = RootSystem::build(Family::A, 1);
  auto e = enumerate_dominant(rs, 1)[1];
  // lambda^sigma = alpha, while sigma(rho) - rho = 3 alpha.
  EXPECT_EQ(e.lambda, std::vector<std::int64_t>{2});
  CartanPoint rho = base_point(rs);
  rho.den *= 2;
  auto naive = sub(e.apply(rho).values(), rho.values());
  EXPECT_EQ(naive[0], mpq_class(3, 2));
  EXPECT_EQ(rs.norm_killing(0), mpq_class(1, 2));  // alpha(point of alpha)
}
