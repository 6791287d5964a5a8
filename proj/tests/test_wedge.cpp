#include <gtest/gtest.h>

#include "alcovekit/ideals.hpp"
#include "alcovekit/wedge.hpp"

using namespace alcovekit;

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

int malcev(const RootSystem& rs) {
  std::size_t m = 0;
  for (const auto& i : enumerate_abelian_ideals(rs)) m = std::max(m, i.k());
  return static_cast<int>(m);
}

class SmallTypes : public ::testing::TestWithParam<const char*> {};

}  // namespace

TEST_P(SmallTypes, TableIsALieAlgebra) {
  auto rs = RootSystem::build(CartanType::parse(GetParam()));
  auto t = LieAlgebraTable::build(rs);
  EXPECT_EQ(t.dim(), rs.dim());
  EXPECT_EQ(t.antisymmetry_failures(), 0u);
  EXPECT_EQ(t.jacobi_failures(), 0u);
  EXPECT_EQ(t.killing_rank(), static_cast<std::size_t>(rs.dim()));
  EXPECT_TRUE(t.casimir_is_identity());
}

TEST_P(SmallTypes, CasimirEigenspaceAndDgComplement) {
  auto rs = RootSystem::build(CartanType::parse(GetParam()));
  auto t = LieAlgebraTable::build(rs);
  WedgeOracle oracle(t);
  const int top = std::min(rs.dim(), rs.dual_coxeter_number() + 1);
  for (int k = 0; k <= top; ++k) {
    mpz_class ck = dim_Ck(rs, static_cast<std::size_t>(k));
    EXPECT_EQ(oracle.casimir_eigenspace_dim(k), ck.get_ui()) << GetParam() << " k=" << k;
    EXPECT_EQ(binomial(rs.dim(), k) - oracle.dg_ideal_dim(k), ck) << GetParam() << " k=" << k;
  }
}

TEST_P(SmallTypes, MaxEigenvalueBoundedByDegree) {
  auto rs = RootSystem::build(CartanType::parse(GetParam()));
  auto t = LieAlgebraTable::build(rs);
  WedgeOracle oracle(t);
  const int m = malcev(rs);
  for (int k = 0; k <= std::min(rs.dim(), m + 2); ++k) {
    auto ev = oracle.max_casimir_eigenvalue(k);
    EXPECT_LE(ev, k) << GetParam() << " k=" << k;
    EXPECT_EQ(ev == k, k <= m) << GetParam() << " k=" << k << " ev=" << ev;
  }
}

TEST_P(SmallTypes, IdealTopVectors) {
  auto rs = RootSystem::build(CartanType::parse(GetParam()));
  auto t = LieAlgebraTable::build(rs);
  WedgeOracle oracle(t);
  auto ideals = enumerate_abelian_ideals(rs);
  auto res = oracle.verify_ideal_top_vectors(ideals);
  ASSERT_EQ(res.size(), ideals.size());
  for (std::size_t i = 0; i < res.size(); ++i) {
    EXPECT_TRUE(res[i].is_eigenvector);
    EXPECT_EQ(res[i].eigenvalue, static_cast<long>(ideals[i].k()));
  }
  EXPECT_EQ(res.front().eigenvalue, 0);
}

INSTANTIATE_TEST_SUITE_P(Wedge, SmallTypes, ::testing::Values("A1", "A2", "B2", "C2", "G2"));

TEST(Wedge, KnownEigenvalues) {
  auto a2 = RootSystem::build(Family::A, 2);
  auto ta = LieAlgebraTable::build(a2);
  EXPECT_EQ(WedgeOracle(ta).max_casimir_eigenvalue(3), mpq_class(8, 3));
  auto g2 = RootSystem::build(Family::G, 2);
  auto tg = LieAlgebraTable::build(g2);
  EXPECT_EQ(WedgeOracle(tg).max_casimir_eigenvalue(4), mpq_class(15, 4));
}

TEST(Wedge, CasimirActsOnDegreeOneAsIdentity) {
  auto rs = RootSystem::build(Family::B, 2);
  auto t = LieAlgebraTable::build(rs);
  WedgeOracle oracle(t);
  for (int a = 0; a < t.dim(); ++a) {
    WedgeVector v{{std::uint64_t{1} << a, 1}};
    EXPECT_EQ(oracle.apply_casimir(v, 1), v);
  }
}

TEST(Wedge, CoboundaryOfCartanIsNonzero) {
  auto rs = RootSystem::build(Family::A, 1);
  auto t = LieAlgebraTable::build(rs);
  WedgeOracle oracle(t);
  for (int u = 0; u < t.dim(); ++u) EXPECT_FALSE(oracle.coboundary(u).empty());
}

TEST(Wedge, Ceilings) {
  auto a3 = RootSystem::build(Family::A, 3);
  EXPECT_THROW(LieAlgebraTable::build(a3), std::length_error);
  EXPECT_THROW(LieAlgebraTable::build(RootSystem::build(Family::B, 3)), std::length_error);
  WedgeLimits lim;
  lim.max_dim = 15;
  auto t = LieAlgebraTable::build(a3, lim);
  EXPECT_EQ(t.jacobi_failures(), 0u);
  EXPECT_TRUE(t.casimir_is_identity());
  WedgeOracle oracle(t, lim);
  EXPECT_EQ(oracle.casimir_eigenspace_dim(2), dim_Ck(a3, 2).get_ui());
  EXPECT_THROW(oracle.casimir_eigenspace_dim(7), std::length_error);  // C(15, 7) = 6435 rows
}
