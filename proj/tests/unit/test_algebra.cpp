#include "fixtures.hpp"
#include "freeop/algebra/algebra.hpp"
#include "freeop/errors.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace freeop;

namespace {

bool is_idempotent(const FiniteDimAlgebra& D, const AlgebraElement& e) { return D.mul(e, e) == e; }

AlgebraElement random_element(const FiniteDimAlgebra& D, oracle::Gen& gen) {
  AlgebraElement u(D.dim());
  for (auto& c : u) c = gen.coefficient();
  return u;
}

}  // namespace

TEST(Algebra, StandardAlgebrasAreValidAndSplitAsExpected) {
  for (const auto& [name, D, count] : fixtures::standard_algebras()) {
    EXPECT_TRUE(check_algebra(D).valid()) << name;
    const auto comps = local_decompose(D);
    EXPECT_EQ(comps.size(), count) << name;
    for (const auto& c : comps) EXPECT_EQ(c.residue_dim, 1) << name;
    const ResidueFieldReport r = check_assumption_res_field_k(D);
    EXPECT_TRUE(r.holds) << name;
    EXPECT_EQ(r.local, count == 1) << name;
  }
}

TEST(Algebra, GaussianResidueField) {
  const FiniteDimAlgebra D = fixtures::gaussian();
  const auto comps = local_decompose(D);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].residue_dim, 2);
  EXPECT_FALSE(check_assumption_res_field_k(D).holds);
  // No component sends e_0 to 1 and y to 0 in Q.
  EXPECT_FALSE(D.with_decomposition().pi_index().has_value());
}

TEST(Algebra, ViolationsAreReported) {
  // e0 * e1 = e1 but e1 * e0 = 0.
  StructureConstants a(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2)));
  a[0][0][0] = 1;
  a[0][1][1] = 1;
  const FiniteDimAlgebra lopsided({"u", "e"}, a, {1, 0});
  const AlgebraReport r = check_algebra(lopsided);
  ASSERT_FALSE(r.valid());
  bool saw_commutativity = false;
  for (const auto& v : r.violations) saw_commutativity |= v.kind == AlgebraViolation::Kind::commutativity;
  EXPECT_TRUE(saw_commutativity);

  const auto dual = fixtures::standard_algebras()[0].algebra;
  const FiniteDimAlgebra wrong_unit(dual.basis_names(), dual.structure_constants(), {0, 1});
  const AlgebraReport u = check_algebra(wrong_unit);
  ASSERT_FALSE(u.valid());
  EXPECT_FALSE(u.violations.front().describe().empty());
}

TEST(Algebra, IdempotentSquareIsStillAnAlgebra) {
  // Setting e*e = e in the dual numbers gives a copy of Q x Q.
  auto a = fixtures::standard_algebras()[0].algebra.structure_constants();
  a[1][1][1] = 1;
  const FiniteDimAlgebra D({"u", "e"}, a, {1, 0});
  EXPECT_TRUE(check_algebra(D).valid());
  EXPECT_EQ(local_decompose(D).size(), 2u);
}

TEST(Algebra, ShapeErrors) {
  EXPECT_THROW(FiniteDimAlgebra({"u"}, StructureConstants{}, {1}), InputError);
  EXPECT_THROW(from_presentation({"e"}, {}), InputError);
  EXPECT_THROW(residue_projection(split_algebra(2), 5), InputError);
}

// Idempotents of the decomposition are orthogonal, sum to 1, and the maximal
// ideal bases are nilpotent; the pi component comes first.
TEST(AlgebraProperty, DecompositionIdempotents) {
  std::vector<FiniteDimAlgebra> algebras;
  for (const auto& n : fixtures::standard_algebras()) algebras.push_back(n.algebra);
  algebras.push_back(fixtures::gaussian());
  algebras.push_back(direct_product(fixtures::gaussian(), split_algebra(2)));
  for (const auto& D : algebras) {
    const auto comps = local_decompose(D);
    AlgebraElement sum = D.zero();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      EXPECT_TRUE(is_idempotent(D, comps[i].idempotent));
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        EXPECT_TRUE(is_zero_vector(D.mul(comps[i].idempotent, comps[j].idempotent)));
      }
      for (std::size_t k = 0; k < D.dim(); ++k) sum[k] += comps[i].idempotent[k];
      for (const auto& m : comps[i].max_ideal_basis) EXPECT_TRUE(is_zero_vector(D.pow(m, static_cast<unsigned>(D.dim()))));
    }
    EXPECT_EQ(sum, D.unit());
    const auto dec = D.with_decomposition();
    if (dec.pi_index()) EXPECT_EQ(*dec.pi_index(), 0u);
  }
}

// The residue projections are ring maps D -> Q[x]/(P_i): checked on random
// pairs by comparing images of u*v with products of images.
TEST(AlgebraProperty, ResidueProjectionsAreMultiplicative) {
  oracle::Gen gen(11);
  for (const auto& [name, D, count] : fixtures::standard_algebras()) {
    for (std::size_t i = 0; i < count; ++i) {
      const Matrix p = residue_projection(D, i);
      ASSERT_EQ(p.rows(), 1u) << name;
      for (int trial = 0; trial < 10; ++trial) {
        const AlgebraElement u = random_element(D, gen);
        const AlgebraElement v = random_element(D, gen);
        EXPECT_EQ((p * D.mul(u, v))[0], (p * u)[0] * (p * v)[0]) << name;
      }
      EXPECT_EQ((p * D.unit())[0], 1) << name;
    }
  }
}

TEST(AlgebraProperty, MultiplicationIsCommutativeAndAssociative) {
  oracle::Gen gen(5);
  for (const auto& [name, D, count] : fixtures::standard_algebras()) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto u = random_element(D, gen), v = random_element(D, gen), w = random_element(D, gen);
      EXPECT_EQ(D.mul(u, v), D.mul(v, u)) << name;
      EXPECT_EQ(D.mul(D.mul(u, v), w), D.mul(u, D.mul(v, w))) << name;
      EXPECT_EQ(D.mul(D.unit(), u), u) << name;
    }
  }
}

TEST(Algebra, LargeSplitAlgebraDecomposes) {
  // Needs more distinct coordinates than a narrow random range provides.
  EXPECT_EQ(local_decompose(split_algebra(16)).size(), 16u);
}
