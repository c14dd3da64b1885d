#include "helpers.hpp"

#include <gtest/gtest.h>

namespace {

using namespace glcat;
using glcat::testing::nf;
using glcat::testing::S;
using glcat::testing::X;

int total_homology(const std::string& s, const std::string& t, int q) {
  int sum = 0;
  for (const auto& [c, dim] : homology_dim(TypedSequence(s), TypedSequence(t), q)) sum += dim;
  return sum;
}

TEST(Differential, OddCrossingMapsToIdentity) {
  EXPECT_EQ(differential(nf("11", {S(1)})), idempotent(TypedSequence("11")));
}

TEST(Differential, OtherGeneratorsAreClosed) {
  EXPECT_TRUE(differential(nf("22", {X(1)})).is_zero());
  EXPECT_TRUE(differential(nf("22", {S(1)})).is_zero());
  EXPECT_TRUE(differential(nf("12", {S(1)})).is_zero());
  EXPECT_TRUE(differential(nf("21", {S(1)})).is_zero());
  EXPECT_TRUE(differential(nf("12", {X(2)})).is_zero());
}

TEST(Differential, LeibnizSignOnTwoOddCrossings) {
  EXPECT_EQ(differential(nf("111", {S(1), S(2)})), nf("111", {S(1)}) - nf("111", {S(2)}));
}

TEST(Differential, SquaresToZeroOnAllSmallTerms) {
  auto& d = default_differential();
  for (int total = 0; total <= 4; ++total)
    for (int n = 0; n <= total; ++n)
      for (const auto& t : glcat::testing::all_terms(n, total - n, 2)) {
        const auto dt = d(t);
        if (!dt.is_zero()) EXPECT_TRUE(d(dt).is_zero());
      }
}

TEST(Homology, OddBlockIsAcyclic) {
  for (int q = -2; q <= 2; ++q) EXPECT_EQ(total_homology("11", "11", q), 0);
}

TEST(Homology, PurelyBosonicHomologyIsTheAlgebra) {
  for (const char* seq : {"2", "22"}) {
    const auto gd = graded_dim(TypedSequence(seq), TypedSequence(seq), 6);
    for (int q = -2; q <= 6; ++q) EXPECT_EQ(total_homology(seq, seq, q), gd.coeff(q)) << seq << " q=" << q;
  }
}

TEST(Homology, MixedBlockIsPolynomialInOneVariable) {
  for (int q = -2; q <= 6; ++q) EXPECT_EQ(total_homology("12", "12", q), q >= 0 && q % 2 == 0 ? 1 : 0) << q;
}

TEST(Homology, NoTorsionBelowTheIdentity) {
  EXPECT_TRUE(homology_torsion(TypedSequence("11"), TypedSequence("11"), 0, 0).empty());
  EXPECT_TRUE(homology_torsion(TypedSequence("111"), TypedSequence("111"), 0, 0).empty());
}

TEST(Contraction, OddIdentitySolvedByCrossing) {
  const auto y = find_contraction(idempotent(TypedSequence("11")));
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, lift(nf("11", {S(1)}), Rational(1)));
}

TEST(Contraction, UnitOfThreeOddStrandsIsContractible) {
  const auto one = lift(unit_element(3, 0), Rational(1));
  const auto y = find_contraction(one);
  ASSERT_TRUE(y);
  EXPECT_EQ(differential(*y), one);
}

TEST(Contraction, MixedIdentityIsNotABoundary) {
  EXPECT_FALSE(find_contraction(idempotent(TypedSequence("12"))));
  EXPECT_FALSE(find_contraction(idempotent(TypedSequence("2"))));
}

TEST(Contraction, RejectsNonzeroDegreeTargets) {
  EXPECT_THROW(find_contraction(nf("22", {X(1)})), DomainError);
}

TEST(Truncation, UnitIdempotentReproducesBlockHomology) {
  Truncation tr(idempotent(TypedSequence("12")));
  for (int q = 0; q <= 4; ++q) {
    int sum = 0;
    for (const auto& [c, dim] : tr.homology(q)) sum += dim;
    EXPECT_EQ(sum, total_homology("12", "12", q));
  }
}

TEST(Truncation, RejectsNonIdempotents) {
  EXPECT_THROW(Truncation(Element<Integer>{}), DomainError);
  EXPECT_THROW(Truncation(idempotent(TypedSequence("22")).scaled(Integer(2))), DomainError);
  EXPECT_THROW(Truncation(nf("22", {X(1)})), DomainError);
}

TEST(WeightTwo, HomologyCharacterSmallCases) {
  EXPECT_EQ(r1_homology_character(1, 6), LaurentInt::parse("1"));
  EXPECT_EQ(r1_homology_character(2, 6), LaurentInt::parse("1+q^2+q^4+q^6"));
}

TEST(WeightTwo, GeneratorBoundsDotProduct) {
  for (int m = 1; m <= 2; ++m) EXPECT_EQ(differential(r1_generator_x(m)), r1_dot_product(m));
}

}  // namespace
