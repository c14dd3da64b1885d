#include "helpers.hpp"

#include <gtest/gtest.h>

namespace {

using namespace glcat;

TEST(Integer, OverflowIsDetected) {
  const Integer big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Integer(1), std::overflow_error);
  EXPECT_THROW(big * Integer(2), std::overflow_error);
  EXPECT_EQ((Integer(6) * Integer(-7)).value(), -42);
}

TEST(Fp, FieldArithmetic) {
  const Fp a(3, 7), b(5, 7);
  EXPECT_EQ((a * b).value(), 1);
  EXPECT_EQ((a / b).value(), (a * Fp(3, 7)).value());
  EXPECT_EQ((-a).value(), 4);
  EXPECT_THROW(Fp(1, 1), DomainError);
}

TEST(QuantumInteger, SmallValues) {
  EXPECT_EQ(quantum_integer(0), LaurentInt());
  EXPECT_EQ(quantum_integer(1), LaurentInt(1));
  EXPECT_EQ(quantum_integer(2).str(), "q+q^-1");
  EXPECT_EQ(quantum_integer(3).str(), "q^2+1+q^-2");
}

TEST(QuantumBinomial, SpecExamples) {
  EXPECT_EQ(quantum_binomial(2, 1).str(), "q+q^-1");
  for (int m = 0; m <= 5; ++m) EXPECT_EQ(quantum_binomial(m, 0), LaurentInt(1));
  EXPECT_EQ(quantum_binomial(4, 2).str(), "q^4+q^2+2+q^-2+q^-4");
}

TEST(QuantumBinomial, Errors) {
  EXPECT_THROW(quantum_binomial(2, 3), DomainError);
  EXPECT_THROW(quantum_binomial(-1, 0), DomainError);
  EXPECT_THROW(quantum_binomial(3, -1), DomainError);
}

TEST(QuantumBinomial, MatchesFactorialQuotient) {
  for (int m = 0; m <= 7; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto denom = quantum_factorial(k) * quantum_factorial(m - k);
      EXPECT_EQ(quantum_factorial(m).divided_by(denom), quantum_binomial(m, k)) << m << " " << k;
    }
}

TEST(QuantumBinomial, SymmetryBarInvarianceAndClassicalLimit) {
  for (int m = 0; m <= 8; ++m) {
    std::int64_t classical = 1;
    for (int k = 0; k <= m; ++k) {
      const auto b = quantum_binomial(m, k);
      EXPECT_EQ(b, quantum_binomial(m, m - k));
      EXPECT_EQ(b, b.bar());
      EXPECT_TRUE(b.nonnegative());
      EXPECT_EQ(b.at_one().value(), classical);
      classical = classical * (m - k) / (k + 1);
    }
  }
}

TEST(LaurentInt, ParseRoundTrip) {
  for (const char* s : {"0", "1", "-3", "q+q^-1", "q^4+q^2+2+q^-2+q^-4", "-2*q^3+q-7*q^-5"})
    EXPECT_EQ(LaurentInt::parse(s).str(), s);
  EXPECT_EQ(LaurentInt::parse("q^(-2) + 1"), LaurentInt::q(-2) + LaurentInt(1));
  EXPECT_THROW(LaurentInt::parse(""), DomainError);
  EXPECT_THROW(LaurentInt::parse("q^"), DomainError);
}

TEST(LaurentInt, InexactDivisionThrows) {
  EXPECT_THROW(quantum_integer(3).divided_by(quantum_integer(2)), DomainError);
  EXPECT_THROW(LaurentInt(1).divided_by(LaurentInt()), DomainError);
}

TEST(Pdi, SpecExamples) {
  EXPECT_TRUE(pdi(Permutation::simple(2, 1)).empty());
  EXPECT_TRUE(pdi(Permutation({2, 1, 0})).empty());
  const auto s1s3 = pdi(Permutation({1, 0, 3, 2}));
  ASSERT_EQ(s1s3.size(), 1u);
  EXPECT_EQ(s1s3.begin()->q, (std::array<int, 4>{1, 2, 3, 4}));
}

TEST(Pdi, QuadruplesAreDisjointInversions) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& p : pdi(w)) {
        const auto [j1, j2, k1, k2] = p.q;
        EXPECT_LT(j1, j2);
        EXPECT_LT(k1, k2);
        EXPECT_LT(j1, k1);
        EXPECT_TRUE(j1 != k2 && j2 != k1 && j2 != k2);
        EXPECT_GT(w(j1 - 1), w(j2 - 1));
        EXPECT_GT(w(k1 - 1), w(k2 - 1));
      }
}

TEST(EpsilonSign, SpecExamples) {
  EXPECT_EQ(epsilon_sign({{1, 2, 1}}, 3), 1);
  EXPECT_EQ(epsilon_sign({{1, 3}}, 4), -1);
  EXPECT_EQ(epsilon_sign({{3, 1}}, 4), 1);
  EXPECT_THROW(epsilon_sign({{1, 1}}, 3), DomainError);
}

TEST(EpsilonSign, CommutationFlipsAndBraidMovePreserves) {
  int commutations = 0, braids = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& rw : all_reduced_words(w)) {
        const int e = epsilon_sign(rw, n);
        const auto& l = rw.letters;
        for (std::size_t j = 0; j + 1 < l.size(); ++j)
          if (std::abs(l[j] - l[j + 1]) >= 2) {
            auto o = rw;
            std::swap(o.letters[j], o.letters[j + 1]);
            EXPECT_EQ(epsilon_sign(o, n), -e);
            ++commutations;
          }
        for (std::size_t j = 0; j + 2 < l.size(); ++j)
          if (l[j] == l[j + 2] && std::abs(l[j] - l[j + 1]) == 1) {
            auto o = rw;
            o.letters[j] = o.letters[j + 2] = l[j + 1];
            o.letters[j + 1] = l[j];
            EXPECT_EQ(epsilon_sign(o, n), e);
            ++braids;
          }
      }
  EXPECT_GT(commutations, 0);
  EXPECT_GT(braids, 0);
}

TEST(CanonicalWord, SpecExamples) {
  EXPECT_TRUE(canonical_reduced_word(Permutation::identity(3)).letters.empty());
  EXPECT_EQ(canonical_reduced_word(Permutation::simple(3, 2)).letters, std::vector<int>{2});
  EXPECT_EQ(canonical_reduced_word(Permutation({2, 1, 0})).letters, (std::vector<int>{1, 2, 1}));
}

TEST(CanonicalWord, IsLexMinReducedWord) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto c = canonical_reduced_word(w);
      EXPECT_EQ(evaluate_word(c.letters, n), w);
      EXPECT_EQ(static_cast<int>(c.size()), w.length());
      const auto all = all_reduced_words(w);
      EXPECT_EQ(*std::min_element(all.begin(), all.end()), c);
    }
}

TEST(ReducedWords, CountForLongestElementOfS4) {
  EXPECT_EQ(all_reduced_words(Permutation({3, 2, 1, 0})).size(), 16u);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0}), DomainError);
  EXPECT_THROW(Permutation({0, 2}), DomainError);
  EXPECT_THROW(Permutation::simple(3, 3), DomainError);
}

}  // namespace
