#include "helpers.hpp"

#include <gtest/gtest.h>

namespace {

using namespace glcat;
using glcat::testing::S;
using glcat::testing::X;

using Poly = Polynomial<Integer>;
using Vec = PolVector<Integer>;

Poly mono(std::vector<int> e, std::int64_t c = 1) { return Poly::monomial(std::move(e), Integer(c)); }

Vec vec(const std::string& seq, Poly f, Permutation w = {}) {
  const TypedSequence s(seq);
  if (w.size() == 0) w = Permutation::identity(s.ones());
  return Vec::single({s, w}, std::move(f));
}

Vec act(const std::string& seq, std::vector<GeneratorToken> toks, const Vec& v, MixedRule rule = MixedRule::Standard) {
  return act_word<Integer>({TypedSequence(seq), std::move(toks)}, v, rule);
}

TEST(Pol, DotMultipliesByItsVariable) {
  EXPECT_EQ(act("22", {X(2)}, vec("22", mono({1, 0}))), vec("22", mono({1, 1})));
  EXPECT_EQ(act("212", {X(3)}, vec("212", mono({0, 0}))), vec("212", mono({0, 1})));
}

TEST(Pol, EvenCrossingIsDividedDifference) {
  EXPECT_EQ(act("22", {S(1)}, vec("22", mono({1, 0}))), vec("22", mono({0, 0})));
  EXPECT_EQ(act("22", {S(1)}, vec("22", mono({0, 1}))), vec("22", mono({0, 0}, -1)));
  EXPECT_TRUE(act("22", {S(1)}, vec("22", mono({1, 1}))).is_zero());
  Poly sum = mono({1, 0});
  sum += mono({0, 1});
  EXPECT_EQ(act("22", {S(1)}, vec("22", mono({2, 0}))), vec("22", sum));
}

TEST(Pol, OddCrossingMovesBetweenPermutationBlocks) {
  const auto id = Permutation::identity(2), s = Permutation::simple(2, 1);
  EXPECT_EQ(act("11", {S(1)}, vec("11", Poly::monomial({}, Integer(1)), id)), vec("11", Poly::monomial({}, Integer(1)), s));
  EXPECT_TRUE(act("11", {S(1)}, vec("11", Poly::monomial({}, Integer(1)), s)).is_zero());
}

TEST(Pol, MixedCrossingsMultiplyOnceAroundTheLoop) {
  const auto one = mono({0});
  EXPECT_EQ(act("12", {S(1)}, vec("12", one)), vec("21", one));
  EXPECT_EQ(act("21", {S(1)}, vec("21", one)), vec("12", mono({1})));
  EXPECT_EQ(act("12", {S(1), S(1)}, vec("12", one)), vec("12", mono({1})));
  EXPECT_EQ(act("12", {S(1)}, vec("12", one), MixedRule::Interchanged), vec("21", mono({1})));
  EXPECT_EQ(act("21", {S(1)}, vec("21", one), MixedRule::Interchanged), vec("12", one));
}

TEST(Pol, IdempotentsProjectOntoBlocks) {
  const auto v = vec("12", mono({3}));
  EXPECT_EQ(act_element(lift(idempotent(TypedSequence("12")), Integer(1)), v), v);
  EXPECT_TRUE(act_element(idempotent(TypedSequence("21")), v).is_zero());
}

TEST(Pol, NilHeckeIdempotentIsSymmetrizer) {
  const auto e2 = e_m(2);
  EXPECT_EQ(act_element(e2, vec("22", mono({0, 0}))), vec("22", mono({0, 0})));
  Poly h1 = mono({1, 0});
  h1 += mono({0, 1});
  EXPECT_EQ(act_element(e2, vec("22", mono({1, 0}))), vec("22", h1));
  EXPECT_EQ(act_element(e2, vec("22", h1)), vec("22", h1));
  for (const auto& v : pol_test_vectors<Integer>({TypedSequence("22")}, 4, Integer(1)))
    EXPECT_EQ(act_element(e2, act_element(e2, v)), act_element(e2, v));
}

TEST(Pol, ElementActionMatchesWordAction) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto w = glcat::testing::random_word(rng, 4, 6);
    const auto e = default_engine().normal_form(w);
    for (const auto& v : pol_test_vectors<Integer>({w.source}, 2, Integer(1)))
      EXPECT_EQ(act_element(e, v), act_word(w, v));
  }
}

TEST(Pol, InterchangedRuleAlsoSatisfiesRelations) {
  for (int total = 1; total <= 3; ++total)
    for (int n = 0; n <= total; ++n)
      for (const auto& seq : all_sequences(n, total - n)) {
        const auto tests = pol_test_vectors<Integer>({seq}, 3, Integer(1));
        for (const auto& rel : defining_relations(seq))
          for (const auto& v : tests) {
            Vec acc;
            for (const auto& [c, toks] : rel.terms)
              acc += act_word<Integer>({rel.source, toks}, v, MixedRule::Interchanged).scaled(c);
            EXPECT_TRUE(acc.is_zero()) << rel.name << " on " << seq.str();
          }
      }
}

TEST(Faithfulness, SmallWeightsAreConclusive) {
  const auto a = faithfulness_check(0, 1, 6, 6);
  EXPECT_TRUE(a.conclusive);
  EXPECT_EQ(a.terms, 4u);
  const auto b = faithfulness_check(2, 0, 0, 0);
  EXPECT_TRUE(b.conclusive);
  EXPECT_EQ(b.rank, 2u);
  EXPECT_TRUE(faithfulness_check(1, 2, 4, 6).conclusive);
  EXPECT_THROW(faithfulness_check(-1, 0, 0), DomainError);
}

}  // namespace
