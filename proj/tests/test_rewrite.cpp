#include "helpers.hpp"

#include <gtest/gtest.h>

#include <thread>

namespace {

using namespace glcat;
using glcat::testing::nf;
using glcat::testing::S;
using glcat::testing::X;

DiagramTerm term(const std::string& seq, std::vector<int> images, std::vector<int> dots) {
  return {TypedSequence(seq), Permutation(std::move(images)), std::move(dots)};
}

TEST(NormalForm, SquaredEvenCrossingVanishes) { EXPECT_TRUE(nf("22", {S(1), S(1)}).is_zero()); }

TEST(NormalForm, SquaredOddCrossingVanishes) { EXPECT_TRUE(nf("11", {S(1), S(1)}).is_zero()); }

TEST(NormalForm, MixedDoubleCrossingIsDotOnBosonicStrand) {
  EXPECT_EQ(nf("12", {S(1), S(1)}), glcat::testing::term_element(term("12", {0, 1}, {1})));
  EXPECT_EQ(nf("21", {S(1), S(1)}), glcat::testing::term_element(term("21", {0, 1}, {1})));
}

TEST(NormalForm, NilHeckeDotSlide) {
  // dot on strand 2, then the crossing: x_1 on top of the crossing, minus the identity.
  Element<Integer> expected = glcat::testing::term_element(term("22", {1, 0}, {1, 0}));
  expected -= idempotent(TypedSequence("22"));
  EXPECT_EQ(nf("22", {X(2), S(1)}), expected);
}

TEST(NormalForm, DistantOddCrossingsAnticommute) {
  const auto a = nf("1111", {S(1), S(3)});
  const auto b = nf("1111", {S(3), S(1)});
  EXPECT_FALSE(a.is_zero());
  EXPECT_EQ(a, -b);
}

TEST(NormalForm, DistantMixedCrossingsCommute) {
  EXPECT_EQ(nf("1212", {S(1), S(3)}), nf("1212", {S(3), S(1)}));
  EXPECT_EQ(nf("2211", {S(1), S(3)}), nf("2211", {S(3), S(1)}));
}

TEST(NormalForm, BraidOnEvenOddEvenHasIdentityCorrection) {
  const auto diff = nf("212", {S(1), S(2), S(1)}) - nf("212", {S(2), S(1), S(2)});
  EXPECT_EQ(diff, idempotent(TypedSequence("212")).scaled(Integer(kBraidCorrection)));
  for (const char* seq : {"111", "222", "112", "121", "211", "122", "221"})
    EXPECT_EQ(nf(seq, {S(1), S(2), S(1)}), nf(seq, {S(2), S(1), S(2)})) << seq;
}

TEST(NormalForm, RejectsInvalidWords) {
  EXPECT_THROW(nf("12", {X(1)}), DomainError);
  EXPECT_THROW(nf("12", {S(2)}), DomainError);
  EXPECT_THROW(nf("12", {S(1), X(2)}), DomainError);
}

TEST(NormalForm, FixesBasisTerms) {
  auto& eng = default_engine();
  for (int total = 0; total <= 4; ++total)
    for (int n = 0; n <= total; ++n)
      for (const auto& t : glcat::testing::all_terms(n, total - n, 4))
        EXPECT_EQ(eng.normal_form(eng.word(t)), glcat::testing::term_element(t));
}

TEST(Multiply, OrthogonalIdempotents) {
  const auto a = idempotent(TypedSequence("12")), b = idempotent(TypedSequence("21"));
  EXPECT_EQ(multiply(a, a), a);
  EXPECT_TRUE(multiply(a, b).is_zero());
}

TEST(Multiply, NilHeckeIdempotent) {
  const auto e2 = e_m(2);
  EXPECT_EQ(multiply(e2, e2), e2);
}

TEST(Multiply, TopIsLeftFactor) {
  // s1 on 12 lands on 21; the identity of 21 must sit on top.
  const auto s = nf("12", {S(1)});
  EXPECT_EQ(multiply(idempotent(TypedSequence("21")), s), s);
  EXPECT_TRUE(multiply(idempotent(TypedSequence("12")), s).is_zero());
  EXPECT_EQ(multiply(s, idempotent(TypedSequence("12"))), s);
}

TEST(Multiply, Associative) {
  std::mt19937 rng(7);
  auto& eng = default_engine();
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const int total = 1 + static_cast<int>(rng() % 3);
    const int n = static_cast<int>(rng() % (total + 1));
    const auto terms = glcat::testing::all_terms(n, total - n, 4);
    const auto a = glcat::testing::term_element(terms[rng() % terms.size()]);
    const auto b = glcat::testing::term_element(terms[rng() % terms.size()]);
    const auto c = glcat::testing::term_element(terms[rng() % terms.size()]);
    const auto lhs = multiply(multiply(a, b, eng), c, eng), rhs = multiply(a, multiply(b, c, eng), eng);
    EXPECT_EQ(lhs, rhs);
    if (!lhs.is_zero()) ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(SigmaW, SpecExamples) {
  EXPECT_EQ(sigma_w(Permutation::identity(3)), idempotent(TypedSequence("111")));
  EXPECT_EQ(sigma_w(Permutation::simple(2, 1)), glcat::testing::term_element(term("11", {1, 0}, {})));
  const Permutation s1s3({1, 0, 3, 2});
  EXPECT_EQ(sigma_w(s1s3), -nf("1111", {S(3), S(1)}));
  EXPECT_EQ(sigma_w(s1s3), glcat::testing::term_element(term("1111", {1, 0, 3, 2}, {}), -1));
}

TEST(SigmaW, ConsistentWithPolStepSign) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (int i = 1; i < n; ++i) {
        if (w.is_left_descent(i)) continue;
        const auto lhs = sigma_w(w.left_times_simple(i));
        const auto rhs = multiply(sigma_w(Permutation::simple(n, i)), sigma_w(w)).scaled(Integer(epsilon_step(w, i)));
        EXPECT_EQ(lhs, rhs) << w.str() << " i=" << i;
      }
}

TEST(Relations, EngineSatisfiesEveryInstance) {
  for (int total = 0; total <= 4; ++total)
    for (int n = 0; n <= total; ++n)
      for (const auto& seq : all_sequences(n, total - n))
        for (const auto& rel : defining_relations(seq)) EXPECT_TRUE(relation_defect(rel).is_zero()) << rel.name;
}

bool braid_relations_hold_on_pol(int correction) {
  for (const auto& seq : all_sequences(1, 2)) {
    const auto tests = pol_test_vectors<Integer>({seq}, 3, Integer(1));
    for (const auto& rel : defining_relations(seq, correction))
      for (const auto& v : tests) {
        PolVector<Integer> acc;
        for (const auto& [c, toks] : rel.terms) acc += act_word<Integer>({rel.source, toks}, v).scaled(c);
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

TEST(Relations, BraidCorrectionSignIsForcedByPol) {
  EXPECT_TRUE(braid_relations_hold_on_pol(kBraidCorrection));
  EXPECT_FALSE(braid_relations_hold_on_pol(-kBraidCorrection));
}

TEST(Center, SymmetricPolynomialsInDotsAreCentral) {
  auto& eng = default_engine();
  for (int total = 1; total <= 3; ++total)
    for (int n = 0; n < total; ++n) {
      const int m = total - n;
      const auto seqs = all_sequences(n, m);
      for (int k = 1; k <= m; ++k) {
        Element<Integer> z;
        for (const auto& s : seqs)
          for (const auto& e : monomials_of_degree(m, k)) {
            if (*std::max_element(e.begin(), e.end()) > 1) continue;
            z.add({s, Permutation::identity(total), e}, Integer(1));
          }
        for (const auto& t : glcat::testing::all_terms(n, m, 4)) {
          const auto b = glcat::testing::term_element(t);
          EXPECT_EQ(multiply(z, b, eng), multiply(b, z, eng)) << "e_" << k << " against " << t.source.str();
        }
      }
    }
}

GeneratorWord flipped(const GeneratorWord& w) { return {w.target(), {w.tokens.rbegin(), w.tokens.rend()}}; }

GeneratorWord mirrored(const GeneratorWord& w) {
  std::string s = w.source.str();
  std::reverse(s.begin(), s.end());
  const int N = static_cast<int>(s.size());
  GeneratorWord r{TypedSequence(s), {}};
  for (const auto& g : w.tokens) r.tokens.push_back(g.is_dot() ? X(N + 1 - g.position) : S(N - g.position));
  return r;
}

int even_crossings(const GeneratorWord& w) {
  int c = 0;
  TypedSequence cur = w.source;
  for (const auto& g : w.tokens) {
    if (g.is_crossing() && cur[g.position - 1] == '2' && cur[g.position] == '2') ++c;
    cur = after_token(cur, g);
  }
  return c;
}

TEST(Reflection, TopBottomFlipIsAntiInvolution) {
  auto& eng = default_engine();
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto w = glcat::testing::random_word(rng, 3, 6);
    const auto f = eng.normal_form(w);
    Element<Integer> image;
    for (const auto& [t, c] : f.terms()) image += eng.normal_form(flipped(eng.word(t))).scaled(c);
    EXPECT_EQ(image, eng.normal_form(flipped(w)));
  }
}

TEST(Reflection, SignedMirrorIsInvolution) {
  auto& eng = default_engine();
  std::mt19937 rng(13);
  auto sign = [](const GeneratorWord& w) { return Integer(even_crossings(w) % 2 ? -1 : 1); };
  for (int i = 0; i < 500; ++i) {
    const auto w = glcat::testing::random_word(rng, 3, 6);
    const auto f = eng.normal_form(w);
    Element<Integer> image;
    for (const auto& [t, c] : f.terms()) {
      const auto tw = eng.word(t);
      image += eng.normal_form(mirrored(tw)).scaled(c * sign(tw));
    }
    EXPECT_EQ(image, eng.normal_form(mirrored(w)).scaled(sign(w)));
  }
}

TEST(Engine, ConcurrentUseAgreesWithSerial) {
  Engine shared;
  std::mt19937 rng(17);
  std::vector<GeneratorWord> words;
  for (int i = 0; i < 200; ++i) words.push_back(glcat::testing::random_word(rng, 4, 6));
  std::vector<Element<Integer>> serial;
  {
    Engine fresh;
    for (const auto& w : words) serial.push_back(fresh.normal_form(w));
  }
  std::vector<std::vector<Element<Integer>>> results(4);
  std::vector<std::thread> threads;
  for (int k = 0; k < 4; ++k)
    threads.emplace_back([&, k] {
      for (const auto& w : words) results[k].push_back(shared.normal_form(w));
    });
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, serial);
}

}  // namespace
