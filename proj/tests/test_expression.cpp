#include "helpers.hpp"

#include <gtest/gtest.h>

namespace {

using namespace glcat;
using glcat::testing::nf;
using glcat::testing::S;
using glcat::testing::X;

Element<Integer> eval(const std::string& text) { return evaluate(parse_expression(text), Integer(1)); }

TEST(Expression, ParsesTermsAndCoefficients) {
  const auto e = parse_expression("seq=22; 2 - x2 + 3/2 * s1 x1");
  EXPECT_EQ(e.source, TypedSequence("22"));
  ASSERT_EQ(e.terms.size(), 3u);
  EXPECT_EQ(e.terms[0].coeff, Rational(2));
  EXPECT_TRUE(e.terms[0].tokens.empty());
  EXPECT_EQ(e.terms[1].coeff, Rational(-1));
  EXPECT_EQ(e.terms[1].tokens, std::vector<GeneratorToken>{X(2)});
  EXPECT_EQ(e.terms[2].coeff, Rational(3, 2));
  EXPECT_EQ(e.terms[2].tokens, (std::vector<GeneratorToken>{S(1), X(1)}));
}

TEST(Expression, EvaluatesToNormalForms) {
  EXPECT_EQ(eval("seq=12; s1 s1"), nf("12", {X(2)}));
  EXPECT_EQ(eval("seq=22; x2 s1 - s1 x1"), -idempotent(TypedSequence("22")));
  EXPECT_TRUE(eval("seq=11; s1 s1").is_zero());
  EXPECT_EQ(eval("seq=22; 1"), idempotent(TypedSequence("22")));
}

TEST(Expression, PrintsCanonically) {
  EXPECT_EQ(print_expression(parse_expression("seq=22;2-x2+3/2*s1 x1")), "seq=22; 2 - x2 + 3/2 s1 x1");
  EXPECT_EQ(print_expression(parse_expression("seq=22; -s1")), "seq=22; -s1");
  EXPECT_EQ(print_element(Element<Integer>{}, TypedSequence("12")), "seq=12; 0");
  EXPECT_EQ(print_element(eval("seq=12; s1 s1"), TypedSequence("12")), "seq=12; x2");
}

TEST(Expression, PrintThenParseRoundTrips) {
  std::mt19937 rng(23);
  auto& eng = default_engine();
  for (int i = 0; i < 300; ++i) {
    const auto w = glcat::testing::random_word(rng, 4, 6);
    const auto e = eng.normal_form(w).scaled(Integer(1 + static_cast<int>(rng() % 5)));
    Element<Integer> back;
    for (const auto& ex : element_expressions(e)) back += evaluate(parse_expression(print_expression(ex)), Integer(1));
    EXPECT_EQ(back, e);
  }
}

TEST(Expression, SeveralExpressionsInOneInput) {
  const auto all = parse_expressions("seq=11; s1 s1\nseq=22; 1\n  seq=121; s2 s1");
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[2].source, TypedSequence("121"));
  EXPECT_EQ(all[2].terms[0].tokens, (std::vector<GeneratorToken>{S(2), S(1)}));
}

TEST(Expression, SyntaxErrorsCarryPositions) {
  try {
    parse_expression("seq=22; s1 +");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 1);
    EXPECT_EQ(e.column, 13);
  }
  try {
    parse_expressions("seq=22; s1\nseq=2x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2);
  }
  EXPECT_THROW(parse_expression("22; s1"), ParseError);
  EXPECT_THROW(parse_expression("seq=22; s"), ParseError);
  EXPECT_THROW(parse_expression("seq=22; 1/0"), DomainError);
}

TEST(Expression, SemanticErrorsNameTermAndToken) {
  try {
    parse_expression("seq=12; x2 + s1 x2");
    FAIL();
  } catch (const SemanticError& e) {
    EXPECT_EQ(e.term, 1);
    EXPECT_EQ(e.token, 1);
  }
  EXPECT_THROW(parse_expression("seq=12; s2"), SemanticError);
}

TEST(Expression, CoefficientRings) {
  EXPECT_THROW(evaluate(parse_expression("seq=2; 1/2"), Integer(1)), DomainError);
  const auto f = evaluate(parse_expression("seq=2; 1/2"), Fp(1, 5));
  EXPECT_EQ(f.coeff(DiagramTerm::identity(TypedSequence("2"))), Fp(3, 5));
  EXPECT_THROW(evaluate(parse_expression("seq=2; 1/5"), Fp(1, 5)), DomainError);
  EXPECT_TRUE(evaluate(parse_expression("seq=2; 5 x1"), Fp(1, 5)).is_zero());
  EXPECT_EQ(evaluate(parse_expression("seq=2; 1/2"), Rational(1)).coeff(DiagramTerm::identity(TypedSequence("2"))),
            Rational(1, 2));
}

TEST(Polynomial, ParseAndPrint) {
  const auto f = parse_polynomial<Integer>("x1^2 + x1*x2 - 3 x2", 2, Integer(1));
  Polynomial<Integer> g = Polynomial<Integer>::monomial({2, 0}, Integer(1));
  g += Polynomial<Integer>::monomial({1, 1}, Integer(1));
  g += Polynomial<Integer>::monomial({0, 1}, Integer(-3));
  EXPECT_EQ(f, g);
  EXPECT_EQ(parse_polynomial<Integer>(print_polynomial(f), 2, Integer(1)), f);
  EXPECT_EQ(print_polynomial(Polynomial<Integer>{}), "0");
  EXPECT_THROW(parse_polynomial<Integer>("x3", 2, Integer(1)), DomainError);
}

TEST(Json, ElementRoundTrip) {
  const auto e = eval("seq=22; 2 s1 x1 - 3 x2");
  const auto j = element_to_json(e, "zz");
  EXPECT_EQ(j.at("schema"), kElementSchema);
  EXPECT_EQ(element_from_json(Json::parse(j.dump())), lift(e, Rational(1)));
}

TEST(Json, CertificateRoundTripReplays) {
  const auto r = solve_decomposition(DividedPowerSequence::parse("212"),
                                     {DividedPowerSequence::parse("12^(2)"), DividedPowerSequence::parse("2^(2)1")});
  ASSERT_TRUE(r.solved());
  const auto j = certificate_to_json(*r.certificate);
  const auto back = certificate_from_json(Json::parse(j.dump()));
  EXPECT_TRUE(verify_certificate(back));
  auto bad = Json::parse(j.dump());
  bad["source_shift"] = 5;
  EXPECT_FALSE(verify_certificate(certificate_from_json(bad)));
}

}  // namespace
