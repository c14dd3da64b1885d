#include "helpers.hpp"

#include <gtest/gtest.h>

namespace {

using namespace glcat;

DividedPowerSequence dps(const char* s) { return DividedPowerSequence::parse(s); }

TEST(NilHecke, SmallIdempotents) {
  EXPECT_EQ(e_m(0), idempotent(TypedSequence("")));
  EXPECT_EQ(e_m(1), idempotent(TypedSequence("2")));
  const auto e2 = e_m(2);
  EXPECT_EQ(multiply(e2, e2), e2);
  EXPECT_EQ(e2.size(), 2u);
}

TEST(DividedPower, ParseAndPrint) {
  EXPECT_EQ(dps("2^(2)12").str(), "2^(2)12");
  EXPECT_EQ(dps("2^3").expand().str(), "222");
  EXPECT_EQ(dps("1^2 2").expand().str(), "112");
  EXPECT_EQ(dps("2^(3)").expand().str(), "222");
  EXPECT_THROW(dps("2^("), DomainError);
  EXPECT_THROW(dps("3"), DomainError);
  EXPECT_THROW(DividedPowerSequence({{false, 0}}), DomainError);
}

TEST(DividedPower, Shift) {
  EXPECT_EQ(dps("212").shift(), 0);
  EXPECT_EQ(dps("2^(2)").shift(), -1);
  EXPECT_EQ(dps("2^(3)1").shift(), -3);
  EXPECT_EQ(dps("2^(2)12^(3)").shift(), -4);
}

TEST(Decomposition, MixedSerreSplitsIntoTwoSummands) {
  const auto r = solve_decomposition(dps("212"), {dps("12^(2)"), dps("2^(2)1")});
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.multiplicities[0], LaurentInt(1));
  EXPECT_EQ(r.multiplicities[1], LaurentInt(1));
  std::string why;
  EXPECT_TRUE(verify_certificate(*r.certificate, &why)) << why;
}

TEST(Decomposition, TwoBosonicStrandsGiveQuantumTwo) {
  const auto r = solve_decomposition(dps("22"), {dps("2^(2)")});
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.multiplicities[0], quantum_integer(2));
}

TEST(Decomposition, DividedPowerIsItsOwnSummand) {
  for (const char* s : {"12^(2)", "2^(2)1", "2^(3)"}) {
    const auto r = solve_decomposition(dps(s), {dps(s)});
    ASSERT_TRUE(r.solved()) << s;
    EXPECT_EQ(r.multiplicities[0], LaurentInt(1));
  }
}

TEST(Decomposition, RejectsWeightMismatch) {
  EXPECT_THROW(solve_decomposition(dps("212"), {dps("2^(2)")}), DomainError);
}

TEST(Decomposition, TamperedCertificateFailsReplay) {
  auto r = solve_decomposition(dps("212"), {dps("12^(2)"), dps("2^(2)1")});
  ASSERT_TRUE(r.solved());
  auto cert = *r.certificate;
  cert.source_shift += 2;
  EXPECT_FALSE(verify_certificate(cert));
  cert = *r.certificate;
  cert.alphas[0] = cert.alphas[0].scaled(Rational(2));
  EXPECT_FALSE(verify_certificate(cert));
}

TEST(Decomposition, DividedMultiplicitiesAreBinomials) {
  for (int m = 2; m <= 3; ++m)
    for (int k = 1; k < m; ++k) {
      const DividedPowerSequence src({{false, k}, {true, 1}, {false, m - k}});
      const auto r = solve_decomposition(src, {DividedPowerSequence::sandwich(1, m, 0), DividedPowerSequence::sandwich(0, m, 1)});
      ASSERT_TRUE(r.solved());
      EXPECT_EQ(r.multiplicities[0], quantum_binomial(m - 1, k)) << m << "," << k;
      EXPECT_EQ(r.multiplicities[1], quantum_binomial(m - 1, k - 1)) << m << "," << k;
    }
  const DividedPowerSequence src({{false, 1}, {true, 1}, {false, 2}});
  const auto r = solve_decomposition(src, {dps("12^(3)"), dps("2^(3)1")});
  EXPECT_EQ(r.multiplicities[0], quantum_integer(2));
  EXPECT_EQ(r.multiplicities[1], LaurentInt(1));
}

TEST(Decomposition, UndividedSplitsCarryFactorials) {
  for (const auto& s : undivided_splits(3)) {
    ASSERT_TRUE(s.solved);
    EXPECT_EQ(s.r1, s.predicted_r1);
    EXPECT_EQ(s.r2, s.predicted_r2);
    EXPECT_NE(s.r2, s.alternative_r2);
  }
}

TEST(Decomposition, GradedDimensionsAgreeWithCertificate) {
  const auto r = solve_decomposition(dps("212"), {dps("12^(2)"), dps("2^(2)1")});
  ASSERT_TRUE(r.solved());
  const auto es = lift(divided_idempotent(dps("212")), Rational(1));
  std::vector<Element<Rational>> et;
  for (const auto& t : r.certificate->targets) et.push_back(lift(divided_idempotent(t.seq), Rational(1)));
  const int lo = -4, hi = 4, pad = 4;
  const auto lhs = truncated_graded_dim(es, es, lo, hi);
  LaurentInt rhs;
  for (std::size_t a = 0; a < et.size(); ++a)
    for (std::size_t b = 0; b < et.size(); ++b) {
      const int shift = r.certificate->targets[a].shift - r.certificate->targets[b].shift;
      rhs += truncated_graded_dim(et[a], et[b], lo - shift - pad, hi - shift + pad) * LaurentInt::parse("q^" + std::to_string(shift));
    }
  EXPECT_NE(lhs, LaurentInt());
  for (int q = lo; q <= hi; ++q) EXPECT_EQ(lhs.coeff(q), rhs.coeff(q)) << "q=" << q;
}

TEST(K0, RanksOfSmallWeights) {
  auto expected = [](int n, int m) { return n == 0 ? 1 : n == 1 ? (m == 0 ? 1 : 2) : n == 2 ? (m == 0 ? 0 : 1) : 0; };
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; n + m <= 3; ++m) {
      const auto rep = k0_rank(n, m);
      EXPECT_EQ(rep.rank, expected(n, m)) << n << "," << m;
      EXPECT_TRUE(rep.decompositions_ok) << rep.message;
    }
}

TEST(UPlus, RelationsHold) {
  for (const auto& c : verify_u_plus_relations(3)) EXPECT_TRUE(c.passed) << c.identity << ": " << c.detail;
}

}  // namespace
