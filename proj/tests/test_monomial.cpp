#include <gtest/gtest.h>

#include "snakechar/monomial.hpp"
#include "snakechar/qchar.hpp"
#include "snakechar/textio.hpp"

using namespace snakechar;

namespace {

YMonomial M(const std::string& s) { return parse_monomial(s); }

TEST(Cartan, TypeAMatrix) {
  auto cd = make_cartan(LieType::A, 3);
  EXPECT_EQ(cd.C[1][2], -1);
  EXPECT_EQ(cd.C[2][1], -1);
  EXPECT_EQ(cd.C[1][3], 0);
  EXPECT_EQ(cd.d[2], 1);
  EXPECT_EQ(cd.t_max, 1);
}

TEST(Cartan, TypeBMatrixAndSymmetrizer) {
  auto cd = make_cartan(LieType::B, 3);
  EXPECT_EQ(cd.C[2][3], -1);
  EXPECT_EQ(cd.C[3][2], -2);
  EXPECT_EQ(cd.d[1], 2);
  EXPECT_EQ(cd.d[3], 1);
  EXPECT_EQ(cd.t_max, 2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(cd.b(i, j), cd.b(j, i)) << i << "," << j;
}

TEST(Monomial, MulCancels) {
  YMonomial a = M("1_0 2_3^-1");
  YMonomial b = M("2_3 1_0");
  EXPECT_EQ(a * b, M("1_0^2"));
  EXPECT_TRUE((a * a.inverse()).is_unit());
}

TEST(Monomial, TextRoundTrip) {
  for (const char* s : {"1", "1_0", "2_-3^-1", "1_-2 1_0^2 3_5^-4"}) {
    EXPECT_EQ(format_monomial(M(s)), s);
  }
  EXPECT_THROW(M(""), std::invalid_argument);
  EXPECT_THROW(M("0_1"), std::invalid_argument);
  EXPECT_THROW(M("1_"), std::invalid_argument);
}

TEST(Monomial, Classify) {
  EXPECT_EQ(classify(M("1")), Dominance::Both);
  EXPECT_EQ(classify(M("1_0 2_5^3")), Dominance::Dominant);
  EXPECT_EQ(classify(M("1_0^-1")), Dominance::AntiDominant);
  EXPECT_EQ(classify(M("1_0 1_2^-1")), Dominance::Neither);
}

TEST(Monomial, RightNegative) {
  EXPECT_TRUE(is_right_negative(M("1_0 1_2^-1")));
  EXPECT_TRUE(is_right_negative(M("2_2^-1 1_2^-1 1_0")));
  EXPECT_FALSE(is_right_negative(M("1_0")));
  EXPECT_FALSE(is_right_negative(M("1_2 2_2^-1 1_0")));
  EXPECT_THROW(is_right_negative(M("1")), std::invalid_argument);
}

TEST(Monomial, AMonomialTypeA) {
  auto cd = make_cartan(LieType::A, 3);
  EXPECT_EQ(a_monomial(cd, 2, 0), M("1_0^-1 3_0^-1 2_-1 2_1"));
  EXPECT_EQ(a_monomial(cd, 1, 5), M("1_4 2_5^-1 1_6"));
}

TEST(Monomial, AMonomialTypeB) {
  auto cd = make_cartan(LieType::B, 3);
  EXPECT_EQ(a_monomial(cd, 3, 0), M("3_-1 2_0^-1 3_1"));
  EXPECT_EQ(a_monomial(cd, 2, 1), M("2_-1 1_1^-1 3_0^-1 3_2^-1 2_3"));
  EXPECT_EQ(a_monomial(cd, 1, 1), M("1_-1 2_1^-1 1_3"));
}

TEST(Monomial, DivisionOrderBasics) {
  EXPECT_EQ(cmp_div(M("1_0"), M("1_0")), 0);
  EXPECT_GT(cmp_div(M("1_1"), M("1_0")), 0);
  EXPECT_GT(cmp_div(M("2_0"), M("1_0")), 0);
  EXPECT_GT(cmp_div(M("1_5^-1"), M("1_5^-2")), 0);
  EXPECT_LT(cmp_div(M("1_5^-1"), M("1")), 0);
  EXPECT_GT(cmp_div(M("1_5 1_0^-9"), M("1_4^7")), 0);
  YMonomial a = M("1_0 2_3^-1"), b = M("2_2 1_1"), c = M("3_3");
  int ab = cmp_div(a, b);
  EXPECT_EQ(cmp_div(a * c, b * c), ab);
}

TEST(Monomial, LeqTypeA) {
  auto cd = make_cartan(LieType::A, 2);
  YMonomial top = M("1_0");
  YMonomial mid = top * a_monomial(cd, 1, 1).inverse();
  YMonomial bot = mid * a_monomial(cd, 2, 2).inverse();
  EXPECT_TRUE(leq(cd, mid, top));
  EXPECT_TRUE(leq(cd, bot, top));
  EXPECT_TRUE(leq(cd, bot, mid));
  EXPECT_TRUE(leq(cd, top, top));
  EXPECT_FALSE(leq(cd, top, mid));
  EXPECT_FALSE(leq(cd, mid, bot));
  EXPECT_FALSE(leq(cd, M("1_0"), M("2_0")));
}

TEST(Monomial, LeqTypeB) {
  auto cd = make_cartan(LieType::B, 2);
  YMonomial top = M("2_0");
  YMonomial m1 = top * a_monomial(cd, 2, 1).inverse();
  YMonomial m2 = m1 * a_monomial(cd, 1, 3).inverse();
  YMonomial m3 = m2 * a_monomial(cd, 2, 5).inverse();
  EXPECT_TRUE(leq(cd, m1, top));
  EXPECT_TRUE(leq(cd, m3, top));
  EXPECT_TRUE(leq(cd, m2, m1));
  EXPECT_FALSE(leq(cd, top, m3));
  EXPECT_FALSE(leq(cd, m1, m2));
}

TEST(QChar, MulAndCompare) {
  QCharacter a = QCharacter::from(M("1_0")) ;
  a.add_term(M("1_2^-1"), 1);
  QCharacter sq = qc_mul(a, a);
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq.coeff(M("1_0 1_2^-1")), 2);
  EXPECT_EQ(sq.coeff(M("1_0^2")), 1);
}

TEST(QChar, DivExactRoundTrip) {
  QCharacter a = parse_qchar("1_0 + 1_2^-1");
  QCharacter b = parse_qchar("2_1 + 2_3^-1 1_2 + 1_4^-1");
  QCharacter p = qc_mul(a, b);
  EXPECT_EQ(qc_div_exact(p, a), b);
  EXPECT_EQ(qc_div_exact(p, b), a);
  EXPECT_TRUE(qc_div_exact(QCharacter{}, a).is_zero());
}

TEST(QChar, DivInexactThrows) {
  QCharacter a = parse_qchar("1_0 + 1_2^-1");
  QCharacter b = parse_qchar("2_1 + 2_3^-1 1_2 + 1_4^-1");
  QCharacter p = qc_mul(a, b);
  p.add_term(M("1_0 2_1"), 1);
  EXPECT_THROW(qc_div_exact(p, a), InexactDivision);
  QCharacter c = parse_qchar("1_0 + 5");
  EXPECT_THROW(qc_div_exact(c, parse_qchar("1_0 + 3")), InexactDivision);
}

TEST(QChar, DominantTerms) {
  QCharacter c = parse_qchar("1_0 2_1 + 2_1 + 1_0 1_2^-1 + 3*1_4^-1");
  auto dom = dominant_terms(c);
  ASSERT_EQ(dom.size(), 2u);
  EXPECT_EQ(dom[0].first, M("1_0 2_1"));
  EXPECT_EQ(dom[1].first, M("2_1"));
}

TEST(QChar, RestrictClassical) {
  QCharacter c = parse_qchar("1_0 1_4 + 1_2^2 + 2_1^-1 1_0");
  auto cl = restrict_classical(c, 2);
  ClassicalMonomial w1{0, 2, 0}, w2{0, 1, -1};
  EXPECT_EQ(cl.t.at(w1), 2);
  EXPECT_EQ(cl.t.at(w2), 1);
  EXPECT_EQ(cl.t.size(), 2u);
}

TEST(QChar, TsaReport) {
  QCharacter c = parse_qchar("1_0 + 1_2^-1");
  auto r = tsa_report(c);
  EXPECT_TRUE(r.thin);
  EXPECT_TRUE(r.special);
  EXPECT_TRUE(r.anti_special);
  c.add_term(M("2_5"), 2);
  r = tsa_report(c);
  EXPECT_FALSE(r.thin);
  EXPECT_FALSE(r.special);
  EXPECT_EQ(r.n_dominant, 2u);
}

TEST(QChar, TextAndJsonRoundTrip) {
  QCharacter c = parse_qchar("2*1_0 2_3^-1 + 1_1 + -4*2_2 + 7");
  EXPECT_EQ(parse_qchar(format_qchar(c)), c);
  EXPECT_EQ(qchar_from_json(qchar_to_json(c)), c);
  EXPECT_EQ(format_qchar(QCharacter{}), "0");
  EXPECT_TRUE(parse_qchar("0").is_zero());
}

}  // namespace
