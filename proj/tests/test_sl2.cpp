#include <gtest/gtest.h>

#include "snakechar/sl2.hpp"
#include "snakechar/textio.hpp"

using namespace snakechar;

namespace {
YMonomial M(const std::string& s) { return parse_monomial(s); }
QCharacter Q(const std::string& s) { return parse_qchar(s); }
}  // namespace

TEST(Sl2, KrClosedForms) {
  EXPECT_EQ(kr_qchar_sl2(0, 7), QCharacter::unit());
  EXPECT_EQ(kr_qchar_sl2(1, 0), Q("1_0 + 1_2^-1"));
  EXPECT_EQ(kr_qchar_sl2(2, 1), Q("1_0 1_2 + 1_0 1_4^-1 + 1_2^-1 1_4^-1"));
  EXPECT_EQ(kr_qchar_sl2(1, -4), Q("1_-4 + 1_-2^-1"));
}

TEST(Sl2, KrTSystem) {
  // T-system instance: chi(W_1^{(0)}) chi(W_1^{(2)}) = chi(W_2^{(1)}) + 1.
  QCharacter lhs = qc_mul(kr_qchar_sl2(1, 0), kr_qchar_sl2(1, 2));
  QCharacter rhs = kr_qchar_sl2(2, 1);
  rhs += QCharacter::unit();
  EXPECT_EQ(lhs, rhs);
}

TEST(Sl2, GeneralPosition) {
  EXPECT_TRUE(in_general_position({2, 1}, {1, 5}));   // different parity
  EXPECT_FALSE(in_general_position({2, 1}, {2, 5}));  // union 0,2,4,6 is a string
  EXPECT_TRUE(in_general_position({3, 2}, {1, 2}));   // containment
  EXPECT_TRUE(in_general_position({2, 1}, {2, 7}));   // gap
  EXPECT_FALSE(in_general_position({2, 1}, {1, 4}));  // union 0,2,4
  EXPECT_TRUE(in_general_position({0, 3}, {2, 3}));
}

TEST(Sl2, DecomposeStrings) {
  auto strs = decompose_strings(M("1_0 1_2^2 1_4"));
  ASSERT_EQ(strs.size(), 2u);
  EXPECT_EQ(strs[0], (QString{3, 2}));
  EXPECT_EQ(strs[1], (QString{1, 2}));
  EXPECT_TRUE(in_general_position(strs[0], strs[1]));

  EXPECT_TRUE(decompose_strings(YMonomial::unit()).empty());
  EXPECT_THROW(decompose_strings(M("2_0")), std::invalid_argument);
  EXPECT_THROW(decompose_strings(M("1_0^-1")), std::invalid_argument);
}

TEST(Sl2, SimpleQchar) {
  EXPECT_EQ(sl2_qchar(M("1_0 1_2")), kr_qchar_sl2(2, 1));
  // Strings in general position: the simple module is the tensor product.
  EXPECT_EQ(sl2_qchar(M("1_0 1_4")), qc_mul(kr_qchar_sl2(1, 0), kr_qchar_sl2(1, 4)));
  EXPECT_EQ(sl2_qchar(YMonomial::unit()), QCharacter::unit());
}

TEST(Sl2, PhiSpinorChainB2) {
  CartanData cd = make_cartan(LieType::B, 2);
  EXPECT_EQ(phi(cd, 2, M("2_0")), Q("2_0 + 1_1 2_2^-1"));
  EXPECT_EQ(phi(cd, 1, M("1_1 2_2^-1")), Q("1_1 2_2^-1 + 2_4 1_5^-1"));
  EXPECT_EQ(phi(cd, 2, M("2_4 1_5^-1")), Q("2_4 1_5^-1 + 2_6^-1"));
  // Unit projection: phi returns the monomial itself.
  EXPECT_EQ(phi(cd, 1, M("2_0")), Q("2_0"));
  // Other-node variables ride along untouched.
  EXPECT_EQ(phi(cd, 2, M("1_3 2_0")), Q("1_3 2_0 + 1_3 1_1 2_2^-1"));
}

TEST(Sl2, PhiRejectsBadInput) {
  CartanData cd = make_cartan(LieType::B, 2);
  EXPECT_THROW(phi(cd, 1, M("1_1 1_2")), std::invalid_argument);   // mixed residues mod d=2
  EXPECT_THROW(phi(cd, 2, M("2_0^-1")), std::invalid_argument);    // not i-dominant
}

TEST(Sl2, IDecompositionSpinorB2) {
  CartanData cd = make_cartan(LieType::B, 2);
  QCharacter spinor = Q("2_0 + 1_1 2_2^-1 + 2_4 1_5^-1 + 2_6^-1");

  auto d2 = i_decomposition(cd, spinor, 2);
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_EQ(d2[0].first, M("2_0"));
  EXPECT_EQ(d2[0].second, 1);
  EXPECT_EQ(d2[1].first, M("2_4 1_5^-1"));
  EXPECT_EQ(d2[1].second, 1);

  auto d1 = i_decomposition(cd, spinor, 1);
  ASSERT_EQ(d1.size(), 3u);
  EXPECT_EQ(d1[0].first, M("2_0"));
  EXPECT_EQ(d1[1].first, M("1_1 2_2^-1"));
  EXPECT_EQ(d1[2].first, M("2_6^-1"));
}

TEST(Sl2, IDecompositionErrors) {
  CartanData cd = make_cartan(LieType::B, 2);
  QCharacter bad = Q("2_0 + 1_1 2_2^-1 + 2_4 1_5^-1 + 2_6^-1");
  bad -= qc_scale(Q("2_0"), 2);  // coefficient of the top term becomes -1
  EXPECT_THROW(i_decomposition(cd, bad, 2), NegativeMultiplicity);
  EXPECT_THROW(i_decomposition(cd, Q("1_1 2_2^-1"), 2), Mismatch);
}

TEST(Sl2, FundamentalChainA2) {
  CartanData cd = make_cartan(LieType::A, 2);
  QCharacter fund = Q("1_0 + 2_1 1_2^-1 + 2_3^-1");
  EXPECT_EQ(phi(cd, 1, M("1_0")), Q("1_0 + 2_1 1_2^-1"));
  EXPECT_EQ(phi(cd, 2, M("2_1 1_2^-1")), Q("2_1 1_2^-1 + 2_3^-1"));

  auto d1 = i_decomposition(cd, fund, 1);
  ASSERT_EQ(d1.size(), 2u);
  EXPECT_EQ(d1[0].first, M("1_0"));
  EXPECT_EQ(d1[1].first, M("2_3^-1"));

  auto d2 = i_decomposition(cd, fund, 2);
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_EQ(d2[0].first, M("1_0"));
  EXPECT_EQ(d2[1].first, M("2_1 1_2^-1"));
}
