#include <gtest/gtest.h>

#include "gorth/labels.hpp"

using namespace gorth;

TEST(ParseLabel, SpecExamples) {
  EXPECT_EQ(parse_label("S:tau"), Classification{});
  Classification c = parse_label("S:single[s=3,eps=-,a2=9]");
  EXPECT_EQ(c.special, SpecialLabel(SingleChain{3, -1, 9}));
  EXPECT_TRUE(c.types.empty());
  EXPECT_THROW(parse_label("S:single[s=2,eps=+,a2=1]"), LabelSemanticError);
}

TEST(ParseLabel, RoundTripsCanonicalStrings) {
  for (const char* s : {"S:tau", "S:double[s=7] + T:pair[k=3] + T:pair[k=5]",
                        "S:single[s=5,eps=+,a2=1/9] + T:even[k=0,+] + T:even[k=0,-] + T:even[k=4,-]",
                        "S:tau + T:even[k=2,+] + U:[dim=2, charpoly=[1,0,-4], sig=(1,1)]"})
    EXPECT_EQ(canonical_string(parse_label(s)), s);
}

TEST(ParseLabel, SortsTypes) {
  EXPECT_EQ(canonical_string(parse_label("S:tau + T:pair[k=1] + T:even[k=0,-] + T:even[k=0,+]")),
            "S:tau + T:even[k=0,+] + T:even[k=0,-] + T:pair[k=1]");
}

TEST(ParseLabel, ReducesRationals) {
  EXPECT_EQ(canonical_string(parse_label("S:single[s=1,eps=+,a2=2/8]")), "S:single[s=1,eps=+,a2=1/4]");
}

TEST(ParseLabel, SyntaxErrorsCarryPosition) {
  auto pos = [](const char* s) -> std::size_t {
    try {
      parse_label(s);
    } catch (const LabelSyntaxError& e) {
      return e.position();
    }
    return 999;
  };
  EXPECT_EQ(pos("X:tau"), 0u);
  EXPECT_EQ(pos("S:taux"), 5u);
  EXPECT_EQ(pos("S:double[s=]"), 11u);
  EXPECT_EQ(pos("S:tau+T:even[k=0,+]"), 5u);
  EXPECT_EQ(pos("S:tau + T:even[k=0,*]"), 19u);
  EXPECT_EQ(pos("S:single[s=1,eps=+,a2=1/0]"), 22u);
}

TEST(ParseLabel, SemanticErrors) {
  EXPECT_THROW(parse_label("S:single[s=1,eps=+,a2=-1]"), LabelSemanticError);
  EXPECT_THROW(parse_label("S:single[s=1,eps=+,a2=0]"), LabelSemanticError);
  EXPECT_THROW(parse_label("S:double[s=0]"), LabelSemanticError);
  EXPECT_THROW(parse_label("S:tau + T:even[k=1,+]"), LabelSemanticError);
  EXPECT_THROW(parse_label("S:tau + T:pair[k=2]"), LabelSemanticError);
  EXPECT_THROW(parse_label("S:tau + U:[dim=2, charpoly=[1,0], sig=(1,1)]"), LabelSemanticError);
  EXPECT_THROW(parse_label("S:tau + U:[dim=2, charpoly=[1,0,-4], sig=(2,1)]"), LabelSemanticError);
}

TEST(Labels, Dimensions) {
  EXPECT_EQ(dim_of(Tau{}), 1u);
  EXPECT_EQ(dim_of(SingleChain{5, 1, 1}), 6u);
  EXPECT_EQ(dim_of(DoubleChain{3}), 7u);
  EXPECT_EQ(TypeLabel::even(4, -1).dim(), 5u);
  EXPECT_EQ(TypeLabel::pair(3).dim(), 8u);
  EXPECT_EQ(parse_label("S:double[s=3] + T:pair[k=1] + T:even[k=2,+]").dim(), 14u);
}
