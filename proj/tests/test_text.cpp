#include <gtest/gtest.h>

#include "menuopt/errors.hpp"
#include "menuopt/text.hpp"

using namespace menuopt;

TEST(Utf8, RoundTripsMultibyte) {
  const std::string s = "béchamel ★ 日本";
  const auto cps = text::decode_utf8(s);
  EXPECT_EQ(cps.size(), 13u);
  EXPECT_EQ(text::encode_utf8(cps), s);
}

TEST(Utf8, RejectsTruncatedSequence) {
  EXPECT_THROW(text::decode_utf8("\xC3"), ParseError);
  EXPECT_THROW(text::decode_utf8("\xE2\x98"), ParseError);
  EXPECT_THROW(text::decode_utf8("\xFF"), ParseError);
}

TEST(Text, LowercasesLatin1) {
  EXPECT_EQ(text::to_lower("Crème BRÛLÉE"), "crème brûlée");
  EXPECT_EQ(text::to_lower("\xC5\xB8"), "\xC3\xBF");
}

TEST(Text, NormalizeIngredient) {
  EXPECT_EQ(text::normalize_ingredient("  Goat's   Cheese \t"), "goat's cheese");
  EXPECT_EQ(text::normalize_ingredient(""), "");
}

TEST(Text, SplitKeepsEmptyFields) {
  const auto parts = text::split("a,,b", ',');
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[1], "");
}

TEST(Text, SplitLinesStripsCarriageReturns) {
  const auto lines = text::split_lines("a\r\nb\n");
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines[0], "a");
  EXPECT_EQ(lines[1], "b");
}

TEST(Text, Fnv1aKnownValues) {
  EXPECT_EQ(text::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(text::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(text::hex64(0xabcULL), "0000000000000abc");
}

TEST(Text, ReplaceWordIsWholeWord) {
  EXPECT_EQ(text::replace_word("Beef Angus Burger", "beef", "chicken"),
            "Chicken Angus Burger");
  EXPECT_EQ(text::replace_word("beef dripping", "beef", "chicken"),
            "chicken dripping");
  EXPECT_EQ(text::replace_word("beefy", "beef", "chicken"), "beefy");
}

TEST(Text, LineOfOffset) {
  EXPECT_EQ(text::line_of_offset("a\nb\nc", 0), 1u);
  EXPECT_EQ(text::line_of_offset("a\nb\nc", 4), 3u);
}
