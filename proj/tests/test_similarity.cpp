#include <gtest/gtest.h>

#include <random>

#include "menuopt/io.hpp"
#include "menuopt/similarity.hpp"

using namespace menuopt;

TEST(Gestalt, SpecExamples) {
  EXPECT_EQ(gestalt_ratio("abcd", "abcd"), 1.0);
  EXPECT_EQ(gestalt_ratio("abcd", "bcde"), 0.75);
  EXPECT_EQ(gestalt_ratio("abc", "xyz"), 0.0);
  EXPECT_EQ(gestalt_ratio("", ""), 1.0);
  EXPECT_EQ(gestalt_ratio("abc", ""), 0.0);
}

TEST(Gestalt, LongestMatchTieBreak) {
  const std::string a = "xab_ab", b = "ab_xab";
  const auto m = longest_match(a, b, 0, a.size(), 0, b.size());
  EXPECT_EQ(m.size, 3u);
  EXPECT_EQ(m.a, 0u);
  EXPECT_EQ(m.b, 3u);
  const auto tie = longest_match(std::string("abab"), std::string("ab"), 0, 4, 0, 2);
  EXPECT_EQ(tie.a, 0u);
  EXPECT_EQ(tie.b, 0u);
}

TEST(Gestalt, CountsCodePointsNotBytes) {
  EXPECT_EQ(gestalt_ratio("é", "e"), 0.0);
  EXPECT_EQ(gestalt_ratio("béchamel", "bechamel"), 14.0 / 16.0);
}

TEST(Gestalt, ReferenceCorpus) {
  const auto doc = io::parse_json(
      io::read_file(std::string(MENUOPT_FIXTURES) + "/gestalt_corpus.json"),
      "gestalt_corpus.json");
  ASSERT_GE(doc.size(), 200u);
  for (const auto& item : doc) {
    const auto a = item["a"].get<std::string>();
    const auto b = item["b"].get<std::string>();
    EXPECT_EQ(gestalt_ratio(a, b), item["ratio"].get<double>())
        << "a=" << a << " b=" << b;
  }
}

TEST(Gestalt, RangeAndIdentity) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "abcde ";
  for (int t = 0; t < 300; ++t) {
    std::string a, b;
    for (std::size_t i = rng() % 20; i > 0; --i) a += alphabet[rng() % 6];
    for (std::size_t i = rng() % 20; i > 0; --i) b += alphabet[rng() % 6];
    const double r = gestalt_ratio(a, b);
    EXPECT_GE(r, 0.0);
    EXPECT_LE(r, 1.0);
    EXPECT_EQ(gestalt_ratio(a, a), 1.0);
  }
}

TEST(Gestalt, FreshSuffixNeverDecreasesMatches) {
  std::mt19937_64 rng(11);
  const std::string alphabet = "abcxyz";
  const std::string fresh = "0123456789";
  for (int t = 0; t < 300; ++t) {
    std::string a, b;
    for (std::size_t i = rng() % 15; i > 0; --i) a += alphabet[rng() % 6];
    for (std::size_t i = rng() % 15; i > 0; --i) b += alphabet[rng() % 6];
    const std::string suffix = fresh.substr(0, 1 + rng() % 10);
    const auto before = matched_count(a, b);
    const auto after = matched_count(a + suffix, b + suffix);
    EXPECT_GE(after, before) << a << " | " << b << " | " << suffix;
    if (a.empty() || b.empty() || a.back() != b.back()) {
      EXPECT_EQ(after, before + suffix.size()) << a << " | " << b;
    }
  }
}

TEST(Gestalt, SharedSuffixCanReduceMatches) {
  const std::string a = "xbcyczaxy", b = "zybaz";
  EXPECT_EQ(matched_count(a, b), 2u);
  EXPECT_EQ(matched_count(a + "x", b + "x"), 1u);
}

TEST(Overlap, Examples) {
  EXPECT_EQ(ingredient_overlap({"tofu", "noodles", "curry"},
                               {"tofu", "rice", "curry"}),
            0.5);
  EXPECT_EQ(ingredient_overlap({"a", "b"}, {"a", "b"}), 1.0);
  EXPECT_EQ(ingredient_overlap({"a"}, {"b"}), 0.0);
  EXPECT_EQ(ingredient_overlap({"Tofu"}, {"tofu "}), 1.0);
  EXPECT_THROW(ingredient_overlap({}, {}), ArgumentError);
}

TEST(Projection, TitleAndIngredients) {
  Recipe r;
  r.title = "Tofu Curry Ramen";
  r.ingredients = {"tofu", "noodles", "curry broth"};
  EXPECT_EQ(similarity_projection(r), "tofu curry ramen; tofu, noodles, curry broth");
}

TEST(SimilarityMatrix, IdenticalProjectionsGiveOne) {
  Recipe a;
  a.id = "a";
  a.title = "Falafel";
  a.ingredients = {"chickpeas"};
  Recipe b = a;
  b.id = "b";
  b.title = "FALAFEL";
  const auto s = similarity_matrix({a, b});
  EXPECT_EQ(s(0, 1), 1.0);
  EXPECT_EQ(s(0, 0), 0.0);
}

TEST(SimilarityMatrix, EntriesMatchPairwiseRatio) {
  const auto menu = io::load_menu(io::data_dir() / "original_menu.json");
  const auto s = similarity_matrix(menu.recipes());
  ASSERT_EQ(s.size(), 36u);
  for (std::size_t i = 0; i < menu.size(); ++i) {
    EXPECT_EQ(s(i, i), 0.0);
    for (std::size_t j = 0; j < menu.size(); ++j) {
      EXPECT_EQ(s(i, j), s(j, i));
      if (i < j) {
        EXPECT_EQ(s(i, j), gestalt_ratio(similarity_projection(menu[i]),
                                         similarity_projection(menu[j])));
      }
    }
  }
}

TEST(SimilarityMatrix, RejectsSingleRecipe) {
  Recipe a;
  a.id = "a";
  a.ingredients = {"tofu"};
  EXPECT_THROW(similarity_matrix({a}), ArgumentError);
}

TEST(SimilarityMatrix, SetValidates) {
  SimilarityMatrix s(3);
  EXPECT_THROW(s.set(1, 1, 0.5), ArgumentError);
  EXPECT_THROW(s.set(0, 1, 1.5), ArgumentError);
  s.set(0, 2, 0.25);
  EXPECT_EQ(s(2, 0), 0.25);
}

TEST(SimilarityMatrix, CsvExport) {
  SimilarityMatrix s(2);
  s.set(0, 1, 0.5);
  EXPECT_EQ(s.to_csv({"a", "b"}), "a,b\n0,0.5\n0.5,0\n");
}
