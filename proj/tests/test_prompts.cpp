#include <gtest/gtest.h>

#include "menuopt/llm/prompts.hpp"

using namespace menuopt;
using namespace menuopt::llm;

namespace {

const TemplateName kAll[] = {
    TemplateName::generate_recipes,    TemplateName::rate_recipes,
    TemplateName::direct_revision,     TemplateName::sensory_pairwise,
    TemplateName::recipe_pairwise,     TemplateName::experimental_design,
    TemplateName::style_standardization};

std::map<std::string, std::string> dummy_bindings(const PromptTemplate& t) {
  std::map<std::string, std::string> b;
  for (const auto& p : t.placeholders()) b[p] = "{" + p + "}";
  return b;
}

}  // namespace

TEST(Prompts, RatePromptSubstitutesCount) {
  const auto s = render(TemplateName::rate_recipes, {{"r", "3"}, {"recipes", "a\nb\nc"}});
  EXPECT_NE(s.find("Here are 3 recipes."), std::string::npos);
  EXPECT_NE(s.find("a comma-separated list of 3 numbers"), std::string::npos);
  EXPECT_EQ(s.find("<r>"), std::string::npos);
}

TEST(Prompts, MissingBindingNamesPlaceholder) {
  try {
    render(TemplateName::rate_recipes, {{"recipes", ""}});
    FAIL();
  } catch (const ArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("<r>"), std::string::npos);
  }
}

TEST(Prompts, UnknownBindingRejected) {
  EXPECT_THROW(render(TemplateName::rate_recipes, {{"r", "1"}, {"recipes", ""}, {"x", "2"}}),
               ArgumentError);
}

TEST(Prompts, RenderIsDeterministic) {
  for (auto name : kAll) {
    const auto t = prompt(name);
    const auto b = dummy_bindings(t);
    EXPECT_EQ(t.render(b), t.render(b)) << to_string(name);
  }
}

TEST(Prompts, NoResidualPlaceholders) {
  for (auto name : kAll) {
    const auto t = prompt(name);
    const auto out = t.render(dummy_bindings(t));
    for (const auto& p : t.placeholders()) {
      EXPECT_EQ(out.find("<" + p + ">"), std::string::npos) << to_string(name);
    }
  }
}

TEST(Prompts, BoundTextIsNotRescanned) {
  const auto s = render(TemplateName::rate_recipes, {{"r", "<r>"}, {"recipes", "<recipes>"}});
  EXPECT_NE(s.find("Here are <r> recipes."), std::string::npos);
}

TEST(Prompts, PlaceholderSets) {
  using S = std::set<std::string>;
  EXPECT_EQ(prompt(TemplateName::generate_recipes).placeholders(), (S{"original menu", "k"}));
  EXPECT_EQ(prompt(TemplateName::rate_recipes).placeholders(), (S{"r", "recipes"}));
  EXPECT_EQ(prompt(TemplateName::recipe_pairwise).placeholders(),
            (S{"recipe text 1", "recipe text 2"}));
  EXPECT_EQ(prompt(TemplateName::sensory_pairwise).placeholders(),
            (S{"category", "ingredient list 1", "ingredient list 2", "nutrition facts 1",
               "nutrition facts 2", "dimension"}));
  EXPECT_TRUE(prompt(TemplateName::direct_revision).placeholders().contains("n"));
  EXPECT_TRUE(prompt(TemplateName::style_standardization).placeholders().contains(
      "original text"));
}

TEST(Prompts, NamesAreDistinct) {
  std::set<std::string> names;
  for (auto n : kAll) names.insert(to_string(n));
  EXPECT_EQ(names.size(), std::size(kAll));
}
