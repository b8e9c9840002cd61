#include <gtest/gtest.h>

#include "menuopt/io.hpp"
#include "menuopt/llm/generation.hpp"

using namespace menuopt;
using namespace menuopt::llm;

namespace {

const char* kTwo =
    "Tofu curry ramen\n"
    "Fried tofu, ramen noodles, curry paste, spring onions.\n"
    "Crispy tofu in a curry broth.\n"
    "\n"
    "Lentil shepherd's pie\n"
    "Lentils, potatoes, carrots.\n"
    "Comforting and hearty.\n";

std::map<std::string, std::string> bindings() {
  return {{"original menu", "menu text"}, {"k", "2"}};
}

DraftValidator accept_all() {
  return [](const std::vector<RecipeDraft>&) { return std::vector<std::string>{}; };
}

}  // namespace

TEST(ParseRecipes, TwoBlocks) {
  const auto d = parse_recipes(kTwo);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].title, "Tofu curry ramen");
  EXPECT_EQ(d[0].ingredients.front(), "fried tofu");
  EXPECT_EQ(d[0].ingredients.back(), "spring onions");
  EXPECT_EQ(d[0].description, "Crispy tofu in a curry broth.");
  EXPECT_EQ(d[1].ingredients, (std::vector<std::string>{"lentils", "potatoes", "carrots"}));
}

TEST(ParseRecipes, ForbiddenFormatting) {
  EXPECT_THROW(parse_recipes("**Tofu**\ntofu.\ndesc"), ParseError);
  EXPECT_THROW(parse_recipes("# Tofu\ntofu.\ndesc"), ParseError);
}

TEST(ParseRecipes, WrongBlockShape) {
  EXPECT_THROW(parse_recipes("Tofu\ntofu."), ParseError);
  EXPECT_THROW(parse_recipes("Tofu\n.\ndesc"), ParseError);
}

TEST(ParseRecipes, FormatRoundTrip) {
  const auto d = parse_recipes(kTwo);
  EXPECT_EQ(parse_recipes(format_recipes(d)), d);
}

TEST(Whitelist, FlagsUnknownIngredient) {
  const auto menu = io::load_menu(io::data_dir() / "original_menu.json");
  const auto w = generation_whitelist(menu);
  EXPECT_TRUE(w.contains("tofu"));
  EXPECT_TRUE(w.contains("beef"));
  const auto v = validate_ingredients(parse_recipes(kTwo), w);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().title, "Tofu curry ramen");
  EXPECT_EQ(v.front().ingredient, "fried tofu");
}

TEST(Whitelist, BundledGeneratedRecipesComply) {
  const auto menu = io::load_menu(io::data_dir() / "original_menu.json");
  const auto gen = io::load_menu(io::data_dir() / "generated_recipes.json");
  std::vector<RecipeDraft> drafts;
  for (const auto& r : gen.recipes()) drafts.push_back({r.title, r.ingredients, r.description});
  EXPECT_TRUE(validate_ingredients(drafts, generation_whitelist(menu)).empty());
}

TEST(GenerateWithRetries, ValidFirstTime) {
  FunctionChatClient c([](const ChatRequest&, std::size_t) { return std::string(kTwo); });
  const auto d = generate_with_retries(c, bindings(), accept_all(), 2);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(c.calls(), 1u);
  EXPECT_NE(c.requests()[0].messages[0].content.find("(2) new"), std::string::npos);
}

TEST(GenerateWithRetries, ValidOnFifthAttempt) {
  FunctionChatClient c([](const ChatRequest&, std::size_t i) {
    return i < 4 ? std::string("**bad**") : std::string(kTwo);
  });
  const auto d = generate_with_retries(c, bindings(), accept_all(), 2);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(c.calls(), 5u);
  const auto last = c.requests().back().messages;
  ASSERT_EQ(last.size(), 9u);
  EXPECT_EQ(last[1].role, "assistant");
  EXPECT_EQ(last[2].role, "user");
  EXPECT_NE(last[2].content.find("- response contains forbidden"), std::string::npos);
}

TEST(GenerateWithRetries, GivesUpAfterMaxAttempts) {
  FunctionChatClient c([](const ChatRequest&, std::size_t) { return std::string(kTwo); });
  const auto strict = whitelist_validator({"lentils", "potatoes", "carrots"});
  try {
    generate_with_retries(c, bindings(), strict, 2);
    FAIL();
  } catch (const GenerationError& e) {
    EXPECT_EQ(e.attempts().size(), 5u);
    EXPECT_NE(e.attempts()[0][0].find("fried tofu"), std::string::npos);
  }
  EXPECT_EQ(c.calls(), 5u);
}

TEST(GenerateWithRetries, CountMismatchIsAProblem) {
  FunctionChatClient c([](const ChatRequest&, std::size_t) { return std::string(kTwo); });
  GenerationSettings s;
  s.max_attempts = 2;
  EXPECT_THROW(generate_with_retries(c, bindings(), accept_all(), 3, s), GenerationError);
  EXPECT_EQ(c.calls(), 2u);
}

TEST(DraftsToRecipes, AssignsIdsAndFlags) {
  const auto lex = io::load_lexicon(io::data_dir() / "meat_lexicon.txt");
  const std::vector<RecipeDraft> d{{"Eggs on toast", {"eggs", "bread"}, "x"},
                                   {"Bean stew", {"beans", "tomatoes"}, "y"},
                                   {"Ham sandwich", {"ham", "bread"}, "z"}};
  const auto r = drafts_to_recipes(d, lex);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].id, "g01");
  EXPECT_EQ(r[2].id, "g03");
  EXPECT_TRUE(r[0].vegetarian);
  EXPECT_FALSE(r[0].vegan);
  EXPECT_TRUE(r[1].vegan);
  EXPECT_FALSE(r[2].vegetarian);
  EXPECT_EQ(r[1].origin, Origin::generated);
}
