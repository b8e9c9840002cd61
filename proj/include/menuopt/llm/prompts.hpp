#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "menuopt/errors.hpp"

namespace menuopt::llm {

enum class TemplateName {
  generate_recipes,
  rate_recipes,
  direct_revision,
  sensory_pairwise,
  recipe_pairwise,
  experimental_design,
  style_standardization,
};

inline std::string to_string(TemplateName t) {
  switch (t) {
    case TemplateName::generate_recipes: return "generate_recipes";
    case TemplateName::rate_recipes: return "rate_recipes";
    case TemplateName::direct_revision: return "direct_revision";
    case TemplateName::sensory_pairwise: return "sensory_pairwise";
    case TemplateName::recipe_pairwise: return "recipe_pairwise";
    case TemplateName::experimental_design: return "experimental_design";
    case TemplateName::style_standardization: return "style_standardization";
  }
  return "unknown";
}

namespace templates {

inline constexpr std::string_view generate_recipes =
R"(You are a brilliant chef experienced at creating sustainable and delicious food. Here is a menu: <original menu>
Please generate (<k>) new, delicious, and diverse vegan or vegetarian dishes from this set of ingredients. You are also allowed to use tofu, lentils, mushrooms, chickpeas, eggs, and cheese.
Patrons will be American omnivores.
Please output in same format as this example:
Tofu curry ramen
Fried tofu, noodles, curry broth, pak choi, pickled onions.
Appealing description.
The ingredients must be in order of usage, i.e the main ingredient must come first.
Very important: you must only use ingredients in the original menu or the list above. For every ingredient, there must be an exact match in the original menu or the list above.
Do not worsen CO2 emissions, cost, nutrition, or preparation time. Emissions will be computed based on the main (first) ingredient.
Do not include any stars, asterisks, hashtags, underscores. Do not number the recipes. Do not include any text other than recipe information, e.g. do not say 'Here are the recipes'.)";

inline constexpr std::string_view rate_recipes =
R"(Here are <r> recipes. Please rate them on a scale of 1-10 based on standard American omnivore taste preferences, 1 being unappealing and 10 being appealing. Output only a comma-separated list of <r> numbers, from 1 to 10.
<recipes>)";

inline constexpr std::string_view direct_revision =
R"(You are a brilliant chef experienced at creating sustainable and delicious food.
Here is a menu: <original menu>
Please generate a revised menu, with the same number of recipes (<n>) and no new ingredients other than tofu, lentils, mushrooms, chickpeas, eggs, and cheese.
Design the menu to achieve at least a 75% CO2 emissions reduction in people's choices while maintaining or improving patron satisfaction with their set of choices.
Patrons will be American omnivores. Emissions will be computed based on the main (first) ingredient.
Please output each recipe in same format as this example:
Tofu curry ramen
Fried tofu, noodles, curry broth, pak choi, pickled onions.
Appealing description.
The ingredients must be in order of usage, i.e the main ingredient must come first.
Very important: you must only use ingredients in the original menu or the list above. For every ingredient, there must be an exact match in the original menu or the list above.
Do not worsen cost, nutrition, animal welfare (number of animals used, computed based on the first ingredient), or preparation time.
Do not include any stars, asterisks, hashtags, underscores. Do not number the recipes. Do not include any text other than recipe information, e.g. do not say 'Here are the recipes'.)";

inline constexpr std::string_view sensory_pairwise =
R"(You are an expert plant-based meat food scientist. Here are the ingredient lists of two <category> products.
Product 1: <ingredient list 1>
Product 2: <ingredient list 2>
Additionally, here are the nutrition facts for product 1: <nutrition facts 1>.
And here are the nutrition facts for product 2: <nutrition facts 2>.
Now, suppose that a group of 100 omnivores eats both products in a blind taste test. Which do you predict would be ranked higher on the dimension of <dimension>? Please output a single character, either 1 or 2 on the first line.)";

inline constexpr std::string_view recipe_pairwise =
R"(You are an expert online recipe writer. Which online recipe would people prefer, recipe 1 or recipe 2?

Output a number only (1 or 2). You must choose one. If unsure, provide your best guess.

Recipe 1: <recipe text 1>

Recipe 2: <recipe text 2>

Answer:)";

inline constexpr std::string_view experimental_design =
R"(You are an expert plant-based meat food scientist. You have devised a <category> product with the following ingredient list: <ingredient list>.
Additionally, it has the following nutritional information: <nutrition facts>.
You ran a blind taste test of American omnivores and received the following quantitative feedback on your product: <quantitative feedback>.
Additionally, you received the following qualitative feedback about what people liked: <positive feedback>.
You also received the following qualitative feedback about what people disliked: <negative feedback>.
What changes would you consider making to your product? Could you design a set of experiments on the key areas that need improvement? You will be evaluated on metrics including accuracy and specificity.)";

inline constexpr std::string_view style_standardization =
R"(You are a writing assistant specializing in editing writing produced by food scientists. I will give you some text to edit.
Instructions:
1. Convert all suggestions to a numbered list, with a title for each suggestion. Do not include any content that is not part of the numbered list.
2. Do not change the length.
3. Remove any references to the author’s personal experience or to other writing.
4. Rewrite it as if it could have come from either a human or LLM.
5. Use complete sentences.
6. Do not add any prefix like 'Here is the edited text'. Just output the edited text.
7. Do not add or remove any of the meaning, unless necessary for following instruction #3.
8. Do not use asterisks.
Here is the text:
<original text>)";

}  // namespace templates

/// Committed prompt text with `<name>` placeholders.
class PromptTemplate {
 public:
  PromptTemplate(TemplateName name, std::string_view body)
      : name_(name), body_(body) {
    for (const auto& seg : segments()) {
      if (seg.placeholder) placeholders_.insert(seg.text);
    }
  }

  TemplateName name() const { return name_; }
  std::string_view body() const { return body_; }
  const std::set<std::string>& placeholders() const { return placeholders_; }

  /// Substitutes every placeholder in one pass; bound text is never
  /// re-scanned.
  std::string render(const std::map<std::string, std::string>& bindings) const {
    for (const auto& p : placeholders_) {
      if (!bindings.contains(p)) {
        throw ArgumentError(to_string(name_) + ": missing binding <" + p + ">");
      }
    }
    for (const auto& [key, value] : bindings) {
      if (!placeholders_.contains(key)) {
        throw ArgumentError(to_string(name_) + ": unknown placeholder <" + key +
                            ">");
      }
    }
    std::string out;
    for (const auto& seg : segments()) {
      out += seg.placeholder ? bindings.at(seg.text) : seg.text;
    }
    return out;
  }

 private:
  struct Segment {
    std::string text;
    bool placeholder = false;
  };

  // A placeholder is '<' + lowercase words and digits + '>'.
  std::vector<Segment> segments() const {
    std::vector<Segment> out;
    std::string literal;
    std::size_t i = 0;
    while (i < body_.size()) {
      if (body_[i] == '<') {
        const auto close = body_.find('>', i + 1);
        if (close != std::string_view::npos && close > i + 1) {
          const auto name = body_.substr(i + 1, close - i - 1);
          bool ok = true;
          for (char c : name) {
            ok = ok && ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                        c == ' ');
          }
          if (ok) {
            if (!literal.empty()) out.push_back({std::move(literal), false});
            literal.clear();
            out.push_back({std::string(name), true});
            i = close + 1;
            continue;
          }
        }
      }
      literal.push_back(body_[i++]);
    }
    if (!literal.empty()) out.push_back({std::move(literal), false});
    return out;
  }

  TemplateName name_;
  std::string_view body_;
  std::set<std::string> placeholders_;
};

inline PromptTemplate prompt(TemplateName name) {
  switch (name) {
    case TemplateName::generate_recipes:
      return {name, templates::generate_recipes};
    case TemplateName::rate_recipes:
      return {name, templates::rate_recipes};
    case TemplateName::direct_revision:
      return {name, templates::direct_revision};
    case TemplateName::sensory_pairwise:
      return {name, templates::sensory_pairwise};
    case TemplateName::recipe_pairwise:
      return {name, templates::recipe_pairwise};
    case TemplateName::experimental_design:
      return {name, templates::experimental_design};
    case TemplateName::style_standardization:
      return {name, templates::style_standardization};
  }
  throw ArgumentError("unknown template");
}

inline std::string render(TemplateName name,
                          const std::map<std::string, std::string>& bindings) {
  return prompt(name).render(bindings);
}

}  // namespace menuopt::llm
