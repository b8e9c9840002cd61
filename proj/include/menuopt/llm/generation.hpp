#pragma once

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "menuopt/domain.hpp"
#include "menuopt/errors.hpp"
#include "menuopt/llm/chat.hpp"
#include "menuopt/llm/prompts.hpp"
#include "menuopt/text.hpp"

namespace menuopt::llm {

struct RecipeDraft {
  std::string title;
  std::vector<std::string> ingredients;
  std::string description;

  friend bool operator==(const RecipeDraft&, const RecipeDraft&) = default;
};

/// Blank-line separated blocks of title, ingredient line, description.
/// Formatting characters the prompt forbids are rejected.
inline std::vector<RecipeDraft> parse_recipes(std::string_view response) {
  for (std::string_view bad : {"*", "#", "_", "★"}) {
    if (response.find(bad) != std::string_view::npos) {
      throw ParseError("response contains forbidden formatting character '" +
                       std::string(bad) + "'");
    }
  }
  std::vector<RecipeDraft> drafts;
  std::vector<std::string> block;
  auto flush = [&] {
    if (block.empty()) return;
    if (block.size() != 3) {
      throw ParseError("recipe block starting '" + block.front() + "' has " +
                       std::to_string(block.size()) + " lines, expected 3");
    }
    RecipeDraft d;
    d.title = block[0];
    std::string_view line = block[1];
    if (!line.empty() && line.back() == '.') line.remove_suffix(1);
    for (const auto& part : text::split(line, ',')) {
      auto ing = text::normalize_ingredient(part);
      if (!ing.empty()) d.ingredients.push_back(std::move(ing));
    }
    if (d.ingredients.empty()) {
      throw ParseError("recipe '" + d.title + "' has an empty ingredient list");
    }
    d.description = block[2];
    drafts.push_back(std::move(d));
    block.clear();
  };
  for (const auto& raw : text::split_lines(response)) {
    const auto line = text::trim(raw);
    if (line.empty()) {
      flush();
    } else {
      block.emplace_back(line);
    }
  }
  flush();
  return drafts;
}

struct IngredientViolation {
  std::string title;
  std::string ingredient;

  friend bool operator==(const IngredientViolation&,
                         const IngredientViolation&) = default;
};

inline const std::vector<std::string>& allowed_additions() {
  static const std::vector<std::string> v{"tofu", "lentils", "mushrooms",
                                          "chickpeas", "eggs", "cheese"};
  return v;
}

/// Original-menu ingredients plus the six permitted additions.
inline std::set<std::string> generation_whitelist(const Menu& original) {
  std::set<std::string> w(allowed_additions().begin(), allowed_additions().end());
  for (const auto& r : original.recipes()) {
    w.insert(r.ingredients.begin(), r.ingredients.end());
  }
  return w;
}

/// Exact match after normalization.
inline std::vector<IngredientViolation> validate_ingredients(
    const std::vector<RecipeDraft>& drafts, const std::set<std::string>& whitelist) {
  std::set<std::string> allowed;
  for (const auto& w : whitelist) allowed.insert(text::normalize_ingredient(w));
  std::vector<IngredientViolation> out;
  for (const auto& d : drafts) {
    for (const auto& ing : d.ingredients) {
      if (!allowed.contains(text::normalize_ingredient(ing))) {
        out.push_back({d.title, ing});
      }
    }
  }
  return out;
}

/// Recipes in the format the generation prompt asks for.
inline std::string format_recipes(const std::vector<RecipeDraft>& drafts) {
  std::string out;
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += drafts[i].title + "\n" + text::join(drafts[i].ingredients, ", ") +
           ".\n" + drafts[i].description;
  }
  return out;
}

inline std::string format_menu(const Menu& menu) {
  std::vector<RecipeDraft> drafts;
  for (const auto& r : menu.recipes()) {
    drafts.push_back({r.title, r.ingredients, r.description});
  }
  return format_recipes(drafts);
}

/// All violations recorded over every attempt.
class GenerationError : public LlmError {
 public:
  GenerationError(const std::string& msg,
                  std::vector<std::vector<std::string>> attempts)
      : LlmError(msg), attempts_(std::move(attempts)) {}

  const std::vector<std::vector<std::string>>& attempts() const {
    return attempts_;
  }

 private:
  std::vector<std::vector<std::string>> attempts_;
};

using DraftValidator =
    std::function<std::vector<std::string>(const std::vector<RecipeDraft>&)>;

inline DraftValidator whitelist_validator(std::set<std::string> whitelist) {
  return [w = std::move(whitelist)](const std::vector<RecipeDraft>& drafts) {
    std::vector<std::string> out;
    for (const auto& v : validate_ingredients(drafts, w)) {
      out.push_back("recipe '" + v.title + "' uses ingredient '" + v.ingredient +
                    "', which is not in the original menu or the allowed list");
    }
    return out;
  };
}

struct GenerationSettings {
  std::string model;
  double temperature = 0.0;
  std::optional<int> max_tokens;
  std::size_t max_attempts = 5;
};

/// Sends the generation prompt and re-prompts with the violation list until
/// a response has `expected_count` well-formed drafts that pass `validator`.
inline std::vector<RecipeDraft> generate_with_retries(
    ChatClient& client, const std::map<std::string, std::string>& bindings,
    const DraftValidator& validator, std::size_t expected_count,
    const GenerationSettings& settings = {}) {
  if (settings.max_attempts < 1) throw ArgumentError("max_attempts must be >= 1");
  ChatRequest request;
  request.model = settings.model;
  request.temperature = settings.temperature;
  request.max_tokens = settings.max_tokens;
  request.messages.push_back(
      {"user", render(TemplateName::generate_recipes, bindings)});
  std::vector<std::vector<std::string>> history;
  for (std::size_t attempt = 1; attempt <= settings.max_attempts; ++attempt) {
    const auto response = client.complete(request);
    std::vector<std::string> problems;
    std::vector<RecipeDraft> drafts;
    try {
      drafts = parse_recipes(response.content);
    } catch (const ParseError& e) {
      problems.emplace_back(e.what());
    }
    if (problems.empty()) {
      if (drafts.size() != expected_count) {
        problems.push_back("expected " + std::to_string(expected_count) +
                           " recipes, got " + std::to_string(drafts.size()));
      }
      for (auto& p : validator(drafts)) problems.push_back(std::move(p));
    }
    if (problems.empty()) return drafts;
    history.push_back(problems);
    std::string feedback = "Your response had the following problems:\n";
    for (const auto& p : problems) feedback += "- " + p + "\n";
    feedback += "Please output all " + std::to_string(expected_count) +
                " recipes again with these problems fixed.";
    request.messages.push_back({"assistant", response.content});
    request.messages.push_back({"user", std::move(feedback)});
  }
  std::string msg = "generation failed after " +
                    std::to_string(settings.max_attempts) + " attempts";
  if (!history.empty() && !history.back().empty()) {
    msg += "; last problem: " + history.back().front();
  }
  throw GenerationError(msg, std::move(history));
}

/// Turns drafts into generated recipes with ids prefix01, prefix02, …
/// Diet flags are classified with the lexicon.
inline std::vector<Recipe> drafts_to_recipes(const std::vector<RecipeDraft>& drafts,
                                             const Lexicon& lexicon,
                                             const std::string& prefix = "g") {
  std::vector<Recipe> out;
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "%s%02zu", prefix.c_str(), i + 1);
    Recipe r;
    r.id = id;
    r.title = drafts[i].title;
    r.description = drafts[i].description;
    r.ingredients = drafts[i].ingredients;
    r.origin = Origin::generated;
    r.vegetarian = classify_vegetarian(r, lexicon.meat);
    r.vegan = r.vegetarian && classify_vegan(r, lexicon);
    out.push_back(validated(std::move(r)));
  }
  return out;
}

}  // namespace menuopt::llm
