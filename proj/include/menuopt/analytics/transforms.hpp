#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "menuopt/domain.hpp"
#include "menuopt/errors.hpp"
#include "menuopt/text.hpp"

namespace menuopt::analytics {

enum class MenuTransform { remove_beef, vegetarian_subset, vegetarian_first, beef_to_chicken };

inline std::string to_string(MenuTransform t) {
  switch (t) {
    case MenuTransform::remove_beef: return "remove_beef";
    case MenuTransform::vegetarian_subset: return "vegetarian_subset";
    case MenuTransform::vegetarian_first: return "vegetarian_first";
    case MenuTransform::beef_to_chicken: return "beef_to_chicken";
  }
  return "unknown";
}

inline MenuTransform parse_menu_transform(std::string_view s) {
  for (auto t : {MenuTransform::remove_beef, MenuTransform::vegetarian_subset,
                 MenuTransform::vegetarian_first, MenuTransform::beef_to_chicken}) {
    if (s == to_string(t)) return t;
  }
  throw ArgumentError("unknown menu transform '" + std::string(s) + "'");
}

/// True if the main ingredient is beef or has "beef" as a word.
inline bool beef_main(const Recipe& r) {
  const auto words = text::split(r.main_ingredient(), ' ');
  return std::find(words.begin(), words.end(), "beef") != words.end();
}

inline Menu transform_menu(const Menu& menu, MenuTransform t) {
  std::vector<Recipe> out;
  switch (t) {
    case MenuTransform::remove_beef:
      for (const auto& r : menu.recipes()) {
        if (!beef_main(r)) out.push_back(r);
      }
      break;
    case MenuTransform::vegetarian_subset:
      for (const auto& r : menu.recipes()) {
        if (r.vegetarian) out.push_back(r);
      }
      break;
    case MenuTransform::vegetarian_first:
      out = menu.recipes();
      std::stable_partition(out.begin(), out.end(),
                            [](const Recipe& r) { return r.vegetarian; });
      break;
    case MenuTransform::beef_to_chicken:
      for (auto r : menu.recipes()) {
        r.title = text::replace_word(r.title, "beef", "chicken");
        for (auto& ing : r.ingredients) ing = text::replace_word(ing, "beef", "chicken");
        out.push_back(std::move(r));
      }
      break;
  }
  if (out.empty()) {
    throw ValidationError(to_string(t) + " left menu '" + menu.name() + "' empty");
  }
  return Menu(menu.name() + "_" + to_string(t), std::move(out));
}

}  // namespace menuopt::analytics
