#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "menuopt/errors.hpp"
#include "menuopt/text.hpp"

namespace menuopt {

enum class Origin { original, generated };

inline std::string to_string(Origin o) {
  return o == Origin::original ? "original" : "generated";
}

inline Origin parse_origin(std::string_view s) {
  if (s == "original") return Origin::original;
  if (s == "generated") return Origin::generated;
  throw ValidationError("unknown origin '" + std::string(s) + "'");
}

/// A menu item. The first ingredient is the main ingredient and drives
/// impact accounting.
struct Recipe {
  std::string id;
  std::string title;
  std::string description;
  std::vector<std::string> ingredients;
  Origin origin = Origin::original;
  bool vegetarian = false;
  bool vegan = false;

  const std::string& main_ingredient() const { return ingredients.front(); }

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

/// Normalizes ingredient names in place and checks the recipe invariants.
inline Recipe validated(Recipe r) {
  if (r.id.empty()) throw ValidationError("recipe with empty id");
  if (r.ingredients.empty()) {
    throw ValidationError("recipe '" + r.id + "' has no ingredients");
  }
  for (auto& ing : r.ingredients) {
    ing = text::normalize_ingredient(ing);
    if (ing.empty()) {
      throw ValidationError("recipe '" + r.id + "' has an empty ingredient");
    }
  }
  if (r.vegan && !r.vegetarian) {
    throw ValidationError("recipe '" + r.id + "' is vegan but not vegetarian");
  }
  return r;
}

/// An ordered list of recipes. Display order is significant.
class Menu {
 public:
  Menu() = default;

  Menu(std::string name, std::vector<Recipe> recipes)
      : name_(std::move(name)) {
    std::unordered_set<std::string> seen;
    recipes_.reserve(recipes.size());
    for (auto& r : recipes) {
      auto v = validated(std::move(r));
      if (!seen.insert(v.id).second) {
        throw ValidationError("duplicate recipe id '" + v.id + "'");
      }
      recipes_.push_back(std::move(v));
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<Recipe>& recipes() const { return recipes_; }
  std::size_t size() const { return recipes_.size(); }
  bool empty() const { return recipes_.empty(); }
  const Recipe& operator[](std::size_t i) const { return recipes_[i]; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    for (std::size_t i = 0; i < recipes_.size(); ++i) {
      if (recipes_[i].id == id) return i;
    }
    return std::nullopt;
  }

  bool contains(std::string_view id) const { return index_of(id).has_value(); }

  std::size_t vegetarian_count() const {
    return static_cast<std::size_t>(std::count_if(
        recipes_.begin(), recipes_.end(),
        [](const Recipe& r) { return r.vegetarian; }));
  }

  friend bool operator==(const Menu&, const Menu&) = default;

 private:
  std::string name_;
  std::vector<Recipe> recipes_;
};

/// Concatenates menus into a ground set; ids must stay unique.
inline Menu concat(std::string name, const Menu& a, const Menu& b) {
  std::vector<Recipe> all = a.recipes();
  all.insert(all.end(), b.recipes().begin(), b.recipes().end());
  return Menu(std::move(name), std::move(all));
}

enum class ImpactDimension { emissions, animals };

inline std::string to_string(ImpactDimension d) {
  return d == ImpactDimension::emissions ? "emissions" : "animals";
}

struct ImpactValues {
  double emissions = 0.0;  // kg CO2eq per kg
  double animals = 0.0;    // animals per kg

  double get(ImpactDimension d) const {
    return d == ImpactDimension::emissions ? emissions : animals;
  }

  friend bool operator==(const ImpactValues&, const ImpactValues&) = default;
};

/// Per-ingredient impacts plus an imputation map resolved at lookup time.
class ImpactTable {
 public:
  ImpactTable() = default;

  ImpactTable(std::map<std::string, ImpactValues> entries,
              std::map<std::string, std::string> imputations) {
    for (auto& [name, v] : entries) {
      if (!(v.emissions >= 0.0) || !(v.animals >= 0.0)) {
        throw ValidationError("negative impact for ingredient '" + name + "'");
      }
      entries_[text::normalize_ingredient(name)] = v;
    }
    for (auto& [name, donor] : imputations) {
      auto key = text::normalize_ingredient(name);
      auto d = text::normalize_ingredient(donor);
      if (!entries_.contains(d)) {
        throw ValidationError("imputation donor '" + d + "' for '" + key +
                              "' is not in the impact table");
      }
      imputations_[key] = d;
    }
  }

  std::optional<ImpactValues> find(std::string_view ingredient) const {
    const auto key = text::normalize_ingredient(ingredient);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    if (auto it = imputations_.find(key); it != imputations_.end()) {
      return entries_.at(it->second);
    }
    return std::nullopt;
  }

  /// Unknown ingredients are an error, never a silent zero.
  ImpactValues lookup(std::string_view ingredient) const {
    if (auto v = find(ingredient)) return *v;
    throw ValidationError("no impact data for ingredient '" +
                          std::string(ingredient) + "'");
  }

  const std::map<std::string, ImpactValues>& entries() const { return entries_; }
  const std::map<std::string, std::string>& imputations() const {
    return imputations_;
  }

 private:
  std::map<std::string, ImpactValues> entries_;
  std::map<std::string, std::string> imputations_;
};

struct NutritionFacts {
  std::string product_id;
  double serving_size_g = 1.0;
  double fat_g = 0.0;
  double protein_g = 0.0;
  double sugar_g = 0.0;
  double sodium_mg = 0.0;

  static NutritionFacts make(std::string id, double serving, double fat,
                             double protein, double sugar, double sodium) {
    if (!(serving > 0.0)) {
      throw ValidationError("serving size must be positive for '" + id + "'");
    }
    if (!(fat >= 0.0) || !(protein >= 0.0) || !(sugar >= 0.0) ||
        !(sodium >= 0.0)) {
      throw ValidationError("negative nutrient amount for '" + id + "'");
    }
    return {std::move(id), serving, fat, protein, sugar, sodium};
  }
};

/// Ratings on the 1-10 scale keyed by recipe id.
class ScoreVector {
 public:
  ScoreVector() = default;

  explicit ScoreVector(std::map<std::string, double> ratings)
      : ratings_(std::move(ratings)) {
    for (const auto& [id, r] : ratings_) {
      if (!(r >= 1.0 && r <= 10.0)) {
        throw ValidationError("rating for '" + id + "' outside [1,10]: " +
                              std::to_string(r));
      }
    }
  }

  double rating(std::string_view id) const {
    auto it = ratings_.find(std::string(id));
    if (it == ratings_.end()) {
      throw ValidationError("no score for recipe '" + std::string(id) + "'");
    }
    return it->second;
  }

  /// rating / 10, in [0.1, 1.0].
  double normalized(std::string_view id) const { return rating(id) / 10.0; }

  bool contains(std::string_view id) const {
    return ratings_.contains(std::string(id));
  }
  std::size_t size() const { return ratings_.size(); }
  const std::map<std::string, double>& ratings() const { return ratings_; }

  /// Normalized scores aligned with the menu order.
  std::vector<double> normalized_for(const Menu& menu) const {
    std::vector<double> out;
    out.reserve(menu.size());
    for (const auto& r : menu.recipes()) out.push_back(normalized(r.id));
    return out;
  }

 private:
  std::map<std::string, double> ratings_;
};

struct ChoiceRecord {
  std::string participant_id;
  std::string menu;
  std::string recipe_id;
};

/// Recorded dish choices. Every recipe id must exist in its named menu.
class ChoiceLog {
 public:
  ChoiceLog(std::vector<ChoiceRecord> records,
            const std::map<std::string, Menu>& menus)
      : records_(std::move(records)) {
    for (const auto& rec : records_) {
      auto it = menus.find(rec.menu);
      if (it == menus.end()) {
        throw ValidationError("choice references unknown menu '" + rec.menu +
                              "'");
      }
      if (!it->second.contains(rec.recipe_id)) {
        throw ValidationError("choice references recipe '" + rec.recipe_id +
                              "' not on menu '" + rec.menu + "'");
      }
    }
  }

  const std::vector<ChoiceRecord>& records() const { return records_; }

  /// Order counts per recipe id for one menu. Recipes never chosen count 0.
  std::map<std::string, std::size_t> order_counts(const Menu& menu) const {
    std::map<std::string, std::size_t> counts;
    for (const auto& r : menu.recipes()) counts[r.id] = 0;
    for (const auto& rec : records_) {
      if (rec.menu == menu.name()) ++counts[rec.recipe_id];
    }
    return counts;
  }

 private:
  std::vector<ChoiceRecord> records_;
};

/// Meat and animal-product vocabulary used to flag corpora lacking labels.
struct Lexicon {
  std::set<std::string> meat;
  std::set<std::string> animal_products;  // non-meat, not vegan
};

namespace detail {
inline bool matches_lexicon(const std::string& ingredient,
                            const std::set<std::string>& terms) {
  if (terms.contains(ingredient)) return true;
  for (const auto& word : text::split(ingredient, ' ')) {
    if (terms.contains(word)) return true;
  }
  return false;
}
}  // namespace detail

/// True iff no ingredient (or word of an ingredient) is in the meat lexicon.
inline bool classify_vegetarian(const Recipe& recipe,
                                const std::set<std::string>& meat_lexicon) {
  if (meat_lexicon.empty()) throw ArgumentError("meat lexicon is empty");
  return std::none_of(recipe.ingredients.begin(), recipe.ingredients.end(),
                      [&](const std::string& ing) {
                        return detail::matches_lexicon(
                            text::normalize_ingredient(ing), meat_lexicon);
                      });
}

inline bool classify_vegan(const Recipe& recipe, const Lexicon& lexicon) {
  if (!classify_vegetarian(recipe, lexicon.meat)) return false;
  return std::none_of(recipe.ingredients.begin(), recipe.ingredients.end(),
                      [&](const std::string& ing) {
                        auto n = text::normalize_ingredient(ing);
                        if (n.starts_with("vegan ")) return false;
                        return detail::matches_lexicon(n,
                                                       lexicon.animal_products);
                      });
}

}  // namespace menuopt
