#pragma once

#include <algorithm>
#include <span>
#include <string>

#include "menuopt/domain.hpp"
#include "menuopt/errors.hpp"

namespace menuopt::analytics {

enum class SensoryDimension {
  greasiness,
  juiciness,
  meatiness,
  sweetness,
  saltiness,
  overall_satisfaction,
  purchase_intent,
};

inline std::string to_string(SensoryDimension d) {
  switch (d) {
    case SensoryDimension::greasiness: return "greasiness";
    case SensoryDimension::juiciness: return "juiciness";
    case SensoryDimension::meatiness: return "meatiness";
    case SensoryDimension::sweetness: return "sweetness";
    case SensoryDimension::saltiness: return "saltiness";
    case SensoryDimension::overall_satisfaction: return "overall satisfaction";
    case SensoryDimension::purchase_intent: return "purchase intent";
  }
  return "unknown";
}

inline SensoryDimension parse_sensory_dimension(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(SensoryDimension::purchase_intent); ++i) {
    const auto d = static_cast<SensoryDimension>(i);
    auto name = to_string(d);
    if (s == name) return d;
    std::replace(name.begin(), name.end(), ' ', '_');
    if (s == name) return d;
  }
  throw ArgumentError("unknown sensory dimension '" + std::string(s) + "'");
}

enum class Winner { a, b };

struct Densities {
  double fat = 0.0;
  double protein = 0.0;
  double sugar = 0.0;
  double sodium = 0.0;
};

/// Nutrient amount per gram of serving.
inline Densities densities(const NutritionFacts& f) {
  return {f.fat_g / f.serving_size_g, f.protein_g / f.serving_size_g,
          f.sugar_g / f.serving_size_g, f.sodium_mg / f.serving_size_g};
}

/// Rule baseline for one sensory dimension. The composite dimensions use the
/// mean of fat and sodium density, each divided by its maximum over
/// `population` (a and b are always included). Exact ties go to a.
inline Winner nutrition_rank(SensoryDimension dim, const NutritionFacts& a,
                             const NutritionFacts& b,
                             std::span<const NutritionFacts> population = {}) {
  const auto da = densities(a), db = densities(b);
  double va = 0.0, vb = 0.0;
  switch (dim) {
    case SensoryDimension::greasiness:
    case SensoryDimension::juiciness:
      va = da.fat, vb = db.fat;
      break;
    case SensoryDimension::meatiness:
      va = da.protein, vb = db.protein;
      break;
    case SensoryDimension::sweetness:
      va = da.sugar, vb = db.sugar;
      break;
    case SensoryDimension::saltiness:
      va = da.sodium, vb = db.sodium;
      break;
    case SensoryDimension::overall_satisfaction:
    case SensoryDimension::purchase_intent: {
      if (population.empty()) {
        throw ArgumentError("composite dimensions need a normalization population");
      }
      double max_fat = std::max(da.fat, db.fat);
      double max_sodium = std::max(da.sodium, db.sodium);
      for (const auto& f : population) {
        const auto d = densities(f);
        max_fat = std::max(max_fat, d.fat);
        max_sodium = std::max(max_sodium, d.sodium);
      }
      auto score = [&](const Densities& d) {
        const double f = max_fat > 0.0 ? d.fat / max_fat : 0.0;
        const double s = max_sodium > 0.0 ? d.sodium / max_sodium : 0.0;
        return (f + s) / 2.0;
      };
      va = score(da), vb = score(db);
      break;
    }
  }
  return vb > va ? Winner::b : Winner::a;
}

}  // namespace menuopt::analytics
