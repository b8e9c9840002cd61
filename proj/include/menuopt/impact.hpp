#pragma once

// Per-recipe impacts, the preference-weighted (Luce) choice model, expected
// impacts and their linearization into knapsack-style constraints.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "menuopt/domain.hpp"
#include "menuopt/errors.hpp"

namespace menuopt {

/// Indices into a ground set, ascending.
using Selection = std::vector<std::size_t>;

/// Impacts resolved from each recipe's main ingredient, in recipe order.
struct RecipeImpacts {
  std::vector<ImpactValues> values;

  std::size_t size() const { return values.size(); }

  std::vector<double> dimension(ImpactDimension d) const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.get(d));
    return out;
  }
};

inline RecipeImpacts resolve_impacts(const std::vector<Recipe>& recipes,
                                     const ImpactTable& table) {
  RecipeImpacts out;
  out.values.reserve(recipes.size());
  for (const auto& r : recipes) {
    auto v = table.find(r.main_ingredient());
    if (!v) {
      throw ValidationError("recipe '" + r.id + "': no impact data for main "
                            "ingredient '" + r.main_ingredient() + "'");
    }
    out.values.push_back(*v);
  }
  return out;
}

namespace detail {
inline void check_selection(std::span<const double> scores,
                            const Selection& selection) {
  if (selection.empty()) throw ArgumentError("selection is empty");
  for (auto i : selection) {
    if (i >= scores.size()) throw ArgumentError("selection index out of range");
  }
}
}  // namespace detail

/// π_i = p̂_i / Σ_{k∈selection} p̂_k, aligned with `selection`.
inline std::vector<double> choice_distribution(std::span<const double> scores,
                                               const Selection& selection) {
  detail::check_selection(scores, selection);
  double total = 0.0;
  for (auto i : selection) total += scores[i];
  if (!(total > 0.0)) throw ArgumentError("selection has zero total score");
  std::vector<double> pi;
  pi.reserve(selection.size());
  for (auto i : selection) pi.push_back(scores[i] / total);
  return pi;
}

/// Σ π_i · l_i over the selection.
inline double expected_impact(const Selection& selection,
                              std::span<const double> scores,
                              std::span<const double> impacts) {
  if (impacts.size() != scores.size()) {
    throw ArgumentError("scores and impacts differ in length");
  }
  const auto pi = choice_distribution(scores, selection);
  double e = 0.0;
  for (std::size_t k = 0; k < selection.size(); ++k) {
    e += pi[k] * impacts[selection[k]];
  }
  return e;
}

inline double expected_impact(const Selection& selection,
                              std::span<const double> scores,
                              const RecipeImpacts& impacts,
                              ImpactDimension dimension) {
  const auto l = impacts.dimension(dimension);
  return expected_impact(selection, scores, l);
}

/// Σ a_i x_i ≤ 0 with a_i = p̂_i (l_i − T) and T = C · E[l(x_O)].
struct LinearConstraint {
  ImpactDimension dimension = ImpactDimension::emissions;
  double ratio = 1.0;      // C
  double threshold = 0.0;  // T
  std::vector<double> coefficients;
  std::vector<double> impacts;  // l_i, kept to report expectations

  double lhs(const Selection& selection) const {
    double v = 0.0;
    for (auto i : selection) v += coefficients[i];
    return v;
  }

  /// Slack −Σ a_i x_i; feasible when ≥ −tol.
  double slack(const Selection& selection) const { return -lhs(selection); }

  bool satisfied(const Selection& selection, double tol = 1e-9) const {
    return lhs(selection) <= tol;
  }
};

inline LinearConstraint linearize_constraint(std::span<const double> scores,
                                             std::span<const double> impacts,
                                             double ratio,
                                             const Selection& original,
                                             ImpactDimension dimension) {
  if (original.empty()) throw ArgumentError("original selection is empty");
  if (!(ratio >= 0.0)) throw ArgumentError("constraint ratio must be >= 0");
  LinearConstraint c;
  c.dimension = dimension;
  c.ratio = ratio;
  c.threshold = ratio * expected_impact(original, scores, impacts);
  c.impacts.assign(impacts.begin(), impacts.end());
  c.coefficients.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    c.coefficients.push_back(scores[i] * (impacts[i] - c.threshold));
  }
  return c;
}

inline LinearConstraint linearize_constraint(std::span<const double> scores,
                                             const RecipeImpacts& impacts,
                                             double ratio,
                                             const Selection& original,
                                             ImpactDimension dimension) {
  const auto l = impacts.dimension(dimension);
  return linearize_constraint(scores, l, ratio, original, dimension);
}

}  // namespace menuopt
