#include <gtest/gtest.h>

#include <random>

#include "menuopt/impact.hpp"

using namespace menuopt;

namespace {

ImpactTable table() {
  return ImpactTable({{"tofu", {3.2, 0.0}}, {"turkey", {10.9, 0.05}}},
                     {{"duck", "turkey"}});
}

Recipe recipe(std::string id, std::vector<std::string> ingredients) {
  Recipe r;
  r.id = std::move(id);
  r.ingredients = std::move(ingredients);
  return r;
}

// Fractional form evaluated directly from the Luce weights.
double fractional(const std::vector<double>& p, const std::vector<double>& l,
                  const Selection& sel) {
  double num = 0.0, den = 0.0;
  for (auto i : sel) {
    num += p[i] * l[i];
    den += p[i];
  }
  return num / den;
}

}  // namespace

TEST(ResolveImpacts, DirectAndImputed) {
  const auto r = resolve_impacts(
      {recipe("a", {"tofu", "noodles"}), recipe("b", {"duck", "hoisin sauce"})},
      table());
  EXPECT_EQ(r.values[0], (ImpactValues{3.2, 0.0}));
  EXPECT_EQ(r.values[1], (ImpactValues{10.9, 0.05}));
}

TEST(ResolveImpacts, UnknownNamesRecipeAndIngredient) {
  try {
    resolve_impacts({recipe("r7", {"dragonfruit"})}, table());
    FAIL();
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("r7"), std::string::npos);
    EXPECT_NE(msg.find("dragonfruit"), std::string::npos);
  }
}

TEST(ChoiceDistribution, Examples) {
  const std::vector<double> p{0.8, 0.4, 0.4};
  const auto pi = choice_distribution(p, {0, 1, 2});
  EXPECT_DOUBLE_EQ(pi[0], 0.5);
  EXPECT_DOUBLE_EQ(pi[1], 0.25);
  EXPECT_DOUBLE_EQ(pi[2], 0.25);
  EXPECT_EQ(choice_distribution(p, {1}), std::vector<double>{1.0});
  const std::vector<double> eq(5, 0.3);
  for (double v : choice_distribution(eq, {0, 1, 2, 3, 4})) {
    EXPECT_DOUBLE_EQ(v, 0.2);
  }
  EXPECT_THROW(choice_distribution(p, {}), ArgumentError);
}

TEST(ChoiceDistribution, SumsToOneAndIsScaleInvariant) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> p(9);
    for (auto& v : p) v = u(rng);
    const Selection sel{0, 2, 3, 5, 8};
    const auto pi = choice_distribution(p, sel);
    double sum = 0.0;
    for (double v : pi) sum += v;
    EXPECT_NEAR(sum, 1.0, 1e-12);
    auto scaled = p;
    for (auto& v : scaled) v *= 3.7;
    const auto pi2 = choice_distribution(scaled, sel);
    for (std::size_t i = 0; i < pi.size(); ++i) EXPECT_NEAR(pi[i], pi2[i], 1e-12);
  }
}

TEST(ExpectedImpact, Examples) {
  const std::vector<double> p{0.8, 0.4, 0.4};
  const std::vector<double> l{100, 10, 10};
  EXPECT_DOUBLE_EQ(expected_impact({0, 1, 2}, p, l), 55.0);
  const std::vector<double> flat{7.5, 7.5, 7.5};
  EXPECT_DOUBLE_EQ(expected_impact({0, 2}, p, flat), 7.5);
}

TEST(ExpectedImpact, MatchesBruteForceSummation) {
  const std::vector<double> p{0.9, 0.2, 0.5, 0.7, 0.1, 0.4};
  const std::vector<double> l{12.0, 99.5, 3.1, 0.0, 40.0, 7.25};
  for (unsigned mask = 1; mask < 64; ++mask) {
    Selection sel;
    for (std::size_t i = 0; i < 6; ++i) {
      if (mask & (1u << i)) sel.push_back(i);
    }
    // Expectation as the sum over outcomes of P(choose i) * l_i.
    double total = 0.0;
    for (auto i : sel) total += p[i];
    double expect = 0.0;
    for (auto i : sel) expect += (p[i] / total) * l[i];
    EXPECT_NEAR(expected_impact(sel, p, l), expect, 1e-12);
  }
}

TEST(ExpectedImpact, DimensionOverload) {
  RecipeImpacts r{{{3.2, 0.0}, {10.9, 0.05}}};
  const std::vector<double> p{0.5, 0.5};
  EXPECT_DOUBLE_EQ(expected_impact({0, 1}, p, r, ImpactDimension::animals), 0.025);
}

TEST(Linearize, HandArithmetic) {
  const std::vector<double> p{0.8, 0.4};
  const std::vector<double> l{60, 20};
  const auto c = linearize_constraint(p, l, 0.25, {0, 1}, ImpactDimension::emissions);
  EXPECT_NEAR(c.threshold, 35.0 / 3.0, 1e-12);
  EXPECT_NEAR(c.coefficients[0], 0.8 * (60 - 35.0 / 3.0), 1e-12);
  EXPECT_NEAR(c.coefficients[1], 0.4 * (20 - 35.0 / 3.0), 1e-12);
  EXPECT_NEAR(fractional(p, l, {0, 1}), 140.0 / 3.0, 1e-12);
}

TEST(Linearize, SelfComparisonAtEquality) {
  const std::vector<double> p{0.8, 0.4, 0.6};
  const std::vector<double> l{60, 20, 5};
  const auto c = linearize_constraint(p, l, 1.0, {0, 2}, ImpactDimension::emissions);
  EXPECT_NEAR(c.lhs({0, 2}), 0.0, 1e-12);
  EXPECT_TRUE(c.satisfied({0, 2}));
}

TEST(Linearize, Preconditions) {
  const std::vector<double> p{0.8};
  const std::vector<double> l{1};
  EXPECT_THROW(linearize_constraint(p, l, 1.0, {}, ImpactDimension::emissions),
               ArgumentError);
  EXPECT_THROW(linearize_constraint(p, l, -0.1, {0}, ImpactDimension::emissions),
               ArgumentError);
}

TEST(Linearize, AgreesWithFractionalOnSixItemSubsets) {
  const std::vector<double> p{0.9, 0.2, 0.5, 0.7, 0.1, 0.4};
  const std::vector<double> l{12.0, 99.5, 3.1, 0.0, 40.0, 7.25};
  const auto c = linearize_constraint(p, l, 0.6, {0, 1, 4}, ImpactDimension::emissions);
  for (unsigned mask = 1; mask < 64; ++mask) {
    Selection sel;
    for (std::size_t i = 0; i < 6; ++i) {
      if (mask & (1u << i)) sel.push_back(i);
    }
    EXPECT_EQ(c.lhs(sel) <= 0.0, fractional(p, l, sel) <= c.threshold) << mask;
  }
}
