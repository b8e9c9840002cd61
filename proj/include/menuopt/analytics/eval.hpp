#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "menuopt/analytics/pairs.hpp"
#include "menuopt/analytics/stats.hpp"
#include "menuopt/errors.hpp"

namespace menuopt::analytics {

enum class Order { ab, ba };
enum class Position { first, second };

struct PairItem {
  const std::string& id;
  const std::string& text;
};

/// Returns which presented item wins, or nullopt for an unusable answer.
/// Throwing an Error also marks the pair invalid.
using Predictor =
    std::function<std::optional<Position>(const PairItem& first, const PairItem& second)>;

/// Presentation order of pair `index`, from its own rng stream.
inline Order presentation_order(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  std::mt19937_64 rng(seq);
  return (rng() & 1U) ? Order::ba : Order::ab;
}

struct PairOutcome {
  Order order = Order::ab;
  bool valid = false;
  bool correct = false;
};

struct StratumResult {
  std::size_t n = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
};

struct EvalReport {
  std::size_t n = 0;
  std::size_t correct = 0;
  std::size_t invalid = 0;
  double accuracy = 0.0;
  double chi2 = 0.0;
  double p_value = 1.0;
  double alpha = 0.05;
  double alpha_corrected = 0.05;
  bool significant = false;
  /// Empty when fewer than four valid pairs.
  std::vector<StratumResult> quartiles;
  std::vector<PairOutcome> outcomes;
};

/// Presents each pair in a seeded random order, maps positional answers back
/// to {a,b}, and tests accuracy against chance with a Bonferroni-corrected
/// chi-squared test.
inline EvalReport run_pairwise_eval(const std::vector<PairComparison>& pairs,
                                    const Predictor& predictor, std::uint64_t seed,
                                    std::size_t m_tests, double alpha = 0.05) {
  if (pairs.empty()) throw ArgumentError("no pairs to evaluate");
  EvalReport r;
  r.alpha = alpha;
  r.alpha_corrected = bonferroni(alpha, m_tests);
  std::vector<double> gaps;
  std::vector<bool> hits;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    PairOutcome o;
    o.order = presentation_order(seed, i);
    const PairItem a{p.id_a, p.text_a}, b{p.id_b, p.text_b};
    std::optional<Position> answer;
    try {
      answer = o.order == Order::ab ? predictor(a, b) : predictor(b, a);
    } catch (const Error&) {
      answer.reset();
    }
    if (answer) {
      const bool picked_a = (*answer == Position::first) == (o.order == Order::ab);
      o.valid = true;
      o.correct = picked_a == (p.truth == Truth::a);
      gaps.push_back(p.gap);
      hits.push_back(o.correct);
      ++r.n;
      if (o.correct) ++r.correct;
    } else {
      ++r.invalid;
    }
    r.outcomes.push_back(o);
  }
  if (r.n > 0) {
    r.accuracy = static_cast<double>(r.correct) / static_cast<double>(r.n);
    const auto chi = chi_squared_gof(r.correct, r.n, 0.5);
    r.chi2 = chi.stat;
    r.p_value = chi.p;
    r.significant = r.p_value < r.alpha_corrected;
  }
  if (gaps.size() >= 4) {
    const auto strata = quartile_strata(gaps);
    r.quartiles.assign(4, {});
    for (std::size_t i = 0; i < strata.size(); ++i) {
      auto& s = r.quartiles[static_cast<std::size_t>(strata[i] - 1)];
      ++s.n;
      if (hits[i]) ++s.correct;
    }
    for (auto& s : r.quartiles) {
      if (s.n > 0) s.accuracy = static_cast<double>(s.correct) / static_cast<double>(s.n);
    }
  }
  return r;
}

inline nlohmann::json to_json(const EvalReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["correct"] = r.correct;
  j["invalid"] = r.invalid;
  j["accuracy"] = r.accuracy;
  j["chi2"] = r.chi2;
  j["p_value"] = r.p_value;
  j["alpha"] = r.alpha;
  j["alpha_corrected"] = r.alpha_corrected;
  j["significant"] = r.significant;
  auto q = nlohmann::json::array();
  for (std::size_t i = 0; i < r.quartiles.size(); ++i) {
    q.push_back({{"quartile", i + 1},
                 {"n", r.quartiles[i].n},
                 {"correct", r.quartiles[i].correct},
                 {"accuracy", r.quartiles[i].accuracy}});
  }
  j["quartiles"] = std::move(q);
  return j;
}

}  // namespace menuopt::analytics
