#pragma once

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "menuopt/analytics/stats.hpp"
#include "menuopt/domain.hpp"
#include "menuopt/errors.hpp"
#include "menuopt/io.hpp"
#include "menuopt/similarity.hpp"

namespace menuopt::analytics {

enum class Truth { a, b };

inline std::string to_string(Truth t) { return t == Truth::a ? "a" : "b"; }

inline Truth parse_truth(std::string_view s) {
  if (s == "a") return Truth::a;
  if (s == "b") return Truth::b;
  throw ParseError("truth must be 'a' or 'b', got '" + std::string(s) + "'");
}

/// One ground-truth comparison. `text_a`/`text_b` are the payloads shown to a
/// predictor.
struct PairComparison {
  std::string id_a;
  std::string id_b;
  std::string text_a;
  std::string text_b;
  Truth truth = Truth::a;
  double gap = 0.0;

  friend bool operator==(const PairComparison&, const PairComparison&) = default;
};

/// A corpus item with its individual ratings.
struct RatedItem {
  std::string id;
  std::set<std::string> ingredients;
  std::vector<double> ratings;
  std::string text;
};

namespace detail {
inline double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}
}  // namespace detail

/// Most ingredient-similar pairs whose ratings differ at Welch p < alpha.
/// Pairs are oriented so id_a < id_b and ranked by overlap, then ids.
inline std::vector<PairComparison> mine_pairs(const std::vector<RatedItem>& corpus,
                                              std::size_t min_pairs,
                                              double alpha = 0.05) {
  struct Candidate {
    double overlap;
    const RatedItem* a;
    const RatedItem* b;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const RatedItem* a = &corpus[i];
      const RatedItem* b = &corpus[j];
      if (a->id == b->id) throw ValidationError("duplicate corpus id '" + a->id + "'");
      if (b->id < a->id) std::swap(a, b);
      if (a->ingredients.empty() && b->ingredients.empty()) continue;
      candidates.push_back({ingredient_overlap(a->ingredients, b->ingredients), a, b});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) {
              if (x.overlap != y.overlap) return x.overlap > y.overlap;
              if (x.a->id != y.a->id) return x.a->id < y.a->id;
              return x.b->id < y.b->id;
            });
  std::vector<PairComparison> out;
  for (const auto& c : candidates) {
    if (out.size() == min_pairs) break;
    if (c.a->ratings.size() < 2 || c.b->ratings.size() < 2) continue;
    TTest t;
    try {
      t = welch_t_test(c.a->ratings, c.b->ratings);
    } catch (const DegenerateSampleError&) {
      continue;
    }
    if (!(t.p < alpha)) continue;
    const double ma = detail::mean_of(c.a->ratings);
    const double mb = detail::mean_of(c.b->ratings);
    if (ma == mb) continue;
    out.push_back({c.a->id, c.b->id, c.a->text, c.b->text,
                   ma > mb ? Truth::a : Truth::b, std::abs(ma - mb)});
  }
  if (out.size() < min_pairs) {
    throw ValidationError("corpus yields " + std::to_string(out.size()) +
                          " significant pairs, " + std::to_string(min_pairs) +
                          " requested");
  }
  return out;
}

/// Pairs from recorded orders on one menu: every two recipes with different
/// order counts, the more ordered one as truth, gap = count difference.
inline std::vector<PairComparison> order_frequency_pairs(const ChoiceLog& log,
                                                         const Menu& menu) {
  const auto counts = log.order_counts(menu);
  std::vector<PairComparison> out;
  for (std::size_t i = 0; i < menu.size(); ++i) {
    for (std::size_t j = i + 1; j < menu.size(); ++j) {
      const auto ca = counts.at(menu[i].id), cb = counts.at(menu[j].id);
      if (ca == cb) continue;
      out.push_back({menu[i].id, menu[j].id, menu[i].title, menu[j].title,
                     ca > cb ? Truth::a : Truth::b,
                     std::abs(static_cast<double>(ca) - static_cast<double>(cb))});
    }
  }
  return out;
}

/// CSV `id_a,id_b,truth,gap`.
inline std::string pairs_to_csv(const std::vector<PairComparison>& pairs) {
  std::string out = "id_a,id_b,truth,gap\n";
  char buf[32];
  for (const auto& p : pairs) {
    std::snprintf(buf, sizeof buf, "%.17g", p.gap);
    out += p.id_a + "," + p.id_b + "," + to_string(p.truth) + "," + buf + "\n";
  }
  return out;
}

/// Parses a pairs CSV. Payload texts are left empty.
inline std::vector<PairComparison> parse_pairs_csv(std::string_view content,
                                                   const std::string& source) {
  std::vector<PairComparison> out;
  for (const auto& row : io::read_csv(content, {"id_a", "id_b", "truth", "gap"}, source)) {
    const auto ctx = source + ":" + std::to_string(row.line);
    PairComparison p;
    p.id_a = row.fields[0];
    p.id_b = row.fields[1];
    try {
      p.truth = parse_truth(row.fields[2]);
    } catch (const ParseError& e) {
      throw ParseError(ctx + ": " + e.what());
    }
    p.gap = io::parse_double(row.fields[3], ctx);
    if (!(p.gap >= 0.0)) throw ValidationError(ctx + ": gap must be >= 0");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace menuopt::analytics
