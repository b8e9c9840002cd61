#pragma once

// Ratcliff/Obershelp ("gestalt") matching and pairwise similarity matrices
// for the menu diversity term.

#include <array>
#include <cstddef>
#include <cstdio>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "menuopt/domain.hpp"
#include "menuopt/errors.hpp"
#include "menuopt/text.hpp"

namespace menuopt {

struct MatchBlock {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t size = 0;
};

/// Longest common block of a[alo,ahi) and b[blo,bhi). Among blocks of
/// maximal length, returns the one starting earliest in a, then earliest in b.
/// No junk heuristics.
template <typename Seq>
MatchBlock longest_match(const Seq& a, const Seq& b, std::size_t alo,
                         std::size_t ahi, std::size_t blo, std::size_t bhi) {
  MatchBlock best{alo, blo, 0};
  // cur[j - blo + 1] = length of the common suffix ending at a[i], b[j].
  std::vector<std::size_t> prev(bhi - blo + 1, 0), cur(bhi - blo + 1, 0);
  for (std::size_t i = alo; i < ahi; ++i) {
    for (std::size_t j = blo; j < bhi; ++j) {
      const std::size_t col = j - blo + 1;
      if (a[i] == b[j]) {
        const std::size_t k = prev[col - 1] + 1;
        cur[col] = k;
        // Strict '>' keeps the earliest end in a, then in b, which for
        // equal lengths is the earliest start.
        if (k > best.size) best = {i + 1 - k, j + 1 - k, k};
      } else {
        cur[col] = 0;
      }
    }
    std::swap(prev, cur);
  }
  return best;
}

/// Total number of matched elements found by recursive longest-block
/// matching on the unmatched left and right remainders.
template <typename Seq>
std::size_t matched_count(const Seq& a, const Seq& b) {
  std::size_t total = 0;
  std::vector<std::array<std::size_t, 4>> stack{{0, a.size(), 0, b.size()}};
  while (!stack.empty()) {
    const auto [alo, ahi, blo, bhi] = stack.back();
    stack.pop_back();
    if (alo >= ahi || blo >= bhi) continue;
    const auto m = longest_match(a, b, alo, ahi, blo, bhi);
    if (m.size == 0) continue;
    total += m.size;
    stack.push_back({alo, m.a, blo, m.b});
    stack.push_back({m.a + m.size, ahi, m.b + m.size, bhi});
  }
  return total;
}

template <typename Seq>
double gestalt_ratio_of(const Seq& a, const Seq& b) {
  const std::size_t length = a.size() + b.size();
  if (length == 0) return 1.0;
  return 2.0 * static_cast<double>(matched_count(a, b)) /
         static_cast<double>(length);
}

/// 2·M / (|a| + |b|) over Unicode scalar values; 1.0 when both are empty.
inline double gestalt_ratio(std::string_view a, std::string_view b) {
  return gestalt_ratio_of(text::decode_utf8(a), text::decode_utf8(b));
}

/// |a ∩ b| / |a ∪ b| on normalized ingredient names.
inline double ingredient_overlap(const std::set<std::string>& a,
                                 const std::set<std::string>& b) {
  std::set<std::string> na, nb;
  for (const auto& s : a) na.insert(text::normalize_ingredient(s));
  for (const auto& s : b) nb.insert(text::normalize_ingredient(s));
  if (na.empty() && nb.empty()) {
    throw ArgumentError("ingredient overlap of two empty sets is undefined");
  }
  std::size_t shared = 0;
  for (const auto& s : na) shared += nb.count(s);
  const std::size_t unique = na.size() + nb.size() - shared;
  return static_cast<double>(shared) / static_cast<double>(unique);
}

/// Text fed to the matcher: lowercased title, "; ", comma-joined ingredients.
inline std::string similarity_projection(const Recipe& r) {
  return text::to_lower(r.title) + "; " + text::join(r.ingredients, ", ");
}

/// Symmetric n×n matrix with zero diagonal.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  explicit SimilarityMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * n_ + j];
  }

  /// Sets s(i,j) and s(j,i). Diagonal writes are rejected.
  void set(std::size_t i, std::size_t j, double v) {
    if (i == j) throw ArgumentError("similarity diagonal is fixed at zero");
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ArgumentError("similarity outside [0,1]");
    }
    values_[i * n_ + j] = v;
    values_[j * n_ + i] = v;
  }

  /// Row-major CSV with the ids as header.
  std::string to_csv(const std::vector<std::string>& ids) const {
    std::string out = text::join(ids, ",") + "\n";
    char buf[32];
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (j > 0) out.push_back(',');
        std::snprintf(buf, sizeof buf, "%.17g", (*this)(i, j));
        out += buf;
      }
      out.push_back('\n');
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

/// s[i][j] = gestalt_ratio(projection(i), projection(j)), computed once per
/// unordered pair (i<j) and mirrored.
inline SimilarityMatrix similarity_matrix(const std::vector<Recipe>& recipes) {
  if (recipes.size() < 2) {
    throw ArgumentError("similarity matrix needs at least two recipes");
  }
  std::vector<std::u32string> proj;
  proj.reserve(recipes.size());
  for (const auto& r : recipes) {
    proj.push_back(text::decode_utf8(similarity_projection(r)));
  }
  SimilarityMatrix s(recipes.size());
  for (std::size_t i = 0; i < recipes.size(); ++i) {
    for (std::size_t j = i + 1; j < recipes.size(); ++j) {
      s.set(i, j, gestalt_ratio_of(proj[i], proj[j]));
    }
  }
  return s;
}

}  // namespace menuopt
