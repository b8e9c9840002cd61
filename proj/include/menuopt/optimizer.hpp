#pragma once

// Cardinality-constrained selection with a linear score term, a quadratic
// similarity penalty and linear side constraints:
//
//   max  Σ p̂_i x_i − λ Σ_{i<j} s_ij x_i x_j
//   s.t. Σ a_ci x_i ≤ 0  for every constraint c,  Σ x_i = K,  x ∈ {0,1}ⁿ
//
// solve_exhaustive enumerates all K-subsets and is the test oracle;
// solve_exact is a depth-first branch-and-bound; solve_heuristic is greedy
// construction plus 1-swap local search.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "menuopt/errors.hpp"
#include "menuopt/impact.hpp"
#include "menuopt/similarity.hpp"

namespace menuopt {

inline constexpr double kTolerance = 1e-9;

struct MenuProblem {
  std::vector<double> scores;  // p̂ in [0,1]
  SimilarityMatrix similarity;
  double lambda = 0.0;
  std::size_t k = 0;
  std::vector<LinearConstraint> constraints;
  Selection original;

  std::size_t size() const { return scores.size(); }

  void validate() const {
    const auto n = scores.size();
    if (k == 0 || k > n) throw ArgumentError("cardinality K must be in [1, n]");
    if (similarity.size() != n) {
      throw ArgumentError("similarity matrix size differs from ground set");
    }
    if (!(lambda >= 0.0)) throw ArgumentError("lambda must be >= 0");
    for (double p : scores) {
      if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("score outside [0,1]");
    }
    for (const auto& c : constraints) {
      if (c.coefficients.size() != n) {
        throw ArgumentError("constraint length differs from ground set");
      }
    }
  }

  bool feasible(const Selection& sel, double tol = kTolerance) const {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const LinearConstraint& c) {
                         return c.satisfied(sel, tol);
                       });
  }
};

enum class Certificate { exact, heuristic };

inline std::string to_string(Certificate c) {
  return c == Certificate::exact ? "exact" : "heuristic";
}

struct SolverStats {
  std::uint64_t nodes = 0;
  double wall_seconds = 0.0;
  bool budget_exhausted = false;
};

struct MenuSolution {
  Selection selection;
  double objective = 0.0;
  std::map<ImpactDimension, double> expected_impacts;
  Certificate certificate = Certificate::exact;
  SolverStats stats;
};

/// Σ_{i∈sel} p̂_i − λ Σ_{i<j∈sel} s_ij. Pairs are counted once.
inline double objective(const MenuProblem& problem, const Selection& selection) {
  if (selection.size() != problem.k) {
    throw ArgumentError("selection has " + std::to_string(selection.size()) +
                        " items, expected K = " + std::to_string(problem.k));
  }
  Selection sel = selection;
  std::sort(sel.begin(), sel.end());
  double linear = 0.0;
  double pairwise = 0.0;
  for (std::size_t a = 0; a < sel.size(); ++a) {
    linear += problem.scores.at(sel[a]);
    for (std::size_t b = a + 1; b < sel.size(); ++b) {
      pairwise += problem.similarity(sel[a], sel[b]);
    }
  }
  return linear - problem.lambda * pairwise;
}

namespace detail {

inline bool improves(double obj, const Selection& sel, double best_obj,
                     const std::optional<Selection>& best_sel) {
  if (!best_sel) return true;
  if (obj > best_obj + kTolerance) return true;
  return std::abs(obj - best_obj) <= kTolerance && sel < *best_sel;
}

inline MenuSolution finish(const MenuProblem& problem, Selection sel,
                           Certificate cert, SolverStats stats) {
  MenuSolution s;
  std::sort(sel.begin(), sel.end());
  s.objective = objective(problem, sel);
  for (const auto& c : problem.constraints) {
    s.expected_impacts[c.dimension] =
        expected_impact(sel, problem.scores, c.impacts);
  }
  s.selection = std::move(sel);
  s.certificate = cert;
  s.stats = stats;
  return s;
}

inline double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

/// Binomial coefficient saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1.0L;
  std::uint64_t exact = 1;
  bool overflow = false;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (!overflow) {
      // exact * (n-k+i) / i stays integral at every step.
      const std::uint64_t m = n - k + i;
      if (exact > std::numeric_limits<std::uint64_t>::max() / m) {
        overflow = true;
      } else {
        exact = exact * m / i;
      }
    }
  }
  if (overflow) {
    return r >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())
               ? std::numeric_limits<std::uint64_t>::max()
               : static_cast<std::uint64_t>(r);
  }
  return exact;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultExhaustiveBudget = 2'000'000;

/// Enumerates every K-subset in lexicographic order. Among optima within
/// tolerance the lexicographically smallest selection wins.
inline MenuSolution solve_exhaustive(
    const MenuProblem& problem,
    std::uint64_t budget = kDefaultExhaustiveBudget) {
  problem.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = problem.size();
  const std::size_t k = problem.k;
  const auto count = detail::binomial(n, k);
  if (count > budget) {
    throw BudgetExceededError("C(" + std::to_string(n) + "," +
                              std::to_string(k) + ") = " +
                              std::to_string(count) +
                              " subsets exceeds the exhaustive budget of " +
                              std::to_string(budget));
  }
  Selection sel(k);
  for (std::size_t i = 0; i < k; ++i) sel[i] = i;
  std::optional<Selection> best;
  double best_obj = -std::numeric_limits<double>::infinity();
  SolverStats stats;
  while (true) {
    ++stats.nodes;
    if (problem.feasible(sel)) {
      const double obj = objective(problem, sel);
      if (detail::improves(obj, sel, best_obj, best)) {
        best = sel;
        best_obj = obj;
      }
    }
    // Next combination in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && sel[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++sel[pos - 1];
    for (std::size_t i = pos; i < k; ++i) sel[i] = sel[i - 1] + 1;
  }
  if (!best) throw InfeasibleError("no K-subset satisfies the constraints");
  stats.wall_seconds = detail::elapsed(start);
  return detail::finish(problem, *best, Certificate::exact, stats);
}

struct ExactOptions {
  /// Maximum branch-and-bound nodes; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Optional feasible starting incumbent.
  std::optional<Selection> incumbent;
};

namespace detail {

/// Depth-first include/exclude search over items in index order. Including
/// before excluding visits leaves in lexicographic order, so the tie-break
/// matches solve_exhaustive.
///
/// Upper bound at a node with chosen set C, undecided items R = {d..n-1} and
/// r = K − |C| slots left:
///   f(C) + top-r over j∈R of [ p̂_j − λ Σ_{i∈C} s_ij − (λ/2)·σ_j ]
/// where σ_j is the sum of the r−1 smallest s_jk over k∈R, k≠j. Every chosen
/// completion pays at least ½·σ_j per item in pairwise similarity among the
/// new items, so the bound never underestimates.
class BranchAndBound {
 public:
  BranchAndBound(const MenuProblem& problem, const ExactOptions& options)
      : p_(problem),
        n_(problem.size()),
        budget_(options.node_budget),
        in_(n_, false),
        sim_to_chosen_(n_, 0.0),
        cons_lhs_(problem.constraints.size(), 0.0) {
    for (const auto& c : p_.constraints) {
      std::vector<std::size_t> order(n_);
      for (std::size_t i = 0; i < n_; ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) {
                         return c.coefficients[a] < c.coefficients[b];
                       });
      coef_order_.push_back(std::move(order));
    }
    sim_order_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      auto& row = sim_order_[j];
      for (std::size_t k = 0; k < n_; ++k) {
        if (k != j) row.push_back(k);
      }
      std::stable_sort(row.begin(), row.end(), [&](std::size_t a, std::size_t b) {
        return p_.similarity(j, a) < p_.similarity(j, b);
      });
    }
    if (options.incumbent) {
      Selection s = *options.incumbent;
      std::sort(s.begin(), s.end());
      if (s.size() == p_.k && p_.feasible(s)) {
        best_ = s;
        best_obj_ = objective(p_, s);
      }
    }
    chosen_.reserve(p_.k);
  }

  void run() { search(0, 0.0, 0.0); }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::optional<Selection>& best() const { return best_; }

 private:
  void search(std::size_t d, double linear, double pairwise) {
    if (exhausted_) return;
    const std::size_t r = p_.k - chosen_.size();
    if (r == 0) {
      leaf();
      return;
    }
    if (n_ - d < r) return;
    ++nodes_;
    if (budget_ != 0 && nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (!constraints_completable(d, r)) return;
    if (best_) {
      const double bound = linear - p_.lambda * pairwise + completion_bound(d, r);
      if (bound < best_obj_ - kTolerance) return;
    }

    // Include d.
    const double add_pair = sim_to_chosen_[d];
    include(d);
    search(d + 1, linear + p_.scores[d], pairwise + add_pair);
    exclude(d);
    // Exclude d.
    search(d + 1, linear, pairwise);
  }

  void leaf() {
    for (double v : cons_lhs_) {
      if (v > kTolerance) return;
    }
    Selection sel = chosen_;
    const double obj = objective(p_, sel);
    if (improves(obj, sel, best_obj_, best_)) {
      best_ = std::move(sel);
      best_obj_ = obj;
    }
  }

  bool constraints_completable(std::size_t d, std::size_t r) const {
    for (std::size_t c = 0; c < p_.constraints.size(); ++c) {
      const auto& coef = p_.constraints[c].coefficients;
      double v = cons_lhs_[c];
      std::size_t taken = 0;
      for (std::size_t idx : coef_order_[c]) {
        if (taken == r) break;
        if (idx < d) continue;
        v += coef[idx];
        ++taken;
      }
      if (v > kTolerance) return false;
    }
    return true;
  }

  double completion_bound(std::size_t d, std::size_t r) {
    gains_.clear();
    for (std::size_t j = d; j < n_; ++j) {
      double sigma = 0.0;
      if (p_.lambda > 0.0 && r > 1) {
        std::size_t taken = 0;
        for (std::size_t k : sim_order_[j]) {
          if (taken + 1 == r) break;
          if (k < d) continue;
          sigma += p_.similarity(j, k);
          ++taken;
        }
      }
      gains_.push_back(p_.scores[j] - p_.lambda * sim_to_chosen_[j] -
                       0.5 * p_.lambda * sigma);
    }
    std::nth_element(gains_.begin(), gains_.begin() + static_cast<long>(r - 1),
                     gains_.end(), std::greater<>());
    double total = 0.0;
    for (std::size_t i = 0; i < r; ++i) total += gains_[i];
    return total;
  }

  void include(std::size_t d) {
    in_[d] = true;
    chosen_.push_back(d);
    for (std::size_t j = 0; j < n_; ++j) sim_to_chosen_[j] += p_.similarity(j, d);
    for (std::size_t c = 0; c < cons_lhs_.size(); ++c) {
      cons_lhs_[c] += p_.constraints[c].coefficients[d];
    }
  }

  void exclude(std::size_t d) {
    in_[d] = false;
    chosen_.pop_back();
    for (std::size_t j = 0; j < n_; ++j) sim_to_chosen_[j] -= p_.similarity(j, d);
    for (std::size_t c = 0; c < cons_lhs_.size(); ++c) {
      cons_lhs_[c] -= p_.constraints[c].coefficients[d];
    }
  }

  const MenuProblem& p_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<bool> in_;
  Selection chosen_;
  std::vector<double> sim_to_chosen_;
  std::vector<double> cons_lhs_;
  std::vector<std::vector<std::size_t>> coef_order_;
  std::vector<std::vector<std::size_t>> sim_order_;
  std::vector<double> gains_;
  std::optional<Selection> best_;
  double best_obj_ = -std::numeric_limits<double>::infinity();
};

}  // namespace detail

/// Branch-and-bound. Throws InfeasibleError when no selection is feasible
/// and BudgetExceededError when the node budget runs out without any
/// feasible incumbent. When the budget runs out with an incumbent, the
/// result carries Certificate::heuristic and stats.budget_exhausted.
inline MenuSolution solve_exact(const MenuProblem& problem,
                                const ExactOptions& options = {}) {
  problem.validate();
  const auto start = std::chrono::steady_clock::now();
  detail::BranchAndBound bnb(problem, options);
  bnb.run();
  SolverStats stats;
  stats.nodes = bnb.nodes();
  stats.budget_exhausted = bnb.exhausted();
  stats.wall_seconds = detail::elapsed(start);
  if (!bnb.best()) {
    if (bnb.exhausted()) {
      throw BudgetExceededError("node budget of " +
                                std::to_string(options.node_budget) +
                                " exhausted before a feasible selection was found");
    }
    throw InfeasibleError("no K-subset satisfies the constraints");
  }
  return detail::finish(problem, *bnb.best(),
                        bnb.exhausted() ? Certificate::heuristic
                                        : Certificate::exact,
                        stats);
}

namespace detail {

class Heuristic {
 public:
  explicit Heuristic(const MenuProblem& p) : p_(p), n_(p.size()) {}

  /// Greedy construction; every step keeps each constraint completable by
  /// its most negative remaining coefficients. Returns nullopt if stuck.
  std::optional<Selection> greedy(std::optional<std::size_t> seed_item) {
    std::vector<bool> in(n_, false);
    std::vector<double> sim(n_, 0.0);
    std::vector<double> lhs(p_.constraints.size(), 0.0);
    Selection sel;
    auto add = [&](std::size_t j) {
      in[j] = true;
      sel.push_back(j);
      for (std::size_t x = 0; x < n_; ++x) sim[x] += p_.similarity(x, j);
      for (std::size_t c = 0; c < lhs.size(); ++c) {
        lhs[c] += p_.constraints[c].coefficients[j];
      }
    };
    if (seed_item && keeps_completable(*seed_item, in, lhs, p_.k)) add(*seed_item);
    while (sel.size() < p_.k) {
      const std::size_t r = p_.k - sel.size();
      std::optional<std::size_t> pick;
      double pick_gain = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n_; ++j) {
        if (in[j] || !keeps_completable(j, in, lhs, r)) continue;
        const double gain = p_.scores[j] - p_.lambda * sim[j];
        if (!pick || gain > pick_gain) {
          pick = j;
          pick_gain = gain;
        }
      }
      if (!pick) return std::nullopt;
      add(*pick);
    }
    std::sort(sel.begin(), sel.end());
    return sel;
  }

  /// Best-improvement local search on a feasible selection: 1-swaps, then
  /// 2-swaps when no 1-swap improves.
  void local_search(Selection& sel) const {
    std::vector<bool> in(n_, false);
    for (auto i : sel) in[i] = true;
    std::vector<double> sim(n_, 0.0);
    for (std::size_t x = 0; x < n_; ++x) {
      for (auto i : sel) sim[x] += p_.similarity(x, i);
    }
    std::vector<double> lhs(p_.constraints.size(), 0.0);
    for (std::size_t c = 0; c < lhs.size(); ++c) lhs[c] = p_.constraints[c].lhs(sel);

    while (true) {
      double best_delta = kTolerance;
      std::optional<std::pair<std::size_t, std::size_t>> move;
      for (std::size_t a = 0; a < sel.size(); ++a) {
        const std::size_t i = sel[a];
        for (std::size_t j = 0; j < n_; ++j) {
          if (in[j]) continue;
          const double delta =
              p_.scores[j] - p_.scores[i] -
              p_.lambda * (sim[j] - p_.similarity(i, j) - sim[i]);
          if (delta <= best_delta) continue;
          bool ok = true;
          for (std::size_t c = 0; ok && c < lhs.size(); ++c) {
            const auto& coef = p_.constraints[c].coefficients;
            ok = lhs[c] - coef[i] + coef[j] <= kTolerance;
          }
          if (!ok) continue;
          best_delta = delta;
          move = {a, j};
        }
      }
      if (move) {
        apply_swap(sel, in, sim, lhs, move->first, move->second);
        continue;
      }
      if (!two_swap(sel, in, sim, lhs)) break;
    }
    std::sort(sel.begin(), sel.end());
  }

 private:
  void apply_swap(Selection& sel, std::vector<bool>& in, std::vector<double>& sim,
                  std::vector<double>& lhs, std::size_t a, std::size_t j) const {
    const std::size_t i = sel[a];
    in[i] = false;
    in[j] = true;
    sel[a] = j;
    for (std::size_t x = 0; x < n_; ++x) {
      sim[x] += p_.similarity(x, j) - p_.similarity(x, i);
    }
    for (std::size_t c = 0; c < lhs.size(); ++c) {
      const auto& coef = p_.constraints[c].coefficients;
      lhs[c] += coef[j] - coef[i];
    }
  }

  /// Best improving exchange of two selected items for two unselected ones.
  bool two_swap(Selection& sel, std::vector<bool>& in, std::vector<double>& sim,
                std::vector<double>& lhs) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!in[j]) out.push_back(j);
    }
    const auto& S = p_.similarity;
    double best_delta = kTolerance;
    std::optional<std::array<std::size_t, 4>> move;  // a1, a2, j1, j2
    for (std::size_t a1 = 0; a1 < sel.size(); ++a1) {
      for (std::size_t a2 = a1 + 1; a2 < sel.size(); ++a2) {
        const std::size_t i1 = sel[a1], i2 = sel[a2];
        const double removed = sim[i1] + sim[i2] - S(i1, i2);
        for (std::size_t b1 = 0; b1 < out.size(); ++b1) {
          const std::size_t j1 = out[b1];
          const double add1 = sim[j1] - S(j1, i1) - S(j1, i2);
          for (std::size_t b2 = b1 + 1; b2 < out.size(); ++b2) {
            const std::size_t j2 = out[b2];
            const double added = add1 + sim[j2] - S(j2, i1) - S(j2, i2) + S(j1, j2);
            const double delta = p_.scores[j1] + p_.scores[j2] - p_.scores[i1] -
                                 p_.scores[i2] - p_.lambda * (added - removed);
            if (delta <= best_delta) continue;
            bool ok = true;
            for (std::size_t c = 0; ok && c < lhs.size(); ++c) {
              const auto& coef = p_.constraints[c].coefficients;
              ok = lhs[c] - coef[i1] - coef[i2] + coef[j1] + coef[j2] <= kTolerance;
            }
            if (!ok) continue;
            best_delta = delta;
            move = {a1, a2, j1, j2};
          }
        }
      }
    }
    if (!move) return false;
    apply_swap(sel, in, sim, lhs, (*move)[0], (*move)[2]);
    apply_swap(sel, in, sim, lhs, (*move)[1], (*move)[3]);
    return true;
  }

  /// After adding j, can each constraint still reach ≤ 0 using the r−1 most
  /// negative coefficients among the other unchosen items?
  bool keeps_completable(std::size_t j, const std::vector<bool>& in,
                         const std::vector<double>& lhs, std::size_t r) const {
    for (std::size_t c = 0; c < lhs.size(); ++c) {
      const auto& coef = p_.constraints[c].coefficients;
      scratch_.clear();
      for (std::size_t x = 0; x < n_; ++x) {
        if (!in[x] && x != j) scratch_.push_back(coef[x]);
      }
      const std::size_t need = r - 1;
      if (scratch_.size() < need) return false;
      std::partial_sort(scratch_.begin(), scratch_.begin() + static_cast<long>(need),
                        scratch_.end());
      double v = lhs[c] + coef[j];
      for (std::size_t t = 0; t < need; ++t) v += scratch_[t];
      if (v > kTolerance) return false;
    }
    return true;
  }

  const MenuProblem& p_;
  std::size_t n_;
  mutable std::vector<double> scratch_;
};

}  // namespace detail

/// Greedy construction plus 1- and 2-swap local search, repeated from `restarts`
/// additional random seed items. Deterministic for a given seed.
inline MenuSolution solve_heuristic(const MenuProblem& problem,
                                    std::uint64_t seed = 0,
                                    std::size_t restarts = 8) {
  problem.validate();
  const auto start = std::chrono::steady_clock::now();
  detail::Heuristic h(problem);
  std::mt19937_64 rng(seed);
  std::optional<Selection> best;
  double best_obj = -std::numeric_limits<double>::infinity();
  SolverStats stats;
  for (std::size_t t = 0; t <= restarts; ++t) {
    std::optional<std::size_t> seed_item;
    if (t > 0) seed_item = static_cast<std::size_t>(rng() % problem.size());
    auto sel = h.greedy(seed_item);
    ++stats.nodes;
    if (!sel) continue;
    h.local_search(*sel);
    const double obj = objective(problem, *sel);
    if (detail::improves(obj, *sel, best_obj, best)) {
      best = *sel;
      best_obj = obj;
    }
  }
  if (!best) {
    throw InfeasibilityUnprovenError(
        "greedy construction found no feasible selection");
  }
  stats.wall_seconds = detail::elapsed(start);
  return detail::finish(problem, *best, Certificate::heuristic, stats);
}

/// Heuristic warm start followed by branch-and-bound under a node budget.
/// The certificate is exact only if the search finished.
inline MenuSolution solve_menu(const MenuProblem& problem,
                               std::uint64_t node_budget, std::uint64_t seed = 0,
                               std::size_t restarts = 8) {
  ExactOptions options;
  options.node_budget = node_budget;
  std::optional<MenuSolution> warm;
  try {
    warm = solve_heuristic(problem, seed, restarts);
    options.incumbent = warm->selection;
  } catch (const InfeasibilityUnprovenError&) {
  }
  try {
    auto sol = solve_exact(problem, options);
    if (warm) sol.stats.nodes += warm->stats.nodes;
    return sol;
  } catch (const BudgetExceededError&) {
    if (warm) return *warm;
    throw;
  }
}

// ---- error-bound verification ---------------------------------------------

struct BoundReport {
  std::size_t n = 0;
  std::size_t k = 0;
  double lambda = 0.0;
  double epsilon = 0.0;
  std::size_t trials = 0;
  double max_gap = 0.0;
  double bound = 0.0;  // 2Kε
  std::size_t violations = 0;
  bool pass = false;
};

namespace detail {
/// Uniform double in [0,1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace detail

/// Draws true scores p ~ U[0,1]ⁿ and estimates with |p̂ − p| ≤ ε, solves
/// both cardinality-only problems exactly with the same similarity matrix,
/// and checks |f(x̂*) − f(x*)| ≤ 2Kε under the true scores.
inline BoundReport verify_proposition1(std::size_t n, std::size_t k,
                                       double lambda, double epsilon,
                                       std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw ArgumentError("trials must be >= 1");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ArgumentError("epsilon must be in [0,1]");
  }
  if (k == 0 || k > n) throw ArgumentError("K must be in [1, n]");
  if (!(lambda >= 0.0)) throw ArgumentError("lambda must be >= 0");
  if (detail::binomial(n, k) > kDefaultExhaustiveBudget) {
    throw ArgumentError("instance too large for exact verification");
  }
  BoundReport report;
  report.n = n;
  report.k = k;
  report.lambda = lambda;
  report.epsilon = epsilon;
  report.trials = trials;
  report.bound = 2.0 * static_cast<double>(k) * epsilon;

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    MenuProblem truth;
    truth.k = k;
    truth.lambda = lambda;
    truth.similarity = SimilarityMatrix(n);
    truth.scores.resize(n);
    for (auto& p : truth.scores) p = detail::uniform01(rng);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        truth.similarity.set(i, j, detail::uniform01(rng));
      }
    }
    MenuProblem estimate = truth;
    for (std::size_t i = 0; i < n; ++i) {
      const double noise = -epsilon + 2.0 * epsilon * detail::uniform01(rng);
      estimate.scores[i] = std::clamp(truth.scores[i] + noise, 0.0, 1.0);
    }
    const auto x_star = solve_exact(truth);
    const auto x_hat = solve_exact(estimate);
    const double gap =
        std::abs(objective(truth, x_hat.selection) - x_star.objective);
    report.max_gap = std::max(report.max_gap, gap);
    if (gap > report.bound + kTolerance) ++report.violations;
  }
  report.pass = report.violations == 0;
  return report;
}

}  // namespace menuopt
