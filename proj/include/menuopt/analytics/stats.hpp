#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "menuopt/errors.hpp"

namespace menuopt::analytics {

struct TTest {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
};

namespace detail {
inline double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double sample_variance(std::span<const double> x, double m) {
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}
}  // namespace detail

/// Welch's unequal-variance t-test with Welch–Satterthwaite df.
inline TTest welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw ArgumentError("t-test needs at least two values per sample");
  }
  const double ma = detail::mean(a), mb = detail::mean(b);
  const double va = detail::sample_variance(a, ma) / static_cast<double>(a.size());
  const double vb = detail::sample_variance(b, mb) / static_cast<double>(b.size());
  const double se2 = va + vb;
  if (!(se2 > 0.0)) throw DegenerateSampleError("both samples have zero variance");
  TTest r;
  r.t = (ma - mb) / std::sqrt(se2);
  r.df = se2 * se2 /
         (va * va / static_cast<double>(a.size() - 1) +
          vb * vb / static_cast<double>(b.size() - 1));
  const boost::math::students_t dist(r.df);
  r.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.t))));
  return r;
}

struct ChiSquared {
  double stat = 0.0;
  double p = 1.0;
};

/// Two-cell goodness of fit of `successes` out of `n` against rate p0.
inline ChiSquared chi_squared_gof(std::size_t successes, std::size_t n,
                                  double p0 = 0.5) {
  if (n < 1) throw ArgumentError("chi-squared test needs n >= 1");
  if (successes > n) throw ArgumentError("successes exceed n");
  if (!(p0 > 0.0 && p0 < 1.0)) throw ArgumentError("p0 must be in (0,1)");
  const double s = static_cast<double>(successes);
  const double nn = static_cast<double>(n);
  const double e1 = nn * p0, e0 = nn * (1.0 - p0);
  ChiSquared r;
  r.stat = (s - e1) * (s - e1) / e1 + ((nn - s) - e0) * ((nn - s) - e0) / e0;
  const boost::math::chi_squared dist(1.0);
  r.p = boost::math::cdf(boost::math::complement(dist, r.stat));
  return r;
}

inline double bonferroni(double alpha, std::size_t m) {
  if (m < 1) throw ArgumentError("Bonferroni correction needs m >= 1");
  return alpha / static_cast<double>(m);
}

/// Linear-interpolation percentile, q in [0,1].
inline double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw ArgumentError("percentile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

/// Stratum 1..4 per item by the 25/50/75th percentiles. Ties with a
/// boundary go to the lower stratum.
inline std::vector<int> quartile_strata(std::span<const double> gaps) {
  if (gaps.size() < 4) throw ArgumentError("quartile strata need at least 4 items");
  const std::vector<double> v(gaps.begin(), gaps.end());
  const double q1 = percentile(v, 0.25), q2 = percentile(v, 0.5),
               q3 = percentile(v, 0.75);
  std::vector<int> out;
  out.reserve(v.size());
  for (double g : v) out.push_back(g <= q1 ? 1 : g <= q2 ? 2 : g <= q3 ? 3 : 4);
  return out;
}

}  // namespace menuopt::analytics
