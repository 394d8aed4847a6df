#include "treesplit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace treesplit {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  if (successes > trials) throw std::invalid_argument("wilson_interval: successes exceed trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double chi_square_statistic(std::span<const std::uint64_t> observed, std::span<const double> probabilities) {
  if (observed.size() != probabilities.size()) throw std::invalid_argument("chi_square: size mismatch");
  double total = 0;
  for (const auto o : observed) total += static_cast<double>(o);
  double stat = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = total * probabilities[i];
    if (e <= 0) throw std::invalid_argument("chi_square: nonpositive expected count");
    const double d = static_cast<double>(observed[i]) - e;
    stat += d * d / e;
  }
  return stat;
}

double chi_square_critical(int df, double alpha) {
  const boost::math::chi_squared dist(df);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

double chi_square_p_value(double statistic, int df) {
  const boost::math::chi_squared dist(df);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("total_variation: size mismatch");
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return s / 2;
}

}  // namespace treesplit
