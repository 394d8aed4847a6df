#pragma once

#include <cstdint>
#include <span>

namespace treesplit {

inline constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ99);

/// Pearson statistic sum (o - e)^2 / e with e = total * p.
double chi_square_statistic(std::span<const std::uint64_t> observed, std::span<const double> probabilities);
/// Upper-tail critical value of the chi-square law with `df` degrees of freedom.
double chi_square_critical(int df, double alpha);
double chi_square_p_value(double statistic, int df);

/// Half the L1 distance between two probability vectors of equal length.
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace treesplit
