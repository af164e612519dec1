#pragma once

#include <span>

namespace bjts::stats {

/// Upper tail P[X > x] of a chi-square variable with `df` degrees of freedom.
double chi_square_sf(double x, double df);

/// Two-sided p-value of a Student-t statistic.
double student_t_two_sided(double t, double df);

double normal_cdf(double x);

double mean(std::span<const double> x);

/// Biased (divide by n) variance.
double variance(std::span<const double> x);

}  // namespace bjts::stats
