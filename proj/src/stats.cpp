#include "bjts/stats.hpp"

#include <cmath>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace bjts::stats {

double chi_square_sf(double x, double df) {
    if (x <= 0.0) {
        return 1.0;
    }
    return boost::math::gamma_q(df / 2.0, x / 2.0);
}

double student_t_two_sided(double t, double df) {
    if (!std::isfinite(t)) {
        return 0.0;
    }
    boost::math::students_t dist(df);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double mean(std::span<const double> x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
    const double m = mean(x);
    double ss = 0.0;
    for (double v : x) {
        ss += (v - m) * (v - m);
    }
    return ss / static_cast<double>(x.size());
}

}  // namespace bjts::stats
