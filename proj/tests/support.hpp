#pragma once

#include "bjts/sarima.hpp"
#include "bjts/series.hpp"
#include "bjts/simulate.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bjts::testing {

inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    std::normal_distribution<double> dist(0.0, scale);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = dist(rng);
    }
    return v;
}

inline SarimaSpec make_spec(std::vector<int> ar, std::vector<int> ma, std::vector<int> sar = {},
                            std::vector<int> sma = {}, DifferenceSpec diff = {}, bool constant = false) {
    return SarimaSpec{std::move(ar), std::move(ma), std::move(sar), std::move(sma), diff, constant};
}

inline SimulationResult simulate_process(const SarimaSpec& spec, const ArmaCoefficients& c, int length,
                                         std::uint64_t seed, double sigma = 1.0, double delta = 0.0) {
    SimulationConfig cfg;
    cfg.spec = spec;
    cfg.coefficients = c;
    cfg.delta = delta;
    cfg.sigma = sigma;
    cfg.length = length;
    cfg.seed = seed;
    return simulate(cfg);
}

/// Last coefficient of the order-k least-squares autoregression on the demeaned series, with the
/// sample padded by zeros on both sides (the windowed form whose normal equations use the full-sample
/// autocovariances).
inline double regression_pacf(std::span<const double> values, int k) {
    const auto T = static_cast<long>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(T);
    auto x = [&](long t) { return t >= 0 && t < T ? values[static_cast<std::size_t>(t)] - mean : 0.0; };
    const long rows = T + k;
    Eigen::MatrixXd X(rows, k);
    Eigen::VectorXd y(rows);
    for (long t = 0; t < rows; ++t) {
        y(t) = x(t);
        for (int j = 1; j <= k; ++j) X(t, j - 1) = x(t - j);
    }
    const Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
    return beta(k - 1);
}

/// Brute-force differencing by repeated first/seasonal differences, the reverse of the library's order.
inline std::vector<double> naive_difference(std::vector<double> y, int d, int D, int s) {
    auto step = [](const std::vector<double>& v, int lag) {
        std::vector<double> out;
        for (std::size_t t = static_cast<std::size_t>(lag); t < v.size(); ++t) {
            out.push_back(v[t] - v[t - static_cast<std::size_t>(lag)]);
        }
        return out;
    };
    for (int i = 0; i < d; ++i) y = step(y, 1);
    for (int i = 0; i < D; ++i) y = step(y, s);
    return y;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace bjts::testing
