#pragma once

#include "bjts/sarima.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bjts {

/// Counter-based generator: the i-th draw (i = 1, 2, ...) is the SplitMix64 finaliser applied to
/// seed + i * 0x9E3779B97F4A7C15. Normals come from the Box-Muller transform of two consecutive draws
/// u1 = (x1 >> 11 + 1) / 2^53 in (0, 1], u2 = (x2 >> 11) / 2^53 in [0, 1), giving
/// sqrt(-2 ln u1) cos(2 pi u2) and sqrt(-2 ln u1) sin(2 pi u2) in that order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();
    double next_normal();

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    std::optional<double> spare_;
};

struct SimulationConfig {
    SarimaSpec spec;
    ArmaCoefficients coefficients;
    double delta = 0.0;
    double sigma = 1.0;
    int length = 0;
    std::optional<int> burn_in;  // defaults to 10 x the largest expanded polynomial degree
    std::uint64_t seed = 0;
    Period start{2000, 1};
};

struct SimulationResult {
    TimeSeries series;            // original scale, `length` observations
    std::vector<double> z;        // differenced-scale process aligned with `series`
    std::vector<double> shocks;   // Gaussian shocks aligned with `series`
};

/// Runs the ARMA recursion on the differenced scale from zero presample values, integrates the
/// differencing levels from zero, and discards the burn-in prefix.
SimulationResult simulate(const SimulationConfig& cfg);

}  // namespace bjts
