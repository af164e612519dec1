#include "bjts/simulate.hpp"

#include "bjts/errors.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace bjts {

std::uint64_t CounterRng::next_u64() {
    ++counter_;
    std::uint64_t z = seed_ + counter_ * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double CounterRng::next_normal() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * kInv53;
    const double u2 = static_cast<double>(next_u64() >> 11) * kInv53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    return r * std::cos(angle);
}

SimulationResult simulate(const SimulationConfig& cfg) {
    cfg.spec.validate();
    if (!(cfg.sigma > 0.0) || !std::isfinite(cfg.sigma)) {
        throw InvalidConfigError(fmt::format("shock standard deviation must be positive, got {}", cfg.sigma));
    }
    if (cfg.length < 1) {
        throw InvalidConfigError(fmt::format("simulation length must be >= 1, got {}", cfg.length));
    }
    const auto polys = expand(cfg.spec, cfg.coefficients);
    const auto moduli = root_moduli(cfg.spec, cfg.coefficients);
    if (!(moduli.ar > 1.0) || !(moduli.ma > 1.0)) {
        throw InvalidConfigError(fmt::format(
            "coefficients violate the root condition (smallest AR root modulus {:.4f}, MA {:.4f})", moduli.ar,
            moduli.ma));
    }
    const int max_degree = std::max(polys.ar.degree(), polys.ma.degree());
    const int burn = cfg.burn_in.value_or(10 * max_degree);
    if (burn < 10 * max_degree) {
        throw InvalidConfigError(
            fmt::format("burn-in {} is shorter than 10 x the largest polynomial degree ({})", burn, 10 * max_degree));
    }

    const auto total = static_cast<std::size_t>(burn + cfg.length);
    CounterRng rng(cfg.seed);
    std::vector<double> a(total);
    for (auto& v : a) {
        v = cfg.sigma * rng.next_normal();
    }

    // z_t = delta - sum ar_k z_{t-k} + a_t + sum ma_k a_{t-k}, zero presample.
    const auto ar_terms = polys.ar.nonzero_terms();
    const auto ma_terms = polys.ma.nonzero_terms();
    std::vector<double> z(total);
    for (std::size_t t = 0; t < total; ++t) {
        double v = cfg.delta + a[t];
        for (auto [k, c] : ar_terms) {
            if (t >= static_cast<std::size_t>(k)) v -= c * z[t - static_cast<std::size_t>(k)];
        }
        for (auto [k, c] : ma_terms) {
            if (t >= static_cast<std::size_t>(k)) v += c * a[t - static_cast<std::size_t>(k)];
        }
        z[t] = v;
    }

    // y_t = z_t - sum_{k>=1} op_k y_{t-k} with zero presample levels.
    const auto op = differencing_operator(cfg.spec.diff);
    std::vector<double> y(total);
    for (std::size_t t = 0; t < total; ++t) {
        double v = z[t];
        for (std::size_t k = 1; k < op.size() && k <= t; ++k) {
            if (op[k] != 0.0) v -= op[k] * y[t - k];
        }
        y[t] = v;
    }

    const auto skip = static_cast<std::ptrdiff_t>(burn);
    return SimulationResult{
        TimeSeries(cfg.start, std::vector<double>(y.begin() + skip, y.end()), cfg.spec.diff.s),
        std::vector<double>(z.begin() + skip, z.end()),
        std::vector<double>(a.begin() + skip, a.end()),
    };
}

}  // namespace bjts
