#include "bjts/transform.hpp"

#include "bjts/errors.hpp"

#include <fmt/format.h>

namespace bjts {

void DifferenceSpec::validate() const {
    if (d < 0 || d > 2) {
        throw SpecificationError(fmt::format("regular differencing degree must be in 0..2, got {}", d));
    }
    if (D < 0 || D > 2) {
        throw SpecificationError(fmt::format("seasonal differencing degree must be in 0..2, got {}", D));
    }
    if (s < 1) {
        throw SpecificationError(fmt::format("seasonal period must be >= 1, got {}", s));
    }
}

std::vector<double> differencing_operator(const DifferenceSpec& spec) {
    std::vector<double> op{1.0};
    auto multiply = [&op](int lag) {
        std::vector<double> next(op.size() + static_cast<std::size_t>(lag), 0.0);
        for (std::size_t i = 0; i < op.size(); ++i) {
            next[i] += op[i];
            next[i + static_cast<std::size_t>(lag)] -= op[i];
        }
        op = std::move(next);
    };
    for (int i = 0; i < spec.D; ++i) {
        multiply(spec.s);
    }
    for (int i = 0; i < spec.d; ++i) {
        multiply(1);
    }
    return op;
}

DifferencedSeries difference(std::span<const double> y, const DifferenceSpec& spec) {
    spec.validate();
    const auto order = static_cast<std::size_t>(spec.order());
    if (y.size() <= order) {
        throw LengthError(fmt::format("differencing with d={}, D={}, s={} needs at least {} observations, got {}",
                                      spec.d, spec.D, spec.s, order + 1, y.size()));
    }
    std::vector<double> z(y.begin(), y.end());
    auto apply = [&z](std::size_t lag) {
        std::vector<double> next(z.size() - lag);
        for (std::size_t t = lag; t < z.size(); ++t) {
            next[t - lag] = z[t] - z[t - lag];
        }
        z = std::move(next);
    };
    for (int i = 0; i < spec.D; ++i) {
        apply(static_cast<std::size_t>(spec.s));
    }
    for (int i = 0; i < spec.d; ++i) {
        apply(1);
    }
    return DifferencedSeries{std::move(z), spec, std::vector<double>(y.begin(), y.begin() + order)};
}

DifferencedSeries difference(const TimeSeries& ts, const DifferenceSpec& spec) {
    return difference(ts.values(), spec);
}

namespace {

// Runs y_t = z_t - sum_{k>=1} op_k y_{t-k} forward from the tail of `history`.
void extend(std::vector<double>& history, const std::vector<double>& op, std::span<const double> z) {
    const std::size_t order = op.size() - 1;
    for (double zt : z) {
        const std::size_t t = history.size();
        double value = zt;
        for (std::size_t k = 1; k <= order; ++k) {
            if (op[k] != 0.0) {
                value -= op[k] * history[t - k];
            }
        }
        history.push_back(value);
    }
}

void check_warmup(const DifferencedSeries& z) {
    z.spec.validate();
    if (z.warmup.size() != static_cast<std::size_t>(z.spec.order())) {
        throw IntegrationError(fmt::format("integration needs {} warmup observations, have {}", z.spec.order(),
                                           z.warmup.size()));
    }
}

}  // namespace

std::vector<double> restore(const DifferencedSeries& z) {
    check_warmup(z);
    const auto op = differencing_operator(z.spec);
    std::vector<double> y = z.warmup;
    y.reserve(z.warmup.size() + z.values.size());
    extend(y, op, z.values);
    return y;
}

std::vector<double> integrate(const DifferencedSeries& z, std::span<const double> extension) {
    return integrate_from(restore(z), z.spec, extension);
}

std::vector<double> integrate_from(std::span<const double> history, const DifferenceSpec& spec,
                                   std::span<const double> extension) {
    spec.validate();
    const auto order = static_cast<std::size_t>(spec.order());
    if (history.size() < order) {
        throw IntegrationError(
            fmt::format("integration needs {} observations of history, have {}", order, history.size()));
    }
    std::vector<double> y(history.end() - static_cast<std::ptrdiff_t>(order), history.end());
    extend(y, differencing_operator(spec), extension);
    return {y.begin() + static_cast<std::ptrdiff_t>(order), y.end()};
}

}  // namespace bjts
