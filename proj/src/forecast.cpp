#include "bjts/forecast.hpp"

#include "bjts/errors.hpp"

#include <cmath>

#include <fmt/format.h>

namespace bjts {

namespace {

constexpr int kMaxYear = 9999;

}  // namespace

std::string ForecastResult::to_csv() const {
    std::string out = "period,forecast\n";
    for (int h = 1; h <= horizon; ++h) {
        out += fmt::format("{},{}\n", period_at(h).to_string(), points[static_cast<std::size_t>(h - 1)]);
    }
    return out;
}

ForecastResult forecast(const FittedModel& model, int horizon) {
    if (horizon < 1) {
        throw HorizonError(fmt::format("horizon must be >= 1, got {}", horizon));
    }
    const Period origin = model.series.end();
    if (origin.ordinal() + horizon > Period{kMaxYear, 12}.ordinal()) {
        throw HorizonError(fmt::format("horizon {} runs past {}-12", horizon, kMaxYear));
    }

    const auto z = model.differenced().values;
    const auto T = static_cast<long>(z.size());
    const double mu = model.spec.constant ? model.implied_mean() : 0.0;
    const auto ar_terms = model.ar_poly.nonzero_terms();
    const auto ma_terms = model.ma_poly.nonzero_terms();

    // Deviations from mu; presample deviations and shocks are zero, future shocks are zero.
    std::vector<double> dev(static_cast<std::size_t>(T + horizon), 0.0);
    for (long t = 0; t < T; ++t) {
        dev[static_cast<std::size_t>(t)] = z[static_cast<std::size_t>(t)] - mu;
    }
    auto shock = [&](long t) { return t >= 0 && t < T ? model.residuals[static_cast<std::size_t>(t)] : 0.0; };

    std::vector<double> zf(static_cast<std::size_t>(horizon));
    for (long t = T; t < T + horizon; ++t) {
        double v = 0.0;
        for (auto [k, c] : ar_terms) {
            if (t - k >= 0) {
                v -= c * dev[static_cast<std::size_t>(t - k)];
            }
        }
        for (auto [k, c] : ma_terms) {
            v += c * shock(t - k);
        }
        dev[static_cast<std::size_t>(t)] = v;
        zf[static_cast<std::size_t>(t - T)] = v + mu;
    }

    ForecastResult result;
    result.origin = origin;
    result.horizon = horizon;
    result.points = integrate_from(model.series.values(), model.spec.diff, zf);
    for (double p : result.points) {
        if (!std::isfinite(p)) {
            throw NumericalDegeneracyError("forecast path diverged to a non-finite value");
        }
    }
    return result;
}

TimeSeries fitted_values(const FittedModel& model) {
    const auto m = static_cast<std::size_t>(model.spec.diff.order());
    std::vector<double> fitted(model.residuals.size());
    for (std::size_t i = 0; i < fitted.size(); ++i) {
        fitted[i] = model.series[i + m] - model.residuals[i];
    }
    return TimeSeries(model.series.period_at(m), std::move(fitted), model.series.frequency());
}

AccuracyReport accuracy(std::span<const double> actual, std::span<const double> predicted) {
    if (actual.size() != predicted.size()) {
        throw DimensionError(
            fmt::format("actual has {} values but predicted has {}", actual.size(), predicted.size()));
    }
    if (actual.empty()) {
        throw DimensionError("accuracy needs at least one actual/predicted pair");
    }
    const auto n = static_cast<double>(actual.size());
    double se = 0.0;
    double ae = 0.0;
    double ape = 0.0;
    double a2 = 0.0;
    double p2 = 0.0;
    bool zero_actual = false;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double e = actual[i] - predicted[i];
        se += e * e;
        ae += std::abs(e);
        a2 += actual[i] * actual[i];
        p2 += predicted[i] * predicted[i];
        if (actual[i] == 0.0) {
            zero_actual = true;
        } else {
            ape += std::abs(e) / std::abs(actual[i]);
        }
    }
    AccuracyReport r;
    r.rmse = std::sqrt(se / n);
    r.mad = ae / n;
    if (zero_actual) {
        r.warnings.emplace_back("MAPE undefined: at least one actual value is zero");
    } else {
        r.mape = 100.0 * ape / n;
    }
    const double denom = std::sqrt(a2 / n) + std::sqrt(p2 / n);
    r.theil_u = denom > 0.0 ? r.rmse / denom : 0.0;
    return r;
}

}  // namespace bjts
