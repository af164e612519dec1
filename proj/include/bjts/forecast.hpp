#pragma once

#include "bjts/sarima.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bjts {

struct ForecastResult {
    Period origin;  // last observed period
    int horizon = 0;
    std::vector<double> points;  // original scale, steps 1..horizon

    [[nodiscard]] Period period_at(int step) const { return origin.plus(step); }
    /// `period,forecast` CSV.
    [[nodiscard]] std::string to_csv() const;
};

/// Conditional-expectation forecasts: future shocks are zero, observed residuals feed the MA terms,
/// and the differenced-scale path is integrated back onto the observed series.
ForecastResult forecast(const FittedModel& model, int horizon);

/// One-step-ahead in-sample fitted values y_t - a_t for the observations after the differencing warmup.
TimeSeries fitted_values(const FittedModel& model);

struct AccuracyReport {
    double rmse = 0.0;
    double mad = 0.0;
    std::optional<double> mape;  // percent; absent when an actual value is zero
    double theil_u = 0.0;        // U1 = rmse / (sqrt(mean a^2) + sqrt(mean p^2))
    std::vector<std::string> warnings;
};

AccuracyReport accuracy(std::span<const double> actual, std::span<const double> predicted);

}  // namespace bjts
