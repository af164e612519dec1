#pragma once

#include "bjts/series.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace bjts {

struct AdfCriticalValues {
    double pct1 = 0.0;
    double pct5 = 0.0;
    double pct10 = 0.0;
};

enum class Deterministic { Constant };

struct AdfResult {
    double t_stat = 0.0;
    double p_value = 1.0;
    AdfCriticalValues critical;
    int lags_used = 0;
    int nobs = 0;  // observations in the test regression
    Deterministic deterministic = Deterministic::Constant;

    [[nodiscard]] bool rejects_at_5pct() const { return t_stat < critical.pct5; }
};

/// Finite-sample critical values for the constant-only Dickey-Fuller t-test,
/// from MacKinnon's response surfaces.
AdfCriticalValues adf_critical_values(int nobs);

/// Approximate one-sided p-value of the constant-only Dickey-Fuller t-statistic (MacKinnon 1994 surfaces).
double adf_p_value(double t_stat);

/// floor(12 * (T/100)^(1/4)).
int schwert_max_lags(std::size_t T);

/// Regresses dy_t on [1, y_{t-1}, dy_{t-1..t-k}]; k minimises AIC over 0..max_lags on a common sample.
AdfResult adf_test(std::span<const double> values, std::optional<int> max_lags = std::nullopt);

enum class DifferencingChoice { None, Regular, Seasonal };

std::string_view to_string(DifferencingChoice c);

struct DifferencingAdvice {
    DifferencingChoice recommendation = DifferencingChoice::None;
    AdfResult original;
    std::optional<AdfResult> regular;
    std::optional<AdfResult> seasonal;
    int regular_spikes = 0;
    int seasonal_spikes = 0;
};

/// Tests the original, regular-differenced and seasonally-differenced series. A stationary original
/// needs no differencing; otherwise the passing variant with fewer significant ACF spikes over lags
/// 1..36 wins, ties going to seasonal.
DifferencingAdvice decide_differencing(const TimeSeries& ts);

}  // namespace bjts
