#pragma once

#include <optional>
#include <span>
#include <vector>

namespace bjts {

/// Sample autocorrelations r_1..r_K with the full-sample variance as denominator.
/// Requires values.size() >= max_lag + 1; throws DegenerateSeriesError on a constant series.
std::vector<double> acf(std::span<const double> values, int max_lag);

/// Sample partial autocorrelations by Durbin-Levinson recursion on the acf. Requires max_lag < T/2.
std::vector<double> pacf(std::span<const double> values, int max_lag);

/// Durbin-Levinson on a precomputed acf (r_1..r_K).
std::vector<double> pacf_from_acf(std::span<const double> ac);

struct LjungBoxRow {
    double q = 0.0;
    std::optional<double> prob;  // absent while lag <= df_adjust
};

/// Cumulative Ljung-Box Q(K) = T(T+2) sum r_k^2 / (T-k) with chi-square(K - df_adjust) p-values.
std::vector<LjungBoxRow> ljung_box(std::span<const double> ac, int T, int df_adjust = 0);

struct Correlogram {
    std::vector<double> ac;   // lags 1..K
    std::vector<double> pac;  // lags 1..K
    std::vector<LjungBoxRow> q;
    double band = 0.0;  // 2 / sqrt(T)
    int T = 0;
    int df_adjust = 0;

    [[nodiscard]] int max_lag() const { return static_cast<int>(ac.size()); }
};

Correlogram correlogram(std::span<const double> values, int max_lag, int df_adjust = 0);

/// Count of lags 1..max_lag with |r_k| above the 2/sqrt(T) band.
int count_significant_spikes(std::span<const double> values, int max_lag);

}  // namespace bjts
