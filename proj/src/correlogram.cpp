#include "bjts/correlogram.hpp"

#include "bjts/errors.hpp"
#include "bjts/stats.hpp"

#include <cmath>

#include <fmt/format.h>

namespace bjts {

std::vector<double> acf(std::span<const double> values, int max_lag) {
    const auto T = static_cast<int>(values.size());
    if (max_lag < 1) {
        throw InputError(fmt::format("max_lag must be >= 1, got {}", max_lag));
    }
    if (T < max_lag + 1) {
        throw LengthError(fmt::format("acf to lag {} needs at least {} observations, got {}", max_lag, max_lag + 1, T));
    }
    const double m = stats::mean(values);
    double denom = 0.0;
    for (double v : values) {
        denom += (v - m) * (v - m);
    }
    if (!(denom > 0.0) || denom <= 1e-300) {
        throw DegenerateSeriesError("series is constant (zero variance); autocorrelations are undefined");
    }
    std::vector<double> r(static_cast<std::size_t>(max_lag));
    for (int k = 1; k <= max_lag; ++k) {
        double num = 0.0;
        for (int t = 0; t + k < T; ++t) {
            num += (values[t] - m) * (values[t + k] - m);
        }
        r[k - 1] = num / denom;
    }
    return r;
}

std::vector<double> pacf_from_acf(std::span<const double> ac) {
    const std::size_t K = ac.size();
    std::vector<double> pac(K);
    std::vector<double> phi;  // current order-k coefficients
    double v = 1.0;           // innovation variance ratio
    for (std::size_t k = 1; k <= K; ++k) {
        double num = ac[k - 1];
        for (std::size_t j = 1; j < k; ++j) {
            num -= phi[j - 1] * ac[k - j - 1];
        }
        if (v <= 1e-12) {
            throw NumericalDegeneracyError(
                fmt::format("Durbin-Levinson pivot vanished at lag {} (prediction variance {:.3g})", k, v));
        }
        const double kk = num / v;
        std::vector<double> next(k);
        for (std::size_t j = 1; j < k; ++j) {
            next[j - 1] = phi[j - 1] - kk * phi[k - j - 1];
        }
        next[k - 1] = kk;
        phi = std::move(next);
        v *= (1.0 - kk * kk);
        pac[k - 1] = kk;
    }
    return pac;
}

std::vector<double> pacf(std::span<const double> values, int max_lag) {
    if (2 * max_lag >= static_cast<int>(values.size())) {
        throw LengthError(fmt::format("pacf to lag {} needs more than {} observations, got {}", max_lag, 2 * max_lag,
                                      values.size()));
    }
    return pacf_from_acf(acf(values, max_lag));
}

std::vector<LjungBoxRow> ljung_box(std::span<const double> ac, int T, int df_adjust) {
    if (T <= static_cast<int>(ac.size())) {
        throw LengthError(fmt::format("Ljung-Box needs T > max lag ({} <= {})", T, ac.size()));
    }
    if (df_adjust < 0) {
        throw InputError("df_adjust must be >= 0");
    }
    std::vector<LjungBoxRow> rows;
    rows.reserve(ac.size());
    const double scale = static_cast<double>(T) * (T + 2.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < ac.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        sum += ac[i] * ac[i] / static_cast<double>(T - k);
        LjungBoxRow row{scale * sum, std::nullopt};
        if (k > df_adjust) {
            row.prob = stats::chi_square_sf(row.q, k - df_adjust);
        }
        rows.push_back(row);
    }
    return rows;
}

Correlogram correlogram(std::span<const double> values, int max_lag, int df_adjust) {
    Correlogram c;
    c.T = static_cast<int>(values.size());
    c.ac = acf(values, max_lag);
    if (2 * max_lag >= c.T) {
        throw LengthError(fmt::format("correlogram to lag {} needs more than {} observations, got {}", max_lag,
                                      2 * max_lag, c.T));
    }
    c.pac = pacf_from_acf(c.ac);
    c.q = ljung_box(c.ac, c.T, df_adjust);
    c.band = 2.0 / std::sqrt(static_cast<double>(c.T));
    c.df_adjust = df_adjust;
    return c;
}

int count_significant_spikes(std::span<const double> values, int max_lag) {
    const auto r = acf(values, max_lag);
    const double band = 2.0 / std::sqrt(static_cast<double>(values.size()));
    int count = 0;
    for (double v : r) {
        if (std::abs(v) > band) {
            ++count;
        }
    }
    return count;
}

}  // namespace bjts
