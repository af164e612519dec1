#include "bjts/unitroot.hpp"

#include "bjts/correlogram.hpp"
#include "bjts/errors.hpp"
#include "bjts/regression.hpp"
#include "bjts/stats.hpp"
#include "bjts/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace bjts {

namespace {

// MacKinnon (2010) tau response surface, one variable, constant only:
// c = b0 + b1/T + b2/T^2 + b3/T^3 for the 1%, 5% and 10% levels.
constexpr double kCrit[3][4] = {
    {-3.43035, -6.5393, -16.786, -79.433},
    {-2.86154, -2.8903, -4.234, -40.040},
    {-2.56677, -1.5384, -2.809, 0.0},
};

// MacKinnon (1994) p-value surfaces, one variable, constant only.
constexpr double kTauMax = 2.74;
constexpr double kTauMin = -18.83;
constexpr double kTauStar = -1.61;
constexpr double kSmallP[3] = {2.1659, 1.4412, 0.038269};
constexpr double kLargeP[4] = {1.7339, 0.93202, -0.12745, -0.010368};

struct AdfFit {
    double t_stat;
    double aic;
    long nobs;
};

// Regression on rows t = first..T-1 of dy (dy index t means y[t+1]-y[t]).
AdfFit fit_adf(std::span<const double> y, int lags, int first_row) {
    const auto T = static_cast<int>(y.size());
    std::vector<double> dy(static_cast<std::size_t>(T - 1));
    for (int t = 1; t < T; ++t) {
        dy[t - 1] = y[t] - y[t - 1];
    }
    const int rows = T - 1 - first_row;
    const int cols = 2 + lags;
    Eigen::MatrixXd X(rows, cols);
    Eigen::VectorXd target(rows);
    for (int r = 0; r < rows; ++r) {
        const int t = first_row + r;  // index into dy
        target(r) = dy[t];
        X(r, 0) = 1.0;
        X(r, 1) = y[t];  // y_{t-1} relative to dy[t]
        for (int i = 1; i <= lags; ++i) {
            X(r, 1 + i) = dy[t - i];
        }
    }
    std::vector<std::string> names{"constant", "y(-1)"};
    for (int i = 1; i <= lags; ++i) {
        names.push_back(fmt::format("dy(-{})", i));
    }
    const auto res = ols(X, target, names);
    if (!(res.ssr > 0.0)) {
        throw DegenerateSeriesError("ADF regression fits perfectly; series is degenerate");
    }
    const double n = rows;
    const double aic = n * std::log(res.ssr / n) + 2.0 * cols;
    return AdfFit{res.t_stats(1), aic, rows};
}

double polyval(const double* c, int n, double x) {
    double acc = 0.0;
    for (int i = n - 1; i >= 0; --i) {
        acc = acc * x + c[i];
    }
    return acc;
}

}  // namespace

AdfCriticalValues adf_critical_values(int nobs) {
    const double inv = 1.0 / static_cast<double>(nobs);
    auto at = [inv](const double* b) { return b[0] + inv * (b[1] + inv * (b[2] + inv * b[3])); };
    return AdfCriticalValues{at(kCrit[0]), at(kCrit[1]), at(kCrit[2])};
}

double adf_p_value(double t_stat) {
    if (t_stat > kTauMax) {
        return 1.0;
    }
    if (t_stat < kTauMin) {
        return 0.0;
    }
    const double z = t_stat <= kTauStar ? polyval(kSmallP, 3, t_stat) : polyval(kLargeP, 4, t_stat);
    return stats::normal_cdf(z);
}

int schwert_max_lags(std::size_t T) {
    return static_cast<int>(std::floor(12.0 * std::pow(static_cast<double>(T) / 100.0, 0.25)));
}

AdfResult adf_test(std::span<const double> values, std::optional<int> max_lags) {
    const std::size_t T = values.size();
    int max_k = max_lags ? *max_lags : schwert_max_lags(T);
    if (max_k < 0) {
        throw InputError(fmt::format("max_lags must be >= 0, got {}", max_k));
    }
    if (T < static_cast<std::size_t>(20 + max_k)) {
        throw LengthError(fmt::format("ADF test with up to {} lags needs at least {} observations, got {}", max_k,
                                      20 + max_k, T));
    }
    if (!(stats::variance(values) > 0.0)) {
        throw DegenerateSeriesError("series is constant (zero variance); ADF test is undefined");
    }

    int best_k = 0;
    if (max_k > 0) {
        double best_aic = std::numeric_limits<double>::infinity();
        for (int k = 0; k <= max_k; ++k) {
            const double aic = fit_adf(values, k, max_k).aic;
            if (aic < best_aic) {
                best_aic = aic;
                best_k = k;
            }
        }
    }
    const auto fit = fit_adf(values, best_k, best_k);

    AdfResult r;
    r.t_stat = fit.t_stat;
    r.p_value = adf_p_value(fit.t_stat);
    r.lags_used = best_k;
    r.nobs = static_cast<int>(fit.nobs);
    r.critical = adf_critical_values(r.nobs);
    return r;
}

std::string_view to_string(DifferencingChoice c) {
    switch (c) {
        case DifferencingChoice::None:
            return "none";
        case DifferencingChoice::Regular:
            return "regular";
        case DifferencingChoice::Seasonal:
            return "seasonal";
    }
    return "?";
}

DifferencingAdvice decide_differencing(const TimeSeries& ts) {
    if (!(stats::variance(ts.values()) > 0.0)) {
        throw DegenerateSeriesError("series is constant (zero variance); nothing to difference");
    }
    DifferencingAdvice advice;
    advice.original = adf_test(ts.values());
    if (advice.original.rejects_at_5pct()) {
        advice.recommendation = DifferencingChoice::None;
        return advice;
    }

    auto spikes = [](const std::vector<double>& z) {
        const int lags = std::min(36, static_cast<int>(z.size()) - 1);
        return count_significant_spikes(z, lags);
    };

    const auto regular = difference(ts, DifferenceSpec{1, 0, ts.frequency()}).values;
    advice.regular = adf_test(regular);
    advice.regular_spikes = spikes(regular);

    const int s = ts.frequency();
    if (s < 2) {
        advice.recommendation = DifferencingChoice::Regular;
        return advice;
    }
    const auto seasonal = difference(ts, DifferenceSpec{0, 1, s}).values;
    advice.seasonal = adf_test(seasonal);
    advice.seasonal_spikes = spikes(seasonal);

    const bool regular_ok = advice.regular->rejects_at_5pct();
    const bool seasonal_ok = advice.seasonal->rejects_at_5pct();
    if (regular_ok && !seasonal_ok) {
        advice.recommendation = DifferencingChoice::Regular;
    } else if (seasonal_ok && !regular_ok) {
        advice.recommendation = DifferencingChoice::Seasonal;
    } else {
        advice.recommendation = advice.regular_spikes < advice.seasonal_spikes ? DifferencingChoice::Regular
                                                                               : DifferencingChoice::Seasonal;
    }
    return advice;
}

}  // namespace bjts
