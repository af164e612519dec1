#include "bjts/diagnostics.hpp"

#include "bjts/errors.hpp"
#include "bjts/regression.hpp"
#include "bjts/stats.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace bjts {

Correlogram residual_check(const FittedModel& model, int max_lag) {
    return correlogram(model.residuals, max_lag, model.spec.n_arma());
}

std::vector<LmRow> lm_test(const FittedModel& model, int lags) {
    if (lags < 1) {
        throw InputError(fmt::format("LM test needs at least one lag, got {}", lags));
    }
    const auto& spec = model.spec;
    const auto& a = model.residuals;
    const auto T = static_cast<long>(a.size());
    const long n_cols = spec.n_params() + lags;
    if (T <= n_cols) {
        throw LengthError(fmt::format("LM test with {} regressors needs more than {} residuals, got {}", n_cols,
                                      n_cols, T));
    }

    const auto z = model.differenced().values;
    const double mu = spec.constant ? model.implied_mean() : 0.0;
    auto lagged = [T](const std::vector<double>& x, long t, long k, double presample) {
        return t - k >= 0 && t - k < T ? x[static_cast<std::size_t>(t - k)] : presample;
    };

    Eigen::MatrixXd X(T, n_cols);
    std::vector<std::string> names;
    long col = 0;
    auto add_column = [&](std::string name, auto&& value_at) {
        for (long t = 0; t < T; ++t) {
            X(t, col) = value_at(t);
        }
        names.push_back(std::move(name));
        ++col;
    };
    for (int k : spec.ar_lags) {
        add_column(fmt::format("AR({})", k), [&](long t) { return lagged(z, t, k, mu) - mu; });
    }
    for (int k : spec.sar_lags) {
        add_column(fmt::format("SAR({})", k), [&](long t) { return lagged(z, t, k, mu) - mu; });
    }
    for (int k : spec.ma_lags) {
        add_column(fmt::format("MA({})", k), [&](long t) { return lagged(a, t, k, 0.0); });
    }
    for (int k : spec.sma_lags) {
        add_column(fmt::format("SMA({})", k), [&](long t) { return lagged(a, t, k, 0.0); });
    }
    if (spec.constant) {
        add_column("C", [](long) { return 1.0; });
    }
    for (int k = 1; k <= lags; ++k) {
        add_column(fmt::format("RESID(-{})", k), [&](long t) { return lagged(a, t, k, 0.0); });
    }

    const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(a.data(), T);
    const auto fit = ols(X, y, names);
    std::vector<LmRow> rows;
    rows.reserve(names.size());
    for (std::size_t j = 0; j < names.size(); ++j) {
        const auto i = static_cast<Eigen::Index>(j);
        rows.push_back(LmRow{names[j], fit.coefficients(i), fit.std_errors(i), fit.t_stats(i),
                             stats::student_t_two_sided(fit.t_stats(i), static_cast<double>(fit.dof))});
    }
    return rows;
}

bool within_band(const Correlogram& c, int max_lag) {
    const int K = std::min(max_lag, c.max_lag());
    for (int k = 0; k < K; ++k) {
        if (std::abs(c.ac[k]) >= c.band || std::abs(c.pac[k]) >= c.band) {
            return false;
        }
    }
    return true;
}

bool lm_rows_ok(const std::vector<LmRow>& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const LmRow& r) { return std::abs(r.t_stat) < kLmAdequacyThreshold; });
}

DiagnosticsReport diagnose(const FittedModel& model, int max_lag, int lm_lags) {
    DiagnosticsReport report;
    report.residual_correlogram = residual_check(model, max_lag);
    report.lm_rows = lm_test(model, lm_lags);
    report.band_ok = within_band(report.residual_correlogram, max_lag);
    report.lm_ok = lm_rows_ok(report.lm_rows);
    report.adequate = report.band_ok && report.lm_ok;
    return report;
}

}  // namespace bjts
