#include "bjts/report.hpp"

#include <cmath>
#include <map>

#include <fmt/format.h>

namespace bjts::report {

namespace {

// 21-column bar centred on '|', one '*' per 0.1 of correlation.
std::string bar(double r) {
    constexpr int half = 10;
    std::string s(2 * half + 1, ' ');
    s[half] = '|';
    const int stars = std::min(half, static_cast<int>(std::lround(std::abs(r) * half)));
    for (int i = 1; i <= stars; ++i) {
        s[static_cast<std::size_t>(r < 0 ? half - i : half + i)] = '*';
    }
    return s;
}

std::string num(double v, int decimals = 3) {
    return std::isfinite(v) ? fmt::format("{:.{}f}", v, decimals) : std::string("NA");
}

}  // namespace

std::string correlogram_text(const Correlogram& c, std::string_view title) {
    std::string out = fmt::format("{}\nT = {}, band = +/-{:.3f}\n\n", title, c.T, c.band);
    out += fmt::format("{:<21}  {:<21}  {:>4}  {:>7}  {:>7}  {:>9}  {:>6}\n", "Autocorrelation", "Partial Correlation",
                       "Lag", "AC", "PAC", "Q-Stat", "Prob");
    for (int k = 0; k < c.max_lag(); ++k) {
        const auto& q = c.q[static_cast<std::size_t>(k)];
        out += fmt::format("{}  {}  {:>4}  {:>7.3f}  {:>7.3f}  {:>9.3f}  {:>6}\n", bar(c.ac[k]), bar(c.pac[k]), k + 1,
                           c.ac[k], c.pac[k], q.q, q.prob ? num(*q.prob) : std::string());
    }
    return out;
}

std::string correlogram_csv(const Correlogram& c) {
    std::string out = "lag,ac,pac,q_stat,prob\n";
    for (int k = 0; k < c.max_lag(); ++k) {
        const auto& q = c.q[static_cast<std::size_t>(k)];
        out += fmt::format("{},{},{},{},{}\n", k + 1, c.ac[k], c.pac[k], q.q, q.prob ? fmt::format("{}", *q.prob) : "");
    }
    return out;
}

std::string pivot_text(const SeasonalPivot& p) {
    std::string out = fmt::format("{:<6}", "Year");
    for (int m = 1; m <= 12; ++m) {
        out += fmt::format(" {:>10}", month_name(m).substr(0, 3));
    }
    out += "\n";
    for (std::size_t r = 0; r < p.years.size(); ++r) {
        out += fmt::format("{:<6}", p.years[r]);
        for (const auto& cell : p.cells[r]) {
            out += fmt::format(" {:>10}", cell ? num(*cell) : std::string("."));
        }
        out += "\n";
    }
    out += fmt::format("{:<6}", "Mean");
    for (const auto& m : p.column_means()) {
        out += fmt::format(" {:>10}", m ? num(*m) : std::string("."));
    }
    out += fmt::format("\n\nPeak month: {}\nTrough month: {}\n", month_name(p.peak_month()),
                       month_name(p.trough_month()));
    return out;
}

std::string pivot_csv(const SeasonalPivot& p) {
    std::string out = "year";
    for (int m = 1; m <= 12; ++m) {
        out += fmt::format(",{:02d}", m);
    }
    out += "\n";
    for (std::size_t r = 0; r < p.years.size(); ++r) {
        out += fmt::format("{}", p.years[r]);
        for (const auto& cell : p.cells[r]) {
            out += cell ? fmt::format(",{}", *cell) : std::string(",");
        }
        out += "\n";
    }
    return out;
}

std::string adf_text(const AdfResult& r, std::string_view label) {
    return fmt::format(
        "Augmented Dickey-Fuller test ({}; constant, no trend)\n"
        "  t-Statistic        {:>9.3f}\n"
        "  Prob. (one-sided)  {:>9.3f}\n"
        "  Critical 1%        {:>9.3f}\n"
        "  Critical 5%        {:>9.3f}\n"
        "  Critical 10%       {:>9.3f}\n"
        "  Lags used          {:>9}\n"
        "  Observations       {:>9}\n"
        "  Unit root rejected at 5%: {}\n",
        label, r.t_stat, r.p_value, r.critical.pct1, r.critical.pct5, r.critical.pct10, r.lags_used, r.nobs,
        r.rejects_at_5pct() ? "yes" : "no");
}

std::string advice_text(const DifferencingAdvice& a) {
    std::string out = adf_text(a.original, "original");
    if (a.regular) {
        out += "\n" + adf_text(*a.regular, "regular difference");
        out += fmt::format("  Significant ACF spikes (lags 1-36): {}\n", a.regular_spikes);
    }
    if (a.seasonal) {
        out += "\n" + adf_text(*a.seasonal, "seasonal difference");
        out += fmt::format("  Significant ACF spikes (lags 1-36): {}\n", a.seasonal_spikes);
    }
    out += fmt::format("\nRecommended differencing: {}\n", to_string(a.recommendation));
    return out;
}

std::string model_text(const FittedModel& m) {
    std::string out = fmt::format("Model: {}  (d={}, D={}, s={})\n", m.spec.describe(), m.spec.diff.d, m.spec.diff.D,
                                  m.spec.diff.s);
    out += fmt::format("Sample: {} to {}, {} differenced observations\n\n", m.series.start().to_string(),
                       m.series.end().to_string(), m.residuals.size());
    out += fmt::format("{:<12} {:>12} {:>12} {:>12}\n", "Variable", "Coefficient", "Std. Error", "t-Statistic");
    const auto names = m.spec.term_names();
    const auto x = m.coefficients.flatten();
    for (std::size_t i = 0; i < names.size(); ++i) {
        const double value = i < x.size() ? x[i] : m.delta;
        out += fmt::format("{:<12} {:>12} {:>12} {:>12}\n", names[i], num(value), num(m.std_errors[i]),
                           num(m.t_stats[i]));
    }
    out += fmt::format("\nSigma^2            {:>14}\n", num(m.sigma2));
    out += fmt::format("Log likelihood     {:>14}\n", num(m.loglik));
    out += fmt::format("AIC                {:>14}\n", num(m.aic));
    out += fmt::format("BIC                {:>14}\n", num(m.bic));
    out += fmt::format("Adjusted R^2       {:>14}\n", num(m.adj_r2));
    if (m.spec.constant) {
        out += fmt::format("Implied mean       {:>14}\n", num(m.implied_mean()));
    }
    out += fmt::format("\nAR polynomial: {}\nMA polynomial: {}\n", m.ar_poly.to_string(), m.ma_poly.to_string());
    if (m.constant_dropped) {
        out += "Constant dropped: |t| < 2\n";
    }
    if (!m.converged) {
        out += "WARNING: estimation did not converge; values are the best iterate found\n";
    }
    return out;
}

std::string lm_text(const std::vector<LmRow>& rows) {
    std::string out = fmt::format("{:<12} {:>12} {:>12} {:>12} {:>8}\n", "Variable", "Coefficient", "Std. Error",
                                  "t-Statistic", "Prob.");
    for (const auto& r : rows) {
        out += fmt::format("{:<12} {:>12} {:>12} {:>12} {:>8}\n", r.name, num(r.coefficient), num(r.std_error),
                           num(r.t_stat), num(r.p_value));
    }
    return out;
}

std::string diagnostics_text(const DiagnosticsReport& d) {
    std::string out = correlogram_text(d.residual_correlogram, "Correlogram of Residuals");
    out += "\nSerial correlation LM test (auxiliary regression on model regressors and lagged residuals)\n\n";
    out += lm_text(d.lm_rows);
    out += fmt::format("\nResidual ACF/PACF inside band: {}\nAll LM |t| < 2: {}\nAdequate: {}\n",
                       d.band_ok ? "yes" : "no", d.lm_ok ? "yes" : "no", d.adequate ? "yes" : "no");
    return out;
}

std::string leaderboard_text(const Leaderboard& b) {
    std::string out = fmt::format("{:<4} {:<48} {:>9} {:>9} {:>8}  {}\n", "No", "Model Variable", "BIC", "AIC",
                                  "Adj. R2", "Status");
    int i = 1;
    for (const auto& r : b.rows) {
        out += fmt::format("{:<4} {:<48} {:>9} {:>9} {:>8}  {}\n", i++, r.spec.describe(), num(r.bic), num(r.aic),
                           num(r.adj_r2), r.converged ? "ok" : "NOT CONVERGED");
    }
    return out;
}

std::string leaderboard_csv(const Leaderboard& b) {
    std::string out = "rank,model,bic,aic,adj_r2,n_params,converged\n";
    int i = 1;
    for (const auto& r : b.rows) {
        out += fmt::format("{},\"{}\",{},{},{},{},{}\n", i++, r.spec.describe(), r.bic, r.aic, r.adj_r2, r.n_params,
                           r.converged ? "true" : "false");
    }
    return out;
}

std::string forecast_text(const ForecastResult& f) {
    std::map<int, std::map<int, double>> by_year;  // year -> month -> value
    for (int h = 1; h <= f.horizon; ++h) {
        const Period p = f.period_at(h);
        by_year[p.year][p.month] = f.points[static_cast<std::size_t>(h - 1)];
    }
    std::string out = fmt::format("{:<10}", "Month");
    for (const auto& [year, _] : by_year) {
        out += fmt::format(" {:>12}", year);
    }
    out += "\n";
    for (int m = 1; m <= 12; ++m) {
        bool any = false;
        std::string line = fmt::format("{:<10}", month_name(m));
        for (const auto& [year, months] : by_year) {
            auto it = months.find(m);
            line += fmt::format(" {:>12}", it != months.end() ? num(it->second) : std::string());
            any = any || it != months.end();
        }
        if (any) {
            out += line + "\n";
        }
    }
    return out;
}

std::string accuracy_text(const AccuracyReport& a) {
    std::string out = fmt::format("RMSE      {:>12}\nMAD       {:>12}\nMAPE (%)  {:>12}\nTheil U   {:>12}\n",
                                  num(a.rmse), num(a.mad), a.mape ? num(*a.mape) : std::string("NA"), num(a.theil_u));
    for (const auto& w : a.warnings) {
        out += "warning: " + w + "\n";
    }
    return out;
}

}  // namespace bjts::report
