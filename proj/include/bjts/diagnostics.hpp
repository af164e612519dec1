#pragma once

#include "bjts/correlogram.hpp"
#include "bjts/sarima.hpp"

#include <string>
#include <vector>

namespace bjts {

/// Residual correlogram with the Ljung-Box degrees of freedom reduced by the number of ARMA coefficients.
Correlogram residual_check(const FittedModel& model, int max_lag = 36);

struct LmRow {
    std::string name;
    double coefficient = 0.0;
    double std_error = 0.0;
    double t_stat = 0.0;
    double p_value = 1.0;
};

/// Serial-correlation LM test. Regresses a_t on the model's own lagged regressors (differenced series at
/// the AR lags, residuals at the MA lags, a constant when the model has one) plus RESID(-1..-lags), with
/// zeros for lags that fall before the sample.
std::vector<LmRow> lm_test(const FittedModel& model, int lags = 12);

/// Verdict thresholds: residual |ac| and |pac| inside +-2/sqrt(T) up to max_lag, every LM |t| below 2.
constexpr double kLmAdequacyThreshold = 2.0;

struct DiagnosticsReport {
    Correlogram residual_correlogram;
    std::vector<LmRow> lm_rows;
    bool band_ok = false;
    bool lm_ok = false;
    bool adequate = false;
};

bool within_band(const Correlogram& c, int max_lag);
bool lm_rows_ok(const std::vector<LmRow>& rows);

DiagnosticsReport diagnose(const FittedModel& model, int max_lag = 36, int lm_lags = 12);

}  // namespace bjts
