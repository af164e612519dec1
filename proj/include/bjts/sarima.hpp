#pragma once

#include "bjts/errors.hpp"
#include "bjts/lag_polynomial.hpp"
#include "bjts/series.hpp"
#include "bjts/transform.hpp"

#include <span>
#include <string>
#include <vector>

namespace bjts {

/// Subset-lag seasonal ARIMA specification. Every listed lag carries one coefficient, so
/// `ar_lags = {9}` is the single term AR(9). Seasonal lags are given in months (multiples of s).
struct SarimaSpec {
    std::vector<int> ar_lags;
    std::vector<int> ma_lags;
    std::vector<int> sar_lags;
    std::vector<int> sma_lags;
    DifferenceSpec diff;
    bool constant = false;

    void validate() const;
    /// Copy with every lag list sorted ascending.
    [[nodiscard]] SarimaSpec canonical() const;

    [[nodiscard]] int n_arma() const;
    [[nodiscard]] int n_params() const { return n_arma() + (constant ? 1 : 0); }
    /// Parameter names in estimation order: AR(..), SAR(..), MA(..), SMA(..), then C.
    [[nodiscard]] std::vector<std::string> term_names() const;
    /// Table-style label, e.g. "AR(9), SAR(12), MA(14), SMA(24)".
    [[nodiscard]] std::string describe() const;

    friend bool operator==(const SarimaSpec&, const SarimaSpec&) = default;
};

/// Coefficient values aligned with the lag lists of a SarimaSpec.
struct ArmaCoefficients {
    std::vector<double> ar;
    std::vector<double> sar;
    std::vector<double> ma;
    std::vector<double> sma;

    /// Flattened in estimation order (ar, sar, ma, sma).
    [[nodiscard]] std::vector<double> flatten() const;
    static ArmaCoefficients unflatten(const SarimaSpec& spec, std::span<const double> x);

    friend bool operator==(const ArmaCoefficients&, const ArmaCoefficients&) = default;
};

struct ExpandedPolynomials {
    LagPolynomial ar;  // (1 - sum phi_i B^i)(1 - sum Phi_j B^j)
    LagPolynomial ma;  // (1 + sum theta_i B^i)(1 + sum Theta_j B^j)
};

ExpandedPolynomials expand(const SarimaSpec& spec, const ArmaCoefficients& coefficients);

/// Smallest root modulus (in B) of the autoregressive and moving-average sides, computed factor by factor.
struct RootModuli {
    double ar;
    double ma;
};
RootModuli root_moduli(const SarimaSpec& spec, const ArmaCoefficients& coefficients);

/// Conditional-sum-of-squares residuals: a_t = ar(B)(z_t - mu) - (ma(B) - 1) a_t with mu = delta / ar(1),
/// presample deviations z - mu and presample shocks set to zero.
std::vector<double> css_residuals(std::span<const double> z, const LagPolynomial& ar, const LagPolynomial& ma,
                                  double delta);

struct InformationCriteria {
    double sigma2 = 0.0;
    double loglik = 0.0;
    double aic = 0.0;
    double bic = 0.0;
};

/// sigma2 = ssr/T, l = -(T/2)(1 + log 2pi + log sigma2), AIC = -2l/T + 2n/T, BIC = -2l/T + n log(T)/T.
InformationCriteria criteria(double ssr, int T, int n_params);

struct FittedModel {
    SarimaSpec spec;
    ArmaCoefficients coefficients;
    double delta = 0.0;
    LagPolynomial ar_poly;
    LagPolynomial ma_poly;
    TimeSeries series;  // original-scale observations the model was fitted on
    std::vector<double> residuals;
    double ssr = 0.0;
    double sigma2 = 0.0;
    double loglik = 0.0;
    double aic = 0.0;
    double bic = 0.0;
    double adj_r2 = 0.0;
    std::vector<double> std_errors;  // aligned with spec.term_names(); NaN when unavailable
    std::vector<double> t_stats;
    bool converged = true;
    int evaluations = 0;
    bool constant_dropped = false;

    [[nodiscard]] DifferencedSeries differenced() const { return difference(series, spec.diff); }
    /// mu = delta / ar(1).
    [[nodiscard]] double implied_mean() const;
    /// Estimated value by term name ("AR(9)", "C", ...).
    [[nodiscard]] double parameter(std::string_view term) const;
    [[nodiscard]] double t_stat(std::string_view term) const;
};

/// Computes residuals, criteria and adjusted R^2 for fixed coefficients. Standard errors are left NaN.
FittedModel apply_model(const SarimaSpec& spec, const ArmaCoefficients& coefficients, double delta,
                        const TimeSeries& ts);

/// Raised when the simplex budget runs out; carries the best iterate found.
class EstimationFailedError : public ComputationError {
public:
    EstimationFailedError(const std::string& what, FittedModel best)
        : ComputationError(what), best_(std::move(best)) {}
    [[nodiscard]] const FittedModel& best() const { return best_; }

private:
    FittedModel best_;
};

struct EstimateOptions {
    double diameter_tolerance = 1e-8;
    int evaluations_per_parameter = 2000;
    double root_margin = 1.001;
    double penalty_factor = 1e6;
};

/// Conditional least squares by Nelder-Mead from zero coefficients (delta from the differenced mean).
FittedModel estimate(const SarimaSpec& spec, const TimeSeries& ts, const EstimateOptions& options = {});

/// Fits with the constant and refits without it when |t(C)| < 2.
FittedModel estimate_with_constant_rule(const SarimaSpec& spec, const TimeSeries& ts,
                                        const EstimateOptions& options = {});

}  // namespace bjts
