#include "bjts/sarima.hpp"

#include "bjts/nelder_mead.hpp"
#include "bjts/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include <Eigen/Dense>
#include <fmt/format.h>

namespace bjts {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_lags(const std::vector<int>& lags, std::string_view what, int multiple_of) {
    std::set<int> seen;
    for (int lag : lags) {
        if (lag < 1) {
            throw SpecificationError(fmt::format("{} lag must be positive, got {}", what, lag));
        }
        if (lag % multiple_of != 0) {
            throw SpecificationError(
                fmt::format("{} lag {} is not a multiple of the seasonal period {}", what, lag, multiple_of));
        }
        if (!seen.insert(lag).second) {
            throw SpecificationError(fmt::format("{} lag {} listed twice", what, lag));
        }
    }
}

std::vector<int> seasonal_powers(const std::vector<int>& lags, int s) {
    std::vector<int> out;
    out.reserve(lags.size());
    for (int lag : lags) {
        out.push_back(lag / s);
    }
    return out;
}

// Smallest root modulus in B of a factor written in B^s.
double seasonal_factor_modulus(const std::vector<int>& lags, const std::vector<double>& values, int s, double sign) {
    if (lags.empty()) {
        return std::numeric_limits<double>::infinity();
    }
    const auto powers = seasonal_powers(lags, s);
    const auto poly = LagPolynomial::from_terms(powers, values, sign);
    return std::pow(poly.min_root_modulus(), 1.0 / s);
}

double factor_modulus(const std::vector<int>& lags, const std::vector<double>& values, double sign) {
    if (lags.empty()) {
        return std::numeric_limits<double>::infinity();
    }
    return LagPolynomial::from_terms(lags, values, sign).min_root_modulus();
}

double ssr_of(std::span<const double> residuals) {
    double s = 0.0;
    for (double a : residuals) {
        s += a * a;
    }
    return s;
}

}  // namespace

void SarimaSpec::validate() const {
    diff.validate();
    check_lags(ar_lags, "AR", 1);
    check_lags(ma_lags, "MA", 1);
    check_lags(sar_lags, "SAR", diff.s);
    check_lags(sma_lags, "SMA", diff.s);
}

SarimaSpec SarimaSpec::canonical() const {
    SarimaSpec c = *this;
    std::sort(c.ar_lags.begin(), c.ar_lags.end());
    std::sort(c.ma_lags.begin(), c.ma_lags.end());
    std::sort(c.sar_lags.begin(), c.sar_lags.end());
    std::sort(c.sma_lags.begin(), c.sma_lags.end());
    return c;
}

int SarimaSpec::n_arma() const {
    return static_cast<int>(ar_lags.size() + ma_lags.size() + sar_lags.size() + sma_lags.size());
}

std::vector<std::string> SarimaSpec::term_names() const {
    std::vector<std::string> names;
    for (int l : ar_lags) names.push_back(fmt::format("AR({})", l));
    for (int l : sar_lags) names.push_back(fmt::format("SAR({})", l));
    for (int l : ma_lags) names.push_back(fmt::format("MA({})", l));
    for (int l : sma_lags) names.push_back(fmt::format("SMA({})", l));
    if (constant) names.emplace_back("C");
    return names;
}

std::string SarimaSpec::describe() const {
    auto names = term_names();
    std::string out;
    if (constant) {
        out = "C";
        names.pop_back();
    }
    for (const auto& n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out.empty() ? std::string("(white noise)") : out;
}

std::vector<double> ArmaCoefficients::flatten() const {
    std::vector<double> x;
    x.insert(x.end(), ar.begin(), ar.end());
    x.insert(x.end(), sar.begin(), sar.end());
    x.insert(x.end(), ma.begin(), ma.end());
    x.insert(x.end(), sma.begin(), sma.end());
    return x;
}

ArmaCoefficients ArmaCoefficients::unflatten(const SarimaSpec& spec, std::span<const double> x) {
    if (x.size() < static_cast<std::size_t>(spec.n_arma())) {
        throw SpecificationError("too few values for the specification's coefficients");
    }
    ArmaCoefficients c;
    auto it = x.begin();
    auto take = [&it](std::vector<double>& dst, std::size_t n) {
        dst.assign(it, it + static_cast<std::ptrdiff_t>(n));
        it += static_cast<std::ptrdiff_t>(n);
    };
    take(c.ar, spec.ar_lags.size());
    take(c.sar, spec.sar_lags.size());
    take(c.ma, spec.ma_lags.size());
    take(c.sma, spec.sma_lags.size());
    return c;
}

ExpandedPolynomials expand(const SarimaSpec& spec, const ArmaCoefficients& c) {
    auto check = [](std::string_view what, std::size_t lags, std::size_t values) {
        if (lags != values) {
            throw SpecificationError(fmt::format("{} side declares {} lags but {} coefficients", what, lags, values));
        }
    };
    check("AR", spec.ar_lags.size(), c.ar.size());
    check("SAR", spec.sar_lags.size(), c.sar.size());
    check("MA", spec.ma_lags.size(), c.ma.size());
    check("SMA", spec.sma_lags.size(), c.sma.size());
    const auto ar = LagPolynomial::from_terms(spec.ar_lags, c.ar, -1.0) *
                    LagPolynomial::from_terms(spec.sar_lags, c.sar, -1.0);
    const auto ma = LagPolynomial::from_terms(spec.ma_lags, c.ma, +1.0) *
                    LagPolynomial::from_terms(spec.sma_lags, c.sma, +1.0);
    return {ar, ma};
}

RootModuli root_moduli(const SarimaSpec& spec, const ArmaCoefficients& c) {
    const int s = spec.diff.s;
    RootModuli r{};
    r.ar = std::min(factor_modulus(spec.ar_lags, c.ar, -1.0), seasonal_factor_modulus(spec.sar_lags, c.sar, s, -1.0));
    r.ma = std::min(factor_modulus(spec.ma_lags, c.ma, +1.0), seasonal_factor_modulus(spec.sma_lags, c.sma, s, +1.0));
    return r;
}

std::vector<double> css_residuals(std::span<const double> z, const LagPolynomial& ar, const LagPolynomial& ma,
                                  double delta) {
    const double ar_at_one = ar.evaluate(1.0);
    const double mu = std::abs(ar_at_one) > 1e-12 ? delta / ar_at_one : 0.0;
    const auto ar_terms = ar.nonzero_terms();
    const auto ma_terms = ma.nonzero_terms();
    const auto T = static_cast<long>(z.size());
    std::vector<double> a(z.size());
    for (long t = 0; t < T; ++t) {
        double v = z[t] - mu;
        for (auto [k, c] : ar_terms) {
            if (t - k >= 0) {
                v += c * (z[t - k] - mu);
            }
        }
        for (auto [k, c] : ma_terms) {
            if (t - k >= 0) {
                v -= c * a[t - k];
            }
        }
        a[t] = v;
    }
    return a;
}

InformationCriteria criteria(double ssr, int T, int n_params) {
    if (!(ssr > 0.0) || !std::isfinite(ssr)) {
        throw DegenerateFitError(fmt::format("sum of squared residuals must be positive and finite, got {}", ssr));
    }
    if (T <= n_params) {
        throw LengthError(fmt::format("criteria need more observations than parameters ({} <= {})", T, n_params));
    }
    InformationCriteria ic;
    const double dT = T;
    ic.sigma2 = ssr / dT;
    ic.loglik = -0.5 * dT * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(ic.sigma2));
    ic.aic = -2.0 * ic.loglik / dT + 2.0 * n_params / dT;
    ic.bic = -2.0 * ic.loglik / dT + n_params * std::log(dT) / dT;
    return ic;
}

double FittedModel::implied_mean() const {
    const double at_one = ar_poly.evaluate(1.0);
    return std::abs(at_one) > 1e-12 ? delta / at_one : kNaN;
}

double FittedModel::parameter(std::string_view term) const {
    const auto names = spec.term_names();
    const auto x = coefficients.flatten();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == term) {
            return i < x.size() ? x[i] : delta;
        }
    }
    throw SpecificationError(fmt::format("model has no term {}", term));
}

double FittedModel::t_stat(std::string_view term) const {
    const auto names = spec.term_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == term) {
            return i < t_stats.size() ? t_stats[i] : kNaN;
        }
    }
    throw SpecificationError(fmt::format("model has no term {}", term));
}

FittedModel apply_model(const SarimaSpec& spec, const ArmaCoefficients& coefficients, double delta,
                        const TimeSeries& ts) {
    spec.validate();
    const auto polys = expand(spec, coefficients);
    const auto z = difference(ts, spec.diff);
    auto residuals = css_residuals(z.values, polys.ar, polys.ma, spec.constant ? delta : 0.0);
    const double ssr = ssr_of(residuals);
    const int T = static_cast<int>(z.values.size());
    const auto ic = criteria(ssr, T, spec.n_params());

    const double zbar = stats::mean(z.values);
    double tss = 0.0;
    for (double v : z.values) {
        tss += (v - zbar) * (v - zbar);
    }
    const double r2 = tss > 0.0 ? 1.0 - ssr / tss : kNaN;
    const double n = spec.n_params();
    const double adj = T - n - 1 > 0 ? 1.0 - (1.0 - r2) * (T - 1.0) / (T - n - 1.0) : kNaN;

    const auto n_terms = static_cast<std::size_t>(spec.n_params());
    return FittedModel{
        .spec = spec,
        .coefficients = coefficients,
        .delta = spec.constant ? delta : 0.0,
        .ar_poly = polys.ar,
        .ma_poly = polys.ma,
        .series = ts,
        .residuals = std::move(residuals),
        .ssr = ssr,
        .sigma2 = ic.sigma2,
        .loglik = ic.loglik,
        .aic = ic.aic,
        .bic = ic.bic,
        .adj_r2 = adj,
        .std_errors = std::vector<double>(n_terms, kNaN),
        .t_stats = std::vector<double>(n_terms, kNaN),
    };
}

namespace {

struct Objective {
    const SarimaSpec& spec;
    std::span<const double> z;
    EstimateOptions options;

    [[nodiscard]] double raw_ssr(std::span<const double> x) const {
        const auto c = ArmaCoefficients::unflatten(spec, x);
        const double delta = spec.constant ? x[static_cast<std::size_t>(spec.n_arma())] : 0.0;
        const auto polys = expand(spec, c);
        return ssr_of(css_residuals(z, polys.ar, polys.ma, delta));
    }

    [[nodiscard]] bool feasible(std::span<const double> x) const {
        const auto m = root_moduli(spec, ArmaCoefficients::unflatten(spec, x));
        return m.ar > options.root_margin && m.ma > options.root_margin;
    }

    double operator()(std::span<const double> x) const {
        const double ssr = raw_ssr(x);
        if (!std::isfinite(ssr)) {
            return std::numeric_limits<double>::infinity();
        }
        return feasible(x) ? ssr : std::max(ssr, 1e-300) * options.penalty_factor;
    }
};

// Central-difference Hessian of the unpenalised SSR.
Eigen::MatrixXd ssr_hessian(const Objective& f, const std::vector<double>& x, const std::vector<double>& scale) {
    const std::size_t n = x.size();
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h[i] = 1e-4 * std::max(std::abs(x[i]), scale[i]);
    }
    auto at = [&](std::size_t i, double di, std::size_t j, double dj) {
        auto p = x;
        p[i] += di;
        p[j] += dj;
        return f.raw_ssr(p);
    };
    const double f0 = f.raw_ssr(x);
    Eigen::MatrixXd H(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto p = x;
        p[i] += h[i];
        const double fp = f.raw_ssr(p);
        p[i] = x[i] - h[i];
        const double fm = f.raw_ssr(p);
        H(i, i) = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
        for (std::size_t j = 0; j < i; ++j) {
            const double v = (at(i, h[i], j, h[j]) - at(i, h[i], j, -h[j]) - at(i, -h[i], j, h[j]) +
                              at(i, -h[i], j, -h[j])) /
                             (4.0 * h[i] * h[j]);
            H(i, j) = v;
            H(j, i) = v;
        }
    }
    return H;
}

void attach_standard_errors(FittedModel& model, const Objective& f, const std::vector<double>& x,
                            const std::vector<double>& scale) {
    if (x.empty()) {
        return;
    }
    const Eigen::MatrixXd H = ssr_hessian(f, x, scale);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(H);
    if (!lu.isInvertible()) {
        return;
    }
    const Eigen::MatrixXd inv = lu.inverse();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = 2.0 * model.sigma2 * inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
        if (v > 0.0) {
            model.std_errors[i] = std::sqrt(v);
            model.t_stats[i] = x[i] / model.std_errors[i];
        }
    }
}

}  // namespace

FittedModel estimate(const SarimaSpec& spec, const TimeSeries& ts, const EstimateOptions& options) {
    spec.validate();
    const auto z = difference(ts, spec.diff);
    const int n = spec.n_params();
    if (static_cast<int>(z.values.size()) < 5 * n) {
        throw LengthError(fmt::format("{} differenced observations are fewer than 5 x {} parameters",
                                      z.values.size(), n));
    }

    Objective objective{spec, z.values, options};
    std::vector<double> start(static_cast<std::size_t>(n), 0.0);
    std::vector<double> step(static_cast<std::size_t>(n), 0.1);
    std::vector<double> scale(static_cast<std::size_t>(n), 1.0);
    if (spec.constant) {
        const double sd = std::sqrt(stats::variance(z.values));
        start.back() = stats::mean(z.values);
        step.back() = sd > 0.0 ? 0.1 * sd : 0.1;
        scale.back() = sd > 0.0 ? sd : 1.0;
    }

    NelderMeadOptions nm;
    nm.diameter_tolerance = options.diameter_tolerance;
    nm.max_evaluations = std::max(1, options.evaluations_per_parameter * n);
    nm.initial_step = step;
    const auto opt = nelder_mead(std::cref(objective), start, nm);

    if (n > 0 && !objective.feasible(opt.x)) {
        throw InfeasibleSpecError(fmt::format("no stationary and invertible parameter values found for {}",
                                              spec.describe()));
    }

    const auto coefficients = ArmaCoefficients::unflatten(spec, opt.x);
    const double delta = spec.constant ? opt.x.back() : 0.0;
    auto model = apply_model(spec, coefficients, delta, ts);
    model.evaluations = opt.evaluations;
    model.converged = opt.converged;
    attach_standard_errors(model, objective, opt.x, scale);

    if (!opt.converged) {
        throw EstimationFailedError(
            fmt::format("{}: simplex did not shrink below {:g} within {} evaluations", spec.describe(),
                        options.diameter_tolerance, nm.max_evaluations),
            std::move(model));
    }
    return model;
}

FittedModel estimate_with_constant_rule(const SarimaSpec& spec, const TimeSeries& ts, const EstimateOptions& options) {
    auto model = estimate(spec, ts, options);
    if (!spec.constant) {
        return model;
    }
    const double t = model.t_stat("C");
    if (std::isfinite(t) && std::abs(t) >= 2.0) {
        return model;
    }
    SarimaSpec reduced = spec;
    reduced.constant = false;
    auto refit = estimate(reduced, ts, options);
    refit.constant_dropped = true;
    return refit;
}

}  // namespace bjts
