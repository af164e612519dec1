#include "bjts/model_io.hpp"

#include "bjts/errors.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace bjts {

using nlohmann::json;

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j) {
    if (j.is_null()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (!j.is_number()) {
        throw ParseError(fmt::format("expected a number, got {}", j.dump()));
    }
    return j.get<double>();
}

std::vector<int> lags_from(const json& j, const char* key) {
    if (!j.contains(key)) {
        return {};
    }
    const auto& v = j.at(key);
    if (!v.is_array()) {
        throw ParseError(fmt::format("'{}' must be an array of lags", key));
    }
    std::vector<int> lags;
    for (const auto& e : v) {
        if (!e.is_number_integer()) {
            throw ParseError(fmt::format("'{}' must contain integers, got {}", key, e.dump()));
        }
        lags.push_back(e.get<int>());
    }
    return lags;
}

template <typename Fn>
auto guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw ParseError(fmt::format("malformed JSON document: {}", e.what()));
    }
}

json by_term(const std::vector<std::string>& names, const std::vector<double>& values) {
    json out = json::object();
    for (std::size_t i = 0; i < names.size() && i < values.size(); ++i) {
        out[names[i]] = number(values[i]);
    }
    return out;
}

std::vector<double> from_terms(const std::vector<std::string>& names, const json& j) {
    std::vector<double> out;
    for (const auto& n : names) {
        out.push_back(j.contains(n) ? number_from(j.at(n)) : std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

}  // namespace

json spec_to_json(const SarimaSpec& spec) {
    return json{{"ar", spec.ar_lags},   {"ma", spec.ma_lags}, {"sar", spec.sar_lags},
                {"sma", spec.sma_lags}, {"d", spec.diff.d},   {"D", spec.diff.D},
                {"s", spec.diff.s},     {"constant", spec.constant}};
}

SarimaSpec spec_from_json(const json& j) {
    return guarded([&] {
        if (!j.is_object()) {
            throw ParseError("model specification must be a JSON object");
        }
        SarimaSpec spec;
        spec.ar_lags = lags_from(j, "ar");
        spec.ma_lags = lags_from(j, "ma");
        spec.sar_lags = lags_from(j, "sar");
        spec.sma_lags = lags_from(j, "sma");
        spec.diff.d = j.value("d", 0);
        spec.diff.D = j.value("D", 0);
        spec.diff.s = j.value("s", 12);
        spec.constant = j.value("constant", false);
        spec.validate();
        return spec;
    });
}

std::vector<SarimaSpec> candidates_from_json(std::string_view text) {
    return guarded([&] {
        const auto j = json::parse(text);
        if (!j.is_array()) {
            throw ParseError("candidate file must hold a JSON array of specifications");
        }
        std::vector<SarimaSpec> specs;
        for (const auto& e : j) {
            specs.push_back(spec_from_json(e));
        }
        return specs;
    });
}

json coefficients_to_json(const SarimaSpec& spec, const ArmaCoefficients& c) {
    auto names = spec.term_names();
    if (spec.constant) {
        names.pop_back();
    }
    return by_term(names, c.flatten());
}

ArmaCoefficients coefficients_from_json(const SarimaSpec& spec, const json& j) {
    return guarded([&] {
        auto names = spec.term_names();
        if (spec.constant) {
            names.pop_back();
        }
        for (const auto& n : names) {
            if (!j.contains(n)) {
                throw SpecificationError(fmt::format("coefficient for {} is missing", n));
            }
        }
        return ArmaCoefficients::unflatten(spec, from_terms(names, j));
    });
}

json model_to_json(const FittedModel& m) {
    const auto names = m.spec.term_names();
    json series{{"start", m.series.start().to_string()},
                {"frequency", m.series.frequency()},
                {"values", std::vector<double>(m.series.values().begin(), m.series.values().end())}};
    return json{{"spec", spec_to_json(m.spec)},
                {"coefficients", coefficients_to_json(m.spec, m.coefficients)},
                {"delta", number(m.delta)},
                {"ssr", number(m.ssr)},
                {"sigma2", number(m.sigma2)},
                {"loglik", number(m.loglik)},
                {"aic", number(m.aic)},
                {"bic", number(m.bic)},
                {"adj_r2", number(m.adj_r2)},
                {"t_stats", by_term(names, m.t_stats)},
                {"std_errors", by_term(names, m.std_errors)},
                {"converged", m.converged},
                {"evaluations", m.evaluations},
                {"constant_dropped", m.constant_dropped},
                {"series", series},
                {"residuals", m.residuals}};
}

FittedModel model_from_json(const json& j) {
    return guarded([&] {
        const auto spec = spec_from_json(j.at("spec"));
        const auto coefficients = coefficients_from_json(spec, j.at("coefficients"));
        const auto polys = expand(spec, coefficients);
        const auto& s = j.at("series");
        TimeSeries series(Period::parse(s.at("start").get<std::string>()),
                          s.at("values").get<std::vector<double>>(), s.value("frequency", 12));
        auto residuals = j.at("residuals").get<std::vector<double>>();
        if (residuals.size() + static_cast<std::size_t>(spec.diff.order()) != series.size()) {
            throw ParseError(fmt::format("model document has {} residuals for {} observations", residuals.size(),
                                         series.size()));
        }
        const auto names = spec.term_names();
        return FittedModel{
            .spec = spec,
            .coefficients = coefficients,
            .delta = number_from(j.at("delta")),
            .ar_poly = polys.ar,
            .ma_poly = polys.ma,
            .series = std::move(series),
            .residuals = std::move(residuals),
            .ssr = number_from(j.at("ssr")),
            .sigma2 = number_from(j.at("sigma2")),
            .loglik = number_from(j.at("loglik")),
            .aic = number_from(j.at("aic")),
            .bic = number_from(j.at("bic")),
            .adj_r2 = number_from(j.at("adj_r2")),
            .std_errors = from_terms(names, j.value("std_errors", json::object())),
            .t_stats = from_terms(names, j.value("t_stats", json::object())),
            .converged = j.value("converged", true),
            .evaluations = j.value("evaluations", 0),
            .constant_dropped = j.value("constant_dropped", false),
        };
    });
}

std::string dump_model(const FittedModel& model) { return model_to_json(model).dump(2) + "\n"; }

FittedModel load_model(std::string_view text) {
    return guarded([&] { return model_from_json(json::parse(text)); });
}

}  // namespace bjts
