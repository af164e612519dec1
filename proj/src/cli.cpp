#include "bjts/cli.hpp"

#include "bjts/correlogram.hpp"
#include "bjts/diagnostics.hpp"
#include "bjts/errors.hpp"
#include "bjts/forecast.hpp"
#include "bjts/model_io.hpp"
#include "bjts/report.hpp"
#include "bjts/sarima.hpp"
#include "bjts/select.hpp"
#include "bjts/series.hpp"
#include "bjts/simulate.hpp"
#include "bjts/transform.hpp"
#include "bjts/unitroot.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

namespace bjts::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string input;
    std::string model;
    std::string candidates;
    std::string config;
    std::string actual;
    std::string predicted;
    std::string out_path;
    std::string format;
    int d = 0;
    int D = 0;
    int s = 12;
    std::vector<int> ar;
    std::vector<int> ma;
    std::vector<int> sar;
    std::vector<int> sma;
    bool constant = false;
    bool constant_rule = false;
    int max_lag = 36;
    std::optional<int> adf_max_lag;
    int lm_lags = 12;
    int horizon = 0;
    std::optional<std::uint64_t> seed;
    bool decide = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(fmt::format("cannot open '{}'", path));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TimeSeries read_series(const std::string& path) {
    try {
        return ingest_csv(read_file(path));
    } catch (const InputError& e) {
        throw InputError(fmt::format("{}: {}", path, e.what()));
    }
}

FittedModel read_model(const std::string& path) { return load_model(read_file(path)); }

DifferenceSpec diff_of(const Options& o) {
    DifferenceSpec spec{o.d, o.D, o.s};
    spec.validate();
    return spec;
}

SarimaSpec spec_of(const Options& o) {
    SarimaSpec spec{o.ar, o.ma, o.sar, o.sma, diff_of(o), o.constant};
    spec.validate();
    return spec;
}

void emit(std::ostream& out, const Options& o, const std::string& text) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
        throw InputError(fmt::format("cannot write '{}'", o.out_path));
    }
    f << text;
}

json correlogram_json(const Correlogram& c) {
    json rows = json::array();
    for (int k = 0; k < c.max_lag(); ++k) {
        const auto& q = c.q[static_cast<std::size_t>(k)];
        rows.push_back({{"lag", k + 1},
                        {"ac", c.ac[k]},
                        {"pac", c.pac[k]},
                        {"q_stat", q.q},
                        {"prob", q.prob ? json(*q.prob) : json(nullptr)}});
    }
    return json{{"T", c.T}, {"band", c.band}, {"df_adjust", c.df_adjust}, {"lags", rows}};
}

json adf_json(const AdfResult& r) {
    return json{{"t_stat", r.t_stat},
                {"p_value", r.p_value},
                {"critical", {{"1%", r.critical.pct1}, {"5%", r.critical.pct5}, {"10%", r.critical.pct10}}},
                {"lags_used", r.lags_used},
                {"nobs", r.nobs},
                {"deterministic", "constant"}};
}

json lm_json(const std::vector<LmRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back({{"variable", r.name},
                       {"coefficient", r.coefficient},
                       {"std_error", r.std_error},
                       {"t_stat", r.t_stat},
                       {"p_value", r.p_value}});
    }
    return out;
}

json leaderboard_json(const Leaderboard& b) {
    json out = json::array();
    for (const auto& r : b.rows) {
        auto nullable = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
        out.push_back({{"spec", spec_to_json(r.spec)},
                       {"model", r.spec.describe()},
                       {"bic", nullable(r.bic)},
                       {"aic", nullable(r.aic)},
                       {"adj_r2", nullable(r.adj_r2)},
                       {"n_params", r.n_params},
                       {"converged", r.converged},
                       {"error", r.error ? json(*r.error) : json(nullptr)}});
    }
    return out;
}

json accuracy_json(const AccuracyReport& a) {
    return json{{"rmse", a.rmse},
                {"mad", a.mad},
                {"mape", a.mape ? json(*a.mape) : json(nullptr)},
                {"theil_u", a.theil_u},
                {"warnings", a.warnings}};
}

// Reads `period,<anything>` CSV into a period -> value map.
std::map<long, double> read_by_period(const std::string& path) {
    const auto ts = read_series(path);
    std::map<long, double> m;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        m[ts.period_at(i).ordinal()] = ts[i];
    }
    return m;
}

AccuracyReport aligned_accuracy(const std::map<long, double>& actual, const std::map<long, double>& predicted) {
    std::vector<double> a;
    std::vector<double> p;
    for (const auto& [period, value] : predicted) {
        auto it = actual.find(period);
        if (it != actual.end()) {
            a.push_back(it->second);
            p.push_back(value);
        }
    }
    if (a.empty()) {
        throw DimensionError("actual and predicted series share no periods");
    }
    return accuracy(a, p);
}

SimulationConfig simulation_config_from(const std::string& text) {
    try {
        const auto j = json::parse(text);
        SimulationConfig cfg;
        cfg.spec = spec_from_json(j.at("spec"));
        cfg.coefficients = coefficients_from_json(cfg.spec, j.value("coefficients", json::object()));
        cfg.delta = j.value("delta", 0.0);
        cfg.sigma = j.value("sigma", 1.0);
        cfg.length = j.at("length").get<int>();
        if (j.contains("burn_in")) {
            cfg.burn_in = j.at("burn_in").get<int>();
        }
        cfg.seed = j.value("seed", std::uint64_t{0});
        if (j.contains("start")) {
            cfg.start = Period::parse(j.at("start").get<std::string>());
        }
        return cfg;
    } catch (const json::exception& e) {
        throw ParseError(fmt::format("malformed simulation config: {}", e.what()));
    }
}

// ---- subcommands -----------------------------------------------------------------------------

void cmd_ingest(const Options& o, std::ostream& out) {
    const auto ts = read_series(o.input);
    if (o.format == "csv") {
        emit(out, o, emit_csv(ts));
    } else if (o.format == "json") {
        emit(out, o,
             json{{"start", ts.start().to_string()},
                  {"end", ts.end().to_string()},
                  {"length", ts.size()},
                  {"frequency", ts.frequency()}}
                     .dump(2) +
                 "\n");
    } else {
        emit(out, o,
             fmt::format("{} observations from {} to {} (frequency {})\n", ts.size(), ts.start().to_string(),
                         ts.end().to_string(), ts.frequency()));
    }
}

void cmd_pivot(const Options& o, std::ostream& out) {
    const auto pivot = seasonal_pivot(read_series(o.input));
    emit(out, o, o.format == "csv" ? report::pivot_csv(pivot) : report::pivot_text(pivot));
}

void cmd_acf(const Options& o, std::ostream& out) {
    const auto ts = read_series(o.input);
    const auto spec = diff_of(o);
    const auto z = difference(ts, spec);
    const auto c = correlogram(z.values, o.max_lag);
    if (o.format == "csv") {
        emit(out, o, report::correlogram_csv(c));
    } else if (o.format == "json") {
        emit(out, o, correlogram_json(c).dump(2) + "\n");
    } else {
        emit(out, o,
             report::correlogram_text(
                 c, fmt::format("Correlogram (d={}, D={}, s={}) of {}", spec.d, spec.D, spec.s, o.input)));
    }
}

void cmd_adf(const Options& o, std::ostream& out) {
    const auto ts = read_series(o.input);
    if (o.decide) {
        const auto advice = decide_differencing(ts);
        if (o.format == "json") {
            json j{{"original", adf_json(advice.original)}, {"recommendation", to_string(advice.recommendation)}};
            if (advice.regular) {
                j["regular"] = adf_json(*advice.regular);
                j["regular_spikes"] = advice.regular_spikes;
            }
            if (advice.seasonal) {
                j["seasonal"] = adf_json(*advice.seasonal);
                j["seasonal_spikes"] = advice.seasonal_spikes;
            }
            emit(out, o, j.dump(2) + "\n");
        } else {
            emit(out, o, report::advice_text(advice));
        }
        return;
    }
    const auto spec = diff_of(o);
    const auto z = difference(ts, spec);
    const auto r = adf_test(z.values, o.adf_max_lag);
    if (o.format == "json") {
        emit(out, o, adf_json(r).dump(2) + "\n");
    } else {
        emit(out, o, report::adf_text(r, fmt::format("d={}, D={}, s={}", spec.d, spec.D, spec.s)));
    }
}

void cmd_fit(const Options& o, std::ostream& out) {
    const auto ts = read_series(o.input);
    const auto spec = spec_of(o);
    const auto model = o.constant_rule ? estimate_with_constant_rule(spec, ts) : estimate(spec, ts);
    emit(out, o, o.format == "text" ? report::model_text(model) : dump_model(model));
}

void cmd_select(const Options& o, std::ostream& out) {
    const auto ts = read_series(o.input);
    const auto specs = candidates_from_json(read_file(o.candidates));
    const auto board = rank(specs, ts);
    if (o.format == "csv") {
        emit(out, o, report::leaderboard_csv(board));
    } else if (o.format == "json") {
        emit(out, o, leaderboard_json(board).dump(2) + "\n");
    } else {
        emit(out, o, report::leaderboard_text(board));
    }
}

void cmd_diagnose(const Options& o, std::ostream& out) {
    const auto model = read_model(o.model);
    DiagnosticsReport d;
    try {
        d = diagnose(model, o.max_lag, o.lm_lags);
    } catch (const CollinearityError&) {
        // The residual correlogram is still informative; report it before failing.
        if (o.format != "json") {
            emit(out, o, report::correlogram_text(residual_check(model, o.max_lag), "Correlogram of Residuals"));
        }
        throw;
    }
    if (o.format == "json") {
        emit(out, o,
             json{{"residual_correlogram", correlogram_json(d.residual_correlogram)},
                  {"lm", lm_json(d.lm_rows)},
                  {"band_ok", d.band_ok},
                  {"lm_ok", d.lm_ok},
                  {"adequate", d.adequate}}
                     .dump(2) +
                 "\n");
    } else {
        emit(out, o, report::diagnostics_text(d));
    }
}

void cmd_forecast(const Options& o, std::ostream& out) {
    const auto model = read_model(o.model);
    const auto f = forecast(model, o.horizon);
    if (o.format == "text") {
        emit(out, o, report::forecast_text(f));
    } else if (o.format == "json") {
        json points = json::array();
        for (int h = 1; h <= f.horizon; ++h) {
            points.push_back({{"period", f.period_at(h).to_string()}, {"forecast", f.points[h - 1]}});
        }
        emit(out, o, json{{"origin", f.origin.to_string()}, {"horizon", f.horizon}, {"points", points}}.dump(2) + "\n");
    } else {
        emit(out, o, f.to_csv());
    }
}

void cmd_evaluate(const Options& o, std::ostream& out) {
    AccuracyReport r;
    if (!o.predicted.empty()) {
        r = aligned_accuracy(read_by_period(o.actual), read_by_period(o.predicted));
    } else {
        const auto model = read_model(o.model);
        const auto fitted = fitted_values(model);
        std::map<long, double> predicted;
        for (std::size_t i = 0; i < fitted.size(); ++i) {
            predicted[fitted.period_at(i).ordinal()] = fitted[i];
        }
        std::map<long, double> actual;
        if (o.actual.empty()) {
            for (std::size_t i = 0; i < model.series.size(); ++i) {
                actual[model.series.period_at(i).ordinal()] = model.series[i];
            }
        } else {
            actual = read_by_period(o.actual);
        }
        r = aligned_accuracy(actual, predicted);
    }
    emit(out, o, o.format == "json" ? accuracy_json(r).dump(2) + "\n" : report::accuracy_text(r));
}

void cmd_simulate(const Options& o, std::ostream& out) {
    auto cfg = simulation_config_from(read_file(o.config));
    if (o.seed) {
        cfg.seed = *o.seed;
    }
    emit(out, o, emit_csv(simulate(cfg).series));
}

void cmd_pipeline(const Options& o, std::ostream& out) {
    const auto ts = read_series(o.input);
    std::string text = "== Step 1: identification ==\n\n";
    text += report::advice_text(decide_differencing(ts));

    const auto specs = candidates_from_json(read_file(o.candidates));
    const auto diff = specs.front().diff;
    const auto z = difference(ts, diff);
    text += "\n" + report::correlogram_text(correlogram(z.values, std::min(o.max_lag, static_cast<int>(z.values.size() / 2) - 1)),
                                            fmt::format("Correlogram of the differenced series (d={}, D={}, s={})",
                                                        diff.d, diff.D, diff.s));

    text += "\n== Step 2: estimation ==\n\n";
    const auto board = rank(specs, ts);
    text += report::leaderboard_text(board);
    if (!board.winner().converged) {
        emit(out, o, text);
        throw ComputationError("no candidate converged");
    }
    const auto model = estimate(board.winner().spec, ts);
    text += "\n" + report::model_text(model);

    text += "\n== Step 3: diagnostic checking ==\n\n";
    const auto rc = residual_check(model, o.max_lag);
    text += report::correlogram_text(rc, "Correlogram of Residuals");
    try {
        const auto rows = lm_test(model, o.lm_lags);
        text += "\nSerial correlation LM test\n\n" + report::lm_text(rows);
        const bool adequate = within_band(rc, o.max_lag) && lm_rows_ok(rows);
        text += fmt::format("\nAdequate: {}\n", adequate ? "yes" : "no");
    } catch (const CollinearityError& e) {
        text += fmt::format("\nLM test unavailable: {}\n", e.what());
    }

    text += "\n== Step 4: forecasting ==\n\n";
    const auto f = forecast(model, o.horizon);
    text += report::forecast_text(f);
    const auto fitted = fitted_values(model);
    const auto m = static_cast<std::size_t>(diff.order());
    const auto acc = accuracy(ts.values().subspan(m), fitted.values());
    text += "\nIn-sample accuracy (one-step fitted values)\n" + report::accuracy_text(acc);
    emit(out, o, text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Box-Jenkins seasonal ARIMA toolkit", "bjts"};
    app.require_subcommand(1);
    Options o;

    auto input = [&o](CLI::App* sub) { sub->add_option("--input", o.input, "Input CSV (period,value)")->required(); };
    auto format = [&o](CLI::App* sub, std::string def, std::vector<std::string> allowed) {
        o.format = def;
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
    };
    auto diff_flags = [&o](CLI::App* sub) {
        sub->add_option("--d", o.d, "Regular differencing degree")->check(CLI::Range(0, 2));
        sub->add_option("--D", o.D, "Seasonal differencing degree")->check(CLI::Range(0, 2));
        sub->add_option("--s", o.s, "Seasonal period")->check(CLI::PositiveNumber);
    };
    auto out_flag = [&o](CLI::App* sub) { sub->add_option("--out", o.out_path, "Write output to a file"); };

    std::map<std::string, std::function<void(const Options&, std::ostream&)>> handlers;
    std::map<std::string, std::string> default_format;
    auto add = [&](const std::string& name, const std::string& help, auto&& handler) {
        handlers[name] = handler;
        return app.add_subcommand(name, help);
    };

    auto* ingest = add("ingest", "Validate a series CSV", cmd_ingest);
    input(ingest);
    default_format["ingest"] = "text";
    ingest->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
    out_flag(ingest);

    auto* pivot = add("pivot", "Year-by-month table with peak and trough months", cmd_pivot);
    input(pivot);
    default_format["pivot"] = "text";
    pivot->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv"}));
    out_flag(pivot);

    auto* acf_cmd = add("acf", "Correlogram (AC, PAC, Q-Stat, Prob)", cmd_acf);
    input(acf_cmd);
    diff_flags(acf_cmd);
    acf_cmd->add_option("--max-lag", o.max_lag, "Largest lag")->check(CLI::PositiveNumber);
    default_format["acf"] = "text";
    acf_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
    out_flag(acf_cmd);

    auto* adf = add("adf", "Augmented Dickey-Fuller unit-root test", cmd_adf);
    input(adf);
    diff_flags(adf);
    adf->add_option("--max-lag", o.adf_max_lag, "Largest augmentation lag (default: Schwert bound)")
        ->check(CLI::NonNegativeNumber);
    adf->add_flag("--decide", o.decide, "Compare original, regular and seasonal differencing");
    default_format["adf"] = "text";
    adf->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    out_flag(adf);

    auto lag_flags = [&o](CLI::App* sub) {
        sub->add_option("--ar", o.ar, "Nonseasonal AR lags")->delimiter(',');
        sub->add_option("--ma", o.ma, "Nonseasonal MA lags")->delimiter(',');
        sub->add_option("--sar", o.sar, "Seasonal AR lags (multiples of s)")->delimiter(',');
        sub->add_option("--sma", o.sma, "Seasonal MA lags (multiples of s)")->delimiter(',');
        sub->add_flag("--constant", o.constant, "Estimate a constant term");
    };
    auto* fit = add("fit", "Estimate a subset-lag SARIMA model by conditional least squares", cmd_fit);
    input(fit);
    diff_flags(fit);
    lag_flags(fit);
    fit->add_flag("--constant-rule", o.constant_rule, "Drop the constant when |t| < 2");
    default_format["fit"] = "json";
    fit->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    out_flag(fit);

    auto* select_cmd = add("select", "Rank candidate specifications by BIC, then AIC", cmd_select);
    input(select_cmd);
    select_cmd->add_option("--candidates", o.candidates, "JSON array of specifications")->required();
    default_format["select"] = "text";
    select_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
    out_flag(select_cmd);

    auto* diag = add("diagnose", "Residual correlogram and LM serial-correlation test", cmd_diagnose);
    diag->add_option("--model", o.model, "Model JSON from `fit`")->required();
    diag->add_option("--max-lag", o.max_lag, "Largest residual lag")->check(CLI::PositiveNumber);
    diag->add_option("--lm-lags", o.lm_lags, "Lagged residuals in the LM regression")->check(CLI::PositiveNumber);
    default_format["diagnose"] = "text";
    diag->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    out_flag(diag);

    auto* fc = add("forecast", "Point forecasts on the original scale", cmd_forecast);
    fc->add_option("--model", o.model, "Model JSON from `fit`")->required();
    fc->add_option("--horizon", o.horizon, "Steps ahead")->required()->check(CLI::PositiveNumber);
    default_format["forecast"] = "csv";
    fc->add_option("--format", o.format)->check(CLI::IsMember({"csv", "text", "json"}));
    out_flag(fc);

    auto* ev = add("evaluate", "RMSE, MAD, MAPE and Theil's U", cmd_evaluate);
    auto* actual_opt = ev->add_option("--actual", o.actual, "Actual values CSV");
    auto* predicted_opt = ev->add_option("--predicted", o.predicted, "Predicted values CSV (period,forecast)");
    auto* model_opt = ev->add_option("--model", o.model, "Model JSON; scores its in-sample fitted values");
    predicted_opt->needs(actual_opt)->excludes(model_opt);
    default_format["evaluate"] = "text";
    ev->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    out_flag(ev);

    auto* sim = add("simulate", "Generate a synthetic SARIMA series", cmd_simulate);
    sim->add_option("--config", o.config, "Simulation config JSON")->required();
    sim->add_option("--seed", o.seed, "Override the config seed");
    out_flag(sim);
    default_format["simulate"] = "csv";

    auto* pipe = add("pipeline", "Identification, estimation, diagnostics and forecasting in one report", cmd_pipeline);
    input(pipe);
    pipe->add_option("--candidates", o.candidates, "JSON array of specifications")->required();
    pipe->add_option("--horizon", o.horizon, "Steps ahead")->check(CLI::PositiveNumber);
    pipe->add_option("--max-lag", o.max_lag, "Largest correlogram lag")->check(CLI::PositiveNumber);
    pipe->add_option("--lm-lags", o.lm_lags, "Lagged residuals in the LM regression")->check(CLI::PositiveNumber);
    out_flag(pipe);
    default_format["pipeline"] = "text";
    (void)format;

    std::vector<std::string> argv_storage{"bjts"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUserError;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (o.format.empty()) {
        o.format = default_format[name];
    }
    if (name == "evaluate" && o.predicted.empty() && o.model.empty()) {
        err << "error: evaluate needs --actual with --predicted, or --model\n";
        return kUserError;
    }
    if (name == "pipeline" && o.horizon < 1) {
        o.horizon = 36;
    }

    try {
        handlers.at(name)(o, out);
        return kOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUserError;
    } catch (const ComputationError& e) {
        err << "error: " << e.what() << "\n";
        return kComputationError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kComputationError;
    }
}

}  // namespace bjts::cli
