#include "bjts/select.hpp"

#include "bjts/errors.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <set>
#include <thread>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace bjts {

namespace {

LeaderboardRow row_from(const FittedModel& m, bool converged) {
    return LeaderboardRow{m.spec, m.bic, m.aic, m.adj_r2, m.spec.n_params(), converged, std::nullopt};
}

LeaderboardRow fit_candidate(const SarimaSpec& spec, const TimeSeries& ts, const EstimateOptions& options) {
    try {
        return row_from(estimate(spec, ts, options), true);
    } catch (const EstimationFailedError& e) {
        auto row = row_from(e.best(), false);
        row.error = e.what();
        return row;
    } catch (const Error& e) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return LeaderboardRow{spec, nan, nan, nan, spec.n_params(), false, std::string(e.what())};
    }
}

// NaN-safe ascending comparison: NaN sorts last.
int compare(double a, double b) {
    const bool an = std::isnan(a);
    const bool bn = std::isnan(b);
    if (an || bn) {
        return an == bn ? 0 : (an ? 1 : -1);
    }
    return a < b ? -1 : (b < a ? 1 : 0);
}

std::string tie_key(const SarimaSpec& s) {
    auto c = s.canonical();
    return fmt::format("{}|{}|{}|{}|{}", c.describe(), fmt::join(c.ar_lags, ","), fmt::join(c.sar_lags, ","),
                       fmt::join(c.ma_lags, ","), fmt::join(c.sma_lags, ","));
}

}  // namespace

bool ranks_before(const LeaderboardRow& a, const LeaderboardRow& b) {
    if (a.converged != b.converged) {
        return a.converged;
    }
    if (int c = compare(a.bic, b.bic); c != 0) return c < 0;
    if (int c = compare(a.aic, b.aic); c != 0) return c < 0;
    if (a.n_params != b.n_params) return a.n_params < b.n_params;
    return tie_key(a.spec) < tie_key(b.spec);
}

Leaderboard rank(const std::vector<SarimaSpec>& specs, const TimeSeries& ts, const EstimateOptions& options) {
    if (specs.empty()) {
        throw InputError("no candidate specifications to rank");
    }
    for (const auto& s : specs) {
        if (!(s.diff == specs.front().diff)) {
            throw IncomparableCandidatesError(fmt::format(
                "candidates use different differencing ((d={}, D={}, s={}) vs (d={}, D={}, s={})); criteria are "
                "only comparable on one dependent series",
                specs.front().diff.d, specs.front().diff.D, specs.front().diff.s, s.diff.d, s.diff.D, s.diff.s));
        }
        s.validate();
    }

    // Fixed-size batches of async fits; results land at their input index.
    const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
    std::vector<LeaderboardRow> rows(specs.size());
    for (std::size_t begin = 0; begin < specs.size(); begin += workers) {
        const std::size_t end = std::min(specs.size(), begin + workers);
        std::vector<std::future<LeaderboardRow>> batch;
        for (std::size_t i = begin; i < end; ++i) {
            batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, fit_candidate,
                                       std::cref(specs[i]), std::cref(ts), std::cref(options)));
        }
        for (std::size_t i = begin; i < end; ++i) {
            rows[i] = batch[i - begin].get();
        }
    }
    std::sort(rows.begin(), rows.end(), ranks_before);
    return Leaderboard{std::move(rows)};
}

LagSuggestion suggest_lags(const Correlogram& c, int T, int s) {
    const double band = 2.0 / std::sqrt(static_cast<double>(T));
    std::set<int> lags;
    for (int k = 1; k <= 24; ++k) {
        lags.insert(k);
    }
    for (int m = 1; m <= 3; ++m) {
        lags.insert(m * s);
    }
    LagSuggestion out;
    for (int k : lags) {
        if (k > c.max_lag()) {
            break;
        }
        if (std::abs(c.pac[static_cast<std::size_t>(k - 1)]) > band) {
            out.ar.push_back(k);
        }
        if (std::abs(c.ac[static_cast<std::size_t>(k - 1)]) > band) {
            out.ma.push_back(k);
        }
    }
    return out;
}

}  // namespace bjts
