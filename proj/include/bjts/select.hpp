#pragma once

#include "bjts/correlogram.hpp"
#include "bjts/sarima.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bjts {

struct LeaderboardRow {
    SarimaSpec spec;
    double bic = 0.0;
    double aic = 0.0;
    double adj_r2 = 0.0;
    int n_params = 0;
    bool converged = false;
    std::optional<std::string> error;  // set when estimation failed outright
};

/// Converged rows ascending by (BIC, AIC, parameter count), then the non-converged rows.
struct Leaderboard {
    std::vector<LeaderboardRow> rows;

    [[nodiscard]] const LeaderboardRow& winner() const { return rows.front(); }
};

/// Strict ordering used by the leaderboard. Ties on every criterion fall back to the spec label so
/// the result does not depend on candidate order.
bool ranks_before(const LeaderboardRow& a, const LeaderboardRow& b);

/// Estimates every candidate (concurrently) and ranks them. All candidates must share one DifferenceSpec.
Leaderboard rank(const std::vector<SarimaSpec>& specs, const TimeSeries& ts, const EstimateOptions& options = {});

struct LagSuggestion {
    std::vector<int> ar;  // lags with |pac_k| > 2/sqrt(T)
    std::vector<int> ma;  // lags with |ac_k| > 2/sqrt(T)
};

/// Scans lags 1..24 and the seasonal multiples s, 2s, 3s of a correlogram of the stationary series.
LagSuggestion suggest_lags(const Correlogram& c, int T, int s = 12);

}  // namespace bjts
