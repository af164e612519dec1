#pragma once

#include "bjts/correlogram.hpp"
#include "bjts/diagnostics.hpp"
#include "bjts/forecast.hpp"
#include "bjts/sarima.hpp"
#include "bjts/select.hpp"
#include "bjts/series.hpp"
#include "bjts/unitroot.hpp"

#include <string>
#include <string_view>

// Human-readable tables (3 decimals) and CSV renderings used by the command-line front end.
namespace bjts::report {

std::string correlogram_text(const Correlogram& c, std::string_view title);
std::string correlogram_csv(const Correlogram& c);

std::string pivot_text(const SeasonalPivot& p);
std::string pivot_csv(const SeasonalPivot& p);

std::string adf_text(const AdfResult& r, std::string_view label);
std::string advice_text(const DifferencingAdvice& a);

std::string model_text(const FittedModel& m);

std::string lm_text(const std::vector<LmRow>& rows);
std::string diagnostics_text(const DiagnosticsReport& d);

std::string leaderboard_text(const Leaderboard& b);
std::string leaderboard_csv(const Leaderboard& b);

/// Month-by-year table of forecasts.
std::string forecast_text(const ForecastResult& f);

std::string accuracy_text(const AccuracyReport& a);

}  // namespace bjts::report
