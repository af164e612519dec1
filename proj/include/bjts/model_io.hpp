#pragma once

#include "bjts/sarima.hpp"

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace bjts {

/// {"ar":[9],"sar":[12],"ma":[14],"sma":[24],"d":0,"D":1,"s":12,"constant":false}
/// Missing keys default to empty lists, d = D = 0, s = 12, constant = false.
nlohmann::json spec_to_json(const SarimaSpec& spec);
SarimaSpec spec_from_json(const nlohmann::json& j);

/// A JSON array of specifications.
std::vector<SarimaSpec> candidates_from_json(std::string_view text);

/// Coefficients keyed by term name, e.g. {"AR(9)": 0.154, "SMA(24)": -0.86}.
nlohmann::json coefficients_to_json(const SarimaSpec& spec, const ArmaCoefficients& c);
ArmaCoefficients coefficients_from_json(const SarimaSpec& spec, const nlohmann::json& j);

/// Full model document: spec, coefficients, delta, sigma2, loglik, aic, bic, adj_r2, t_stats,
/// std_errors, plus the fitted series and residuals so that forecasting and diagnostics need no
/// re-estimation. Doubles round-trip bit-exactly; non-finite values are written as null.
nlohmann::json model_to_json(const FittedModel& model);
FittedModel model_from_json(const nlohmann::json& j);

std::string dump_model(const FittedModel& model);
FittedModel load_model(std::string_view text);

}  // namespace bjts
