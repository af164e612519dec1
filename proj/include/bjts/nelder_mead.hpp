#pragma once

#include <functional>
#include <span>
#include <vector>

namespace bjts {

struct NelderMeadOptions {
    double diameter_tolerance = 1e-8;  // max vertex distance from the best vertex
    int max_evaluations = 2000;
    std::vector<double> initial_step;  // per coordinate; defaults to 0.1
    int max_restarts = 3;              // fresh simplex around the optimum after collapse
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Derivative-free minimisation with the standard reflection/expansion/contraction/shrink
/// coefficients (1, 2, 1/2, 1/2).
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options);

}  // namespace bjts
