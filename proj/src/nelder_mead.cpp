#include "bjts/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bjts {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

double distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options) {
    const std::size_t n = start.size();
    NelderMeadResult result;
    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        double f = objective(x);
        return std::isnan(f) ? std::numeric_limits<double>::infinity() : f;
    };

    if (n == 0) {
        result.value = eval(start);
        result.converged = true;
        return result;
    }

    auto step_for = [&](std::size_t i, double factor) {
        double h = i < options.initial_step.size() ? options.initial_step[i] : 0.1;
        return h * factor;
    };

    Vertex best{start, eval(start)};
    double step_factor = 1.0;
    for (int restart = 0; restart <= options.max_restarts; ++restart) {
        std::vector<Vertex> simplex;
        simplex.reserve(n + 1);
        simplex.push_back(best);
        for (std::size_t i = 0; i < n; ++i) {
            Vertex v{best.x, 0.0};
            v.x[i] += step_for(i, step_factor);
            v.f = eval(v.x);
            simplex.push_back(std::move(v));
        }

        bool collapsed = false;
        while (result.evaluations < options.max_evaluations) {
            std::sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });

            double diameter = 0.0;
            for (std::size_t i = 1; i <= n; ++i) {
                diameter = std::max(diameter, distance(simplex[0].x, simplex[i].x));
            }
            if (diameter < options.diameter_tolerance) {
                collapsed = true;
                break;
            }

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    centroid[j] += simplex[i].x[j] / static_cast<double>(n);
                }
            }
            auto along = [&](double t) {
                std::vector<double> x(n);
                for (std::size_t j = 0; j < n; ++j) {
                    x[j] = centroid[j] + t * (simplex[n].x[j] - centroid[j]);
                }
                return x;
            };

            Vertex reflected{along(-1.0), 0.0};
            reflected.f = eval(reflected.x);
            if (reflected.f < simplex[0].f) {
                Vertex expanded{along(-2.0), 0.0};
                expanded.f = eval(expanded.x);
                simplex[n] = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
                continue;
            }
            if (reflected.f < simplex[n - 1].f) {
                simplex[n] = std::move(reflected);
                continue;
            }
            const bool outside = reflected.f < simplex[n].f;
            Vertex contracted{along(outside ? -0.5 : 0.5), 0.0};
            contracted.f = eval(contracted.x);
            if (contracted.f < (outside ? reflected.f : simplex[n].f)) {
                simplex[n] = std::move(contracted);
                continue;
            }
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    simplex[i].x[j] = simplex[0].x[j] + 0.5 * (simplex[i].x[j] - simplex[0].x[j]);
                }
                simplex[i].f = eval(simplex[i].x);
            }
        }

        std::sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        const bool improved = simplex[0].f < best.f - 1e-12 * std::abs(best.f);
        const bool moved = distance(simplex[0].x, best.x) > options.diameter_tolerance;
        if (simplex[0].f <= best.f) {
            best = simplex[0];
        }
        if (!collapsed) {
            // Budget ran out; an earlier collapse still counts as convergence.
            result.converged = restart > 0;
            break;
        }
        result.converged = true;
        // A restart that neither improves nor moves confirms the optimum.
        if (restart > 0 && !improved && !moved) {
            break;
        }
        step_factor *= 0.5;
    }

    result.x = best.x;
    result.value = best.f;
    return result;
}

}  // namespace bjts
