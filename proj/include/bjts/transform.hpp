#pragma once

#include "bjts/series.hpp"

#include <span>
#include <vector>

namespace bjts {

/// Regular degree d, seasonal degree D, seasonal period s. Both degrees are limited to 0..2.
struct DifferenceSpec {
    int d = 0;
    int D = 0;
    int s = 12;

    /// Number of leading observations consumed: d + D*s.
    [[nodiscard]] int order() const { return d + D * s; }
    void validate() const;

    friend bool operator==(const DifferenceSpec&, const DifferenceSpec&) = default;
};

/// Coefficients of (1 - B^s)^D (1 - B)^d, index = backshift power.
std::vector<double> differencing_operator(const DifferenceSpec& spec);

/// z_t = (1 - B^s)^D (1 - B)^d y_t together with the original-scale observations it consumed.
struct DifferencedSeries {
    std::vector<double> values;
    DifferenceSpec spec;
    std::vector<double> warmup;
};

DifferencedSeries difference(std::span<const double> y, const DifferenceSpec& spec);
DifferencedSeries difference(const TimeSeries& ts, const DifferenceSpec& spec);

/// Rebuilds the original-scale series the differenced series came from (warmup followed by the
/// integrated values).
std::vector<double> restore(const DifferencedSeries& z);

/// Maps a continuation of z (for instance forecasts) to the matching continuation on the original scale.
std::vector<double> integrate(const DifferencedSeries& z, std::span<const double> extension);

/// Same as `integrate`, but continues from an observed original-scale history instead of the
/// rebuilt one. `history` must hold at least `spec.order()` values.
std::vector<double> integrate_from(std::span<const double> history, const DifferenceSpec& spec,
                                   std::span<const double> extension);

}  // namespace bjts
