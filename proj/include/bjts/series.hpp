#pragma once

#include <compare>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bjts {

/// A calendar month. Month is 1-based.
struct Period {
    int year = 1970;
    int month = 1;

    static Period parse(std::string_view text);
    static Period from_ordinal(long ordinal);

    /// Months since year 0, January.
    [[nodiscard]] long ordinal() const { return static_cast<long>(year) * 12 + (month - 1); }
    [[nodiscard]] Period plus(long months) const { return from_ordinal(ordinal() + months); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Period&, const Period&) = default;
    friend auto operator<=>(const Period& a, const Period& b) { return a.ordinal() <=> b.ordinal(); }
};

/// Ordered, gap-free observations starting at a period. Immutable after construction.
class TimeSeries {
public:
    TimeSeries(Period start, std::vector<double> values, int frequency = 12);

    [[nodiscard]] Period start() const { return start_; }
    [[nodiscard]] Period end() const { return period_at(size() - 1); }
    [[nodiscard]] int frequency() const { return frequency_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] Period period_at(std::size_t i) const { return start_.plus(static_cast<long>(i)); }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    Period start_;
    std::vector<double> values_;
    int frequency_;
};

/// Parses `period,value` CSV with one header line. Periods must be consecutive months.
TimeSeries ingest_csv(std::istream& in);
TimeSeries ingest_csv(std::string_view text);

/// Writes the same dialect `ingest_csv` reads. Values use round-trip precision.
std::string emit_csv(const TimeSeries& ts, std::string_view value_header = "value");

/// Year-by-month table of a monthly series. Cells before the start or after the end are absent.
struct SeasonalPivot {
    std::vector<int> years;
    std::vector<std::vector<std::optional<double>>> cells;  // [row][month-1]

    /// Mean of the present cells per month; absent when a column is empty.
    [[nodiscard]] std::vector<std::optional<double>> column_means() const;
    /// 1-based month with the largest mean; ties go to the earliest month.
    [[nodiscard]] int peak_month() const;
    /// 1-based month with the smallest mean; ties go to the earliest month.
    [[nodiscard]] int trough_month() const;
};

SeasonalPivot seasonal_pivot(const TimeSeries& ts);

std::string_view month_name(int month);

}  // namespace bjts
