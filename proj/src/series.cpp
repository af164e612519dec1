#include "bjts/series.hpp"

#include "bjts/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

namespace bjts {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::optional<double> parse_double(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

}  // namespace

Period Period::parse(std::string_view text) {
    text = trim(text);
    if (text.size() != 7 || text[4] != '-') {
        throw ParseError(fmt::format("malformed period '{}', expected YYYY-MM", text));
    }
    auto y = parse_int(text.substr(0, 4));
    auto m = parse_int(text.substr(5, 2));
    if (!y || !m || *m < 1 || *m > 12) {
        throw ParseError(fmt::format("malformed period '{}', expected YYYY-MM", text));
    }
    return Period{*y, *m};
}

Period Period::from_ordinal(long ordinal) {
    long year = ordinal >= 0 ? ordinal / 12 : -((-ordinal + 11) / 12);
    long month = ordinal - year * 12;
    return Period{static_cast<int>(year), static_cast<int>(month) + 1};
}

std::string Period::to_string() const { return fmt::format("{:04d}-{:02d}", year, month); }

TimeSeries::TimeSeries(Period start, std::vector<double> values, int frequency)
    : start_(start), values_(std::move(values)), frequency_(frequency) {
    if (values_.empty()) {
        throw LengthError("time series must contain at least one observation");
    }
    if (frequency_ < 1) {
        throw InputError(fmt::format("frequency must be >= 1, got {}", frequency_));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw InputError(fmt::format("non-finite observation at index {}", i));
        }
    }
}

TimeSeries ingest_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::optional<Period> start;
    Period previous;
    std::vector<double> values;

    while (std::getline(in, line)) {
        ++line_no;
        auto row = trim(line);
        if (row.empty()) {
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(fmt::format("line {}: expected exactly two fields 'period,value'", line_no));
        }
        Period p;
        try {
            p = Period::parse(row.substr(0, comma));
        } catch (const ParseError& e) {
            throw ParseError(fmt::format("line {}: {}", line_no, e.what()));
        }
        auto value_text = trim(row.substr(comma + 1));
        auto value = parse_double(value_text);
        if (!value) {
            throw ParseError(fmt::format("line {}: non-numeric value '{}' for {}", line_no, value_text, p.to_string()));
        }
        if (start) {
            long step = p.ordinal() - previous.ordinal();
            if (step <= 0) {
                throw IngestionError(fmt::format("line {}: duplicate or out-of-order period {}", line_no, p.to_string()));
            }
            if (step > 1) {
                throw IngestionError(
                    fmt::format("line {}: gap at {}", line_no, previous.plus(1).to_string()));
            }
        } else {
            start = p;
        }
        previous = p;
        values.push_back(*value);
    }
    if (!header_seen) {
        throw ParseError("empty input: expected header 'period,value'");
    }
    if (!start) {
        throw LengthError("no observations after the header");
    }
    return TimeSeries(*start, std::move(values), 12);
}

TimeSeries ingest_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    return ingest_csv(in);
}

std::string emit_csv(const TimeSeries& ts, std::string_view value_header) {
    std::string out = fmt::format("period,{}\n", value_header);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out += fmt::format("{},{}\n", ts.period_at(i).to_string(), ts[i]);
    }
    return out;
}

std::vector<std::optional<double>> SeasonalPivot::column_means() const {
    std::vector<std::optional<double>> means(12);
    for (int m = 0; m < 12; ++m) {
        double sum = 0.0;
        int count = 0;
        for (const auto& row : cells) {
            if (row[m]) {
                sum += *row[m];
                ++count;
            }
        }
        if (count > 0) {
            means[m] = sum / count;
        }
    }
    return means;
}

int SeasonalPivot::peak_month() const {
    auto means = column_means();
    int best = 0;
    for (int m = 0; m < 12; ++m) {
        if (means[m] && (!means[best] || *means[m] > *means[best])) {
            best = m;
        }
    }
    return best + 1;
}

int SeasonalPivot::trough_month() const {
    auto means = column_means();
    int best = 0;
    for (int m = 0; m < 12; ++m) {
        if (means[m] && (!means[best] || *means[m] < *means[best])) {
            best = m;
        }
    }
    return best + 1;
}

SeasonalPivot seasonal_pivot(const TimeSeries& ts) {
    if (ts.frequency() != 12) {
        throw UnsupportedFrequencyError(
            fmt::format("seasonal pivot needs monthly data (frequency 12), got frequency {}", ts.frequency()));
    }
    SeasonalPivot pivot;
    const int first_year = ts.start().year;
    const int last_year = ts.end().year;
    for (int y = first_year; y <= last_year; ++y) {
        pivot.years.push_back(y);
        pivot.cells.emplace_back(12);
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Period p = ts.period_at(i);
        pivot.cells[p.year - first_year][p.month - 1] = ts[i];
    }
    return pivot;
}

std::string_view month_name(int month) {
    static constexpr std::array<std::string_view, 12> names = {
        "January", "February", "March",     "April",   "May",      "June",
        "July",    "August",   "September", "October", "November", "December"};
    if (month < 1 || month > 12) {
        return "?";
    }
    return names[month - 1];
}

}  // namespace bjts
