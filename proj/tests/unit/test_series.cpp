#include "doctest.h"

#include "bjts/errors.hpp"
#include "bjts/series.hpp"
#include "support.hpp"

#include <algorithm>
#include <numeric>

using namespace bjts;

TEST_SUITE("series") {
    TEST_CASE("ingest three consecutive months") {
        const auto ts = ingest_csv("period,value\n1993-01,10\n1993-02,20\n1993-03,30\n");
        CHECK(ts == TimeSeries(Period{1993, 1}, {10, 20, 30}));
        CHECK(ts.frequency() == 12);
        CHECK(ts.end() == Period{1993, 3});
    }

    TEST_CASE("gap names the missing period") {
        try {
            (void)ingest_csv("period,value\n1993-01,1\n1993-03,2\n");
            FAIL("expected an ingestion error");
        } catch (const IngestionError& e) {
            CHECK(std::string(e.what()).find("gap at 1993-02") != std::string::npos);
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }

    TEST_CASE("duplicate and non-numeric rows are rejected") {
        CHECK_THROWS_AS((void)ingest_csv("period,value\n1993-01,1\n1993-01,2\n"), IngestionError);
        CHECK_THROWS_AS((void)ingest_csv("period,value\n1993-01,abc\n"), ParseError);
        CHECK_THROWS_AS((void)ingest_csv("period,value\n1993-13,1\n"), ParseError);
        CHECK_THROWS_AS((void)ingest_csv("period,value\n"), InputError);
    }

    TEST_CASE("168 rows span January 1993 to December 2006") {
        std::string text = "period,value\n";
        for (int i = 0; i < 168; ++i) {
            text += Period{1993, 1}.plus(i).to_string() + "," + std::to_string(1000 + i) + "\n";
        }
        const auto ts = ingest_csv(text);
        CHECK(ts.size() == 168);
        CHECK(ts.start() == Period{1993, 1});
        CHECK(ts.end() == Period{2006, 12});
    }

    TEST_CASE("emit then ingest is the identity") {
        std::mt19937_64 rng(11);
        for (int rep = 0; rep < 20; ++rep) {
            auto values = testing::random_values(rng, 5 + static_cast<std::size_t>(rep) * 7, 1e3);
            const TimeSeries ts(Period{1990 + rep, 1 + rep % 12}, values);
            CHECK(ingest_csv(emit_csv(ts)) == ts);
        }
    }

    TEST_CASE("pivot of 1..24 has two rows and column means 7, 8, ..., 18") {
        std::vector<double> v(24);
        std::iota(v.begin(), v.end(), 1.0);
        const auto p = seasonal_pivot(TimeSeries(Period{1993, 1}, v));
        REQUIRE(p.years.size() == 2);
        const auto means = p.column_means();
        for (int m = 0; m < 12; ++m) {
            CHECK(*means[static_cast<std::size_t>(m)] == doctest::Approx(7.0 + m));
        }
    }

    TEST_CASE("constant series peaks in January") {
        const auto p = seasonal_pivot(TimeSeries(Period{2000, 1}, std::vector<double>(36, 4.0)));
        CHECK(p.peak_month() == 1);
        CHECK(p.trough_month() == 1);
    }

    TEST_CASE("an August bump moves the peak to August") {
        std::mt19937_64 rng(3);
        auto v = testing::random_values(rng, 60);
        const TimeSeries base(Period{1993, 1}, v);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (base.period_at(i).month == 8) v[i] += 100.0;
        }
        CHECK(seasonal_pivot(TimeSeries(Period{1993, 1}, v)).peak_month() == 8);
    }

    TEST_CASE("pivot keeps every value, including partial years") {
        std::mt19937_64 rng(5);
        const auto v = testing::random_values(rng, 31);
        const TimeSeries ts(Period{1994, 5}, v);
        const auto p = seasonal_pivot(ts);
        CHECK(p.years.size() == 3);  // May 1994 .. November 1996
        std::vector<double> cells;
        for (std::size_t r = 0; r < p.years.size(); ++r) {
            for (int m = 1; m <= 12; ++m) {
                if (const auto& c = p.cells[r][static_cast<std::size_t>(m - 1)]) {
                    cells.push_back(*c);
                    const Period period{p.years[r], m};
                    CHECK(*c == ts[static_cast<std::size_t>(period.ordinal() - ts.start().ordinal())]);
                }
            }
        }
        auto sorted = v;
        std::sort(sorted.begin(), sorted.end());
        std::sort(cells.begin(), cells.end());
        CHECK(cells == sorted);
    }

    TEST_CASE("pivot needs monthly frequency") {
        CHECK_THROWS_AS((void)seasonal_pivot(TimeSeries(Period{2000, 1}, {1, 2, 3, 4}, 4)), UnsupportedFrequencyError);
    }

    TEST_CASE("time series rejects empty or non-finite values") {
        CHECK_THROWS_AS(TimeSeries(Period{2000, 1}, {}), InputError);
        CHECK_THROWS_AS(TimeSeries(Period{2000, 1}, {1.0, std::nan("")}), InputError);
    }
}
