#include "doctest.h"

#include "bjts/errors.hpp"
#include "bjts/unitroot.hpp"
#include "support.hpp"

using namespace bjts;

namespace {

std::vector<double> random_walk(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    auto e = testing::random_values(rng, n);
    for (std::size_t i = 1; i < n; ++i) e[i] += e[i - 1];
    return e;
}

}  // namespace

TEST_SUITE("unitroot") {
    TEST_CASE("critical values near T = 167") {
        const auto cv = adf_critical_values(167);
        CHECK(std::abs(cv.pct1 - -3.476) < 0.01);
        CHECK(std::abs(cv.pct5 - -2.882) < 0.01);
        CHECK(std::abs(cv.pct10 - -2.578) < 0.01);
        CHECK(cv.pct1 < cv.pct5);
        CHECK(cv.pct5 < cv.pct10);
    }

    TEST_CASE("p-values agree with the reference response surface") {
        // Reference values from an independent implementation of the same surface.
        const std::vector<std::pair<double, double>> table{{-5.0, 2.2193e-05}, {-3.2, 0.019985}, {-2.5, 0.115474},
                                                           {-1.61, 0.477976}, {-1.0, 0.753264},  {0.0, 0.958532},
                                                           {1.0, 0.994266}};
        for (auto [t, p] : table) {
            CAPTURE(t);
            CHECK(adf_p_value(t) == doctest::Approx(p).epsilon(1e-4));
        }
    }

    TEST_CASE("p-value is monotone in the statistic and stays in [0, 1]") {
        double previous = -1.0;
        for (double t = -25.0; t <= 5.0; t += 0.05) {
            const double p = adf_p_value(t);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            CHECK(p >= previous);
            previous = p;
        }
    }

    TEST_CASE("Schwert bound") {
        CHECK(schwert_max_lags(100) == 12);
        CHECK(schwert_max_lags(168) == 13);
        CHECK(schwert_max_lags(500) == 17);
    }

    TEST_CASE("statistic is invariant under affine maps") {
        std::mt19937_64 rng(31);
        auto y = testing::random_values(rng, 150);
        for (std::size_t i = 1; i < y.size(); ++i) y[i] += 0.7 * y[i - 1];
        const auto base = adf_test(y);
        for (auto [a, b] : std::vector<std::pair<double, double>>{{3.0, 10.0}, {-0.5, -2.0}, {1000.0, 1e4}}) {
            std::vector<double> w(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) w[i] = a * y[i] + b;
            const auto r = adf_test(w);
            CHECK(r.lags_used == base.lags_used);
            CHECK(std::abs(r.t_stat - base.t_stat) < 1e-8);
        }
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS((void)adf_test(std::vector<double>(100, 2.0)), DegenerateSeriesError);
        CHECK_THROWS_AS((void)adf_test(std::vector<double>(25, 1.0), 10), LengthError);
        CHECK_THROWS_AS((void)decide_differencing(TimeSeries(Period{2000, 1}, std::vector<double>(120, 5.0))),
                        DegenerateSeriesError);
    }

    TEST_CASE("size on random walks and power on white noise") {
        int rw_rejections = 0;
        int wn_rejections = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto rw = random_walk(seed, 500);
            rw_rejections += adf_test(rw).rejects_at_5pct() ? 1 : 0;
            std::mt19937_64 rng(10'000 + seed);
            const auto wn = testing::random_values(rng, 500);
            const auto r = adf_test(wn);
            wn_rejections += r.rejects_at_5pct() ? 1 : 0;
        }
        MESSAGE("random-walk rejections: " << rw_rejections << "/200, white-noise rejections: " << wn_rejections
                                           << "/200");
        CHECK(rw_rejections >= 4);
        CHECK(rw_rejections <= 18);
        CHECK(wn_rejections >= 190);
    }

    TEST_CASE("differenced white noise gives strongly negative statistics") {
        std::mt19937_64 rng(5);
        const auto wn = testing::random_values(rng, 500);
        CHECK(adf_test(wn, 0).t_stat < -10.0);
    }

    TEST_CASE("stationary AR(1) needs no differencing") {
        int none = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto sim = testing::simulate_process(testing::make_spec({1}, {}), ArmaCoefficients{{0.3}, {}, {}, {}},
                                                       168, seed);
            none += decide_differencing(sim.series).recommendation == DifferencingChoice::None ? 1 : 0;
        }
        CHECK(none >= 18);
    }

    TEST_CASE("seasonal random walk gets seasonal differencing") {
        int seasonal = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto sim = testing::simulate_process(testing::make_spec({}, {}, {}, {}, DifferenceSpec{0, 1, 12}),
                                                       ArmaCoefficients{}, 168, seed);
            const auto advice = decide_differencing(sim.series);
            seasonal += advice.recommendation == DifferencingChoice::Seasonal ? 1 : 0;
        }
        CHECK(seasonal >= 18);
    }
}
