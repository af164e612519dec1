#include "doctest.h"

#include "bjts/errors.hpp"
#include "bjts/transform.hpp"
#include "support.hpp"

#include <numeric>

using namespace bjts;

TEST_SUITE("transform") {
    TEST_CASE("differencing a constant gives zeros") {
        const auto z = difference(std::vector<double>{5, 5, 5, 5}, DifferenceSpec{1, 0, 12});
        CHECK(z.values == std::vector<double>{0, 0, 0});
        CHECK(z.warmup == std::vector<double>{5});
    }

    TEST_CASE("seasonal difference of 1..24 is twelve 12s") {
        std::vector<double> y(24);
        std::iota(y.begin(), y.end(), 1.0);
        const auto z = difference(y, DifferenceSpec{0, 1, 12});
        CHECK(z.values == std::vector<double>(12, 12.0));
    }

    TEST_CASE("no differencing is the identity") {
        const std::vector<double> y{3, 1, 4, 1, 5};
        const auto z = difference(y, DifferenceSpec{0, 0, 12});
        CHECK(z.values == y);
        CHECK(z.warmup.empty());
    }

    TEST_CASE("too-short series names the minimum length") {
        try {
            (void)difference(std::vector<double>(12, 1.0), DifferenceSpec{0, 1, 12});
            FAIL("expected a length error");
        } catch (const LengthError& e) {
            CHECK(std::string(e.what()).find("13") != std::string::npos);
        }
        CHECK_THROWS_AS(DifferenceSpec(3, 0, 12).validate(), SpecificationError);
    }

    TEST_CASE("round trip over every supported order") {
        std::mt19937_64 rng(42);
        for (int d = 0; d <= 2; ++d) {
            for (int D = 0; D <= 2; ++D) {
                const DifferenceSpec spec{d, D, 12};
                const auto y = testing::random_values(rng, 80, 50.0);
                const auto z = difference(y, spec);
                const auto back = restore(z);
                REQUIRE(back.size() == y.size());
                for (std::size_t i = 0; i < y.size(); ++i) {
                    CHECK(testing::rel_diff(back[i], y[i]) < 1e-9);
                }
            }
        }
    }

    TEST_CASE("zero extension under seasonal differencing repeats the final year") {
        std::mt19937_64 rng(1);
        const auto y = testing::random_values(rng, 40);
        const auto z = difference(y, DifferenceSpec{0, 1, 12});
        const auto ext = integrate(z, std::vector<double>(24, 0.0));
        REQUIRE(ext.size() == 24);
        for (std::size_t h = 0; h < 24; ++h) {
            CHECK(ext[h] == doctest::Approx(y[y.size() - 12 + h % 12]).epsilon(1e-12));
        }
    }

    TEST_CASE("d=1, D=1 extension matches brute-force reconstruction") {
        std::mt19937_64 rng(9);
        const auto y = testing::random_values(rng, 30, 10.0);
        const DifferenceSpec spec{1, 1, 12};
        const auto z = difference(y, spec);
        const std::vector<double> ext{0.5, -1.25, 2.0};
        const auto got = integrate(z, ext);

        // (1-B)(1-B^12) y_t = z_t  =>  y_t = z_t + y_{t-1} + y_{t-12} - y_{t-13}
        auto full = y;
        for (double e : ext) {
            const std::size_t t = full.size();
            full.push_back(e + full[t - 1] + full[t - 12] - full[t - 13]);
        }
        REQUIRE(got.size() == 3);
        for (std::size_t h = 0; h < 3; ++h) {
            CHECK(got[h] == doctest::Approx(full[30 + h]).epsilon(1e-12));
        }
    }

    TEST_CASE("integration without enough history fails") {
        CHECK_THROWS_AS((void)integrate_from(std::vector<double>(5, 1.0), DifferenceSpec{0, 1, 12},
                                             std::vector<double>{1.0}),
                        IntegrationError);
    }

    TEST_CASE("differencing is linear") {
        std::mt19937_64 rng(17);
        const DifferenceSpec spec{1, 1, 12};
        const auto x = testing::random_values(rng, 60);
        const auto y = testing::random_values(rng, 60);
        std::vector<double> comb(60);
        for (std::size_t i = 0; i < 60; ++i) comb[i] = 2.5 * x[i] - 0.75 * y[i];
        const auto dx = difference(x, spec).values;
        const auto dy = difference(y, spec).values;
        const auto dc = difference(comb, spec).values;
        for (std::size_t i = 0; i < dc.size(); ++i) {
            CHECK(dc[i] == doctest::Approx(2.5 * dx[i] - 0.75 * dy[i]).epsilon(1e-12));
        }
    }

    TEST_CASE("seasonal-then-regular equals regular-then-seasonal") {
        std::mt19937_64 rng(23);
        const auto y = testing::random_values(rng, 70);
        for (int d = 0; d <= 2; ++d) {
            for (int D = 0; D <= 1; ++D) {
                const auto lib = difference(y, DifferenceSpec{d, D, 12}).values;
                const auto naive = testing::naive_difference(y, d, D, 12);
                REQUIRE(lib.size() == naive.size());
                for (std::size_t i = 0; i < lib.size(); ++i) {
                    CHECK(lib[i] == doctest::Approx(naive[i]).epsilon(1e-12));
                }
            }
        }
    }

    TEST_CASE("differencing operator coefficients") {
        CHECK(differencing_operator(DifferenceSpec{1, 1, 4}) == std::vector<double>{1, -1, 0, 0, -1, 1});
        CHECK(differencing_operator(DifferenceSpec{2, 0, 12}) == std::vector<double>{1, -2, 1});
    }
}
