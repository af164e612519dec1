#include "doctest.h"

#include "bjts/errors.hpp"
#include "bjts/lag_polynomial.hpp"
#include "bjts/model_io.hpp"
#include "bjts/nelder_mead.hpp"
#include "bjts/regression.hpp"
#include "bjts/sarima.hpp"
#include "support.hpp"

#include <algorithm>
#include <numbers>

using namespace bjts;

namespace {

const SarimaSpec kSelected =
    testing::make_spec({9}, {14}, {12}, {24}, DifferenceSpec{0, 1, 12}, false);

double ssr_of(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return s;
}

}  // namespace

TEST_SUITE("sarima") {
    TEST_CASE("MA expansion reproduces 1 + 0.255B^14 - 0.860B^24 - 0.219B^38") {
        const auto p = expand(kSelected, ArmaCoefficients{{0.154}, {-0.513}, {0.255}, {-0.860}});
        CHECK(p.ma.degree() == 38);
        CHECK(p.ma[14] == doctest::Approx(0.255));
        CHECK(p.ma[24] == doctest::Approx(-0.860));
        CHECK(p.ma[38] == doctest::Approx(-0.2193));
        CHECK(p.ma.to_string() == "1 + 0.255B^14 - 0.860B^24 - 0.219B^38");
    }

    TEST_CASE("AR expansion is the algebraic product") {
        const auto p = expand(kSelected, ArmaCoefficients{{0.154}, {-0.513}, {0.255}, {-0.860}});
        CHECK(p.ar[9] == doctest::Approx(-0.154));
        CHECK(p.ar[12] == doctest::Approx(0.513));
        CHECK(p.ar[21] == doctest::Approx(-0.154 * 0.513));
        CHECK(p.ar.to_string() == "1 - 0.154B^9 + 0.513B^12 - 0.079B^21");
    }

    TEST_CASE("empty lag sets expand to 1") {
        const auto p = expand(testing::make_spec({}, {}), ArmaCoefficients{});
        CHECK(p.ar == LagPolynomial{});
        CHECK(p.ma == LagPolynomial{});
        CHECK(p.ar.degree() == 0);
    }

    TEST_CASE("missing coefficient is a specification error") {
        CHECK_THROWS_AS((void)expand(kSelected, ArmaCoefficients{{0.1}, {}, {0.2}, {0.3}}), SpecificationError);
    }

    TEST_CASE("spec validation") {
        CHECK_THROWS_AS(testing::make_spec({}, {}, {13}).validate(), SpecificationError);
        CHECK_THROWS_AS(testing::make_spec({1, 1}, {}).validate(), SpecificationError);
        CHECK_THROWS_AS(testing::make_spec({0}, {}).validate(), SpecificationError);
        CHECK(kSelected.describe() == "AR(9), SAR(12), MA(14), SMA(24)");
        CHECK(kSelected.term_names() == std::vector<std::string>{"AR(9)", "SAR(12)", "MA(14)", "SMA(24)"});
    }

    TEST_CASE("expansion is bilinear in the seasonal coefficient") {
        const auto spec = testing::make_spec({2}, {3}, {12}, {12});
        const ArmaCoefficients base{{0.4}, {0.3}, {-0.2}, {0.5}};
        ArmaCoefficients scaled = base;
        scaled.sar[0] *= 2.5;
        scaled.sma[0] *= 2.5;
        const auto p = expand(spec, base);
        const auto q = expand(spec, scaled);
        for (int k = 1; k <= 15; ++k) {
            CAPTURE(k);
            const bool seasonal = k == 12 || k == 14 || k == 15;
            CHECK(q.ar[k] == doctest::Approx(seasonal ? 2.5 * p.ar[k] : p.ar[k]));
            CHECK(q.ma[k] == doctest::Approx(seasonal ? 2.5 * p.ma[k] : p.ma[k]));
        }
    }

    TEST_CASE("lag polynomial product degree and roots") {
        const auto a = LagPolynomial::from_terms(std::vector<int>{1}, std::vector<double>{0.5}, -1.0);
        const auto b = LagPolynomial::from_terms(std::vector<int>{2}, std::vector<double>{0.25}, -1.0);
        const auto c = a * b;
        CHECK(c.degree() == 3);
        CHECK(a.min_root_modulus() == doctest::Approx(2.0));
        CHECK(b.min_root_modulus() == doctest::Approx(2.0));
        CHECK(c.min_root_modulus() == doctest::Approx(2.0));
        // 1 - 1.5B + 0.5B^2 = (1 - B)(1 - 0.5B) has a unit root.
        CHECK(LagPolynomial::from_dense({1.0, -1.5, 0.5}).min_root_modulus() == doctest::Approx(1.0));
    }

    TEST_CASE("factor-wise root check agrees with the expanded polynomial") {
        std::mt19937_64 rng(12);
        std::uniform_real_distribution<double> u(-0.9, 0.9);
        const auto spec = testing::make_spec({1, 2}, {1}, {12}, {12});
        for (int rep = 0; rep < 30; ++rep) {
            const ArmaCoefficients c{{u(rng), u(rng) * 0.5}, {u(rng)}, {u(rng)}, {u(rng)}};
            const auto polys = expand(spec, c);
            const auto moduli = root_moduli(spec, c);
            CHECK(moduli.ar == doctest::Approx(polys.ar.min_root_modulus()).epsilon(1e-6));
            CHECK(moduli.ma == doctest::Approx(polys.ma.min_root_modulus()).epsilon(1e-6));
        }
    }

    TEST_CASE("css residuals by hand") {
        const LagPolynomial one;
        const std::vector<double> z{1.5, -2.0, 0.25};
        CHECK(css_residuals(z, one, one, 0.0) == z);
        const auto ar = LagPolynomial::from_terms(std::vector<int>{1}, std::vector<double>{0.5}, -1.0);
        CHECK(css_residuals(std::vector<double>{1, 0.5, 0.25}, ar, one, 0.0) == std::vector<double>{1, 0, 0});
        const auto ma = LagPolynomial::from_terms(std::vector<int>{1}, std::vector<double>{0.5}, 1.0);
        CHECK(css_residuals(std::vector<double>{1, 0}, one, ma, 0.0) == std::vector<double>{1, -0.5});
    }

    TEST_CASE("css residuals recover the generating shocks") {
        const auto spec = testing::make_spec({1}, {1}, {12}, {12});
        const ArmaCoefficients c{{0.5}, {-0.3}, {0.4}, {0.5}};
        const auto sim = testing::simulate_process(spec, c, 3000, 99, 2.0, 0.7);
        const auto polys = expand(spec, c);
        const auto a = css_residuals(sim.z, polys.ar, polys.ma, 0.7);
        double worst = 0.0;
        for (std::size_t t = a.size() / 2; t < a.size(); ++t) worst = std::max(worst, std::abs(a[t] - sim.shocks[t]));
        CHECK(worst < 1e-6);
    }

    TEST_CASE("criteria closed form") {
        const auto c = criteria(100.0, 100, 1);
        CHECK(c.sigma2 == doctest::Approx(1.0));
        CHECK(c.loglik == doctest::Approx(-50.0 * (1.0 + std::log(2.0 * std::numbers::pi))).epsilon(1e-12));
        CHECK(std::abs(c.loglik - -141.8939) < 1e-4);
        CHECK(std::abs(c.aic - 2.8579) < 1e-4);
        CHECK(c.aic < c.bic);
        CHECK(criteria(100.0, 100, 2).aic - c.aic == doctest::Approx(0.02));
        CHECK_THROWS_AS((void)criteria(0.0, 100, 1), DegenerateFitError);
    }

    TEST_CASE("criteria increase with ssr and with parameter count") {
        for (int T : {8, 50, 168, 1000}) {
            for (int n = 1; n < 5; ++n) {
                const auto base = criteria(10.0, T, n);
                const auto more_ssr = criteria(10.5, T, n);
                const auto more_n = criteria(10.0, T, n + 1);
                CHECK(more_ssr.aic > base.aic);
                CHECK(more_ssr.bic > base.bic);
                CHECK(more_n.aic > base.aic);
                CHECK(more_n.bic > base.bic);
                CHECK(base.bic >= base.aic);
            }
        }
    }

    TEST_CASE("AR(1) coefficient recovered at T = 2000") {
        const auto spec = testing::make_spec({1}, {});
        int within = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto sim = testing::simulate_process(spec, ArmaCoefficients{{0.5}, {}, {}, {}}, 2000, seed);
            const auto m = estimate(spec, sim.series);
            within += std::abs(m.parameter("AR(1)") - 0.5) <= 0.08 ? 1 : 0;
            CHECK(m.converged);
        }
        CHECK(within >= 18);
    }

    TEST_CASE("constant-only fit equals the sample mean and variance") {
        std::mt19937_64 rng(6);
        auto y = testing::random_values(rng, 400, 3.0);
        for (auto& v : y) v += 10.0;
        const TimeSeries ts(Period{2000, 1}, y);
        const auto m = estimate(testing::make_spec({}, {}, {}, {}, {}, true), ts);
        double mean = 0.0;
        for (double v : y) mean += v;
        mean /= static_cast<double>(y.size());
        double var = 0.0;
        for (double v : y) var += (v - mean) * (v - mean);
        var /= static_cast<double>(y.size());
        CHECK(m.delta == doctest::Approx(mean).epsilon(1e-6));
        CHECK(m.sigma2 == doctest::Approx(var).epsilon(0.02));
        CHECK(m.implied_mean() == doctest::Approx(mean).epsilon(1e-6));
        CHECK(std::abs(m.t_stat("C")) > 2.0);
    }

    TEST_CASE("estimated SSR does not exceed the SSR at the true parameters") {
        const auto spec = testing::make_spec({1}, {1}, {}, {12}, DifferenceSpec{0, 1, 12});
        const ArmaCoefficients truth{{0.5}, {}, {0.3}, {-0.6}};
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto sim = testing::simulate_process(spec, truth, 400, seed);
            const auto fitted = estimate(spec, sim.series);
            const auto at_truth = apply_model(spec, truth, 0.0, sim.series);
            CHECK(fitted.ssr <= at_truth.ssr * (1.0 + 1e-9));
            CHECK(fitted.residuals.size() == sim.series.size() - 12);
            CHECK(fitted.ar_poly.min_root_modulus() > 1.0);
            CHECK(fitted.ma_poly.min_root_modulus() > 1.0);
            CHECK(fitted.bic >= fitted.aic);
        }
    }

    TEST_CASE("estimation is deterministic") {
        const auto spec = testing::make_spec({1}, {1});
        const auto sim = testing::simulate_process(spec, ArmaCoefficients{{0.6}, {}, {-0.3}, {}}, 300, 4);
        const auto a = estimate(spec, sim.series);
        const auto b = estimate(spec, sim.series);
        CHECK(a.coefficients == b.coefficients);
        CHECK(a.ssr == b.ssr);
    }

    TEST_CASE("constant rule drops an insignificant constant") {
        const auto spec = testing::make_spec({1}, {}, {}, {}, {}, true);
        const auto sim = testing::simulate_process(testing::make_spec({1}, {}), ArmaCoefficients{{0.5}, {}, {}, {}},
                                                   500, 21);
        const auto full = estimate(spec, sim.series);
        const auto ruled = estimate_with_constant_rule(spec, sim.series);
        if (std::abs(full.t_stat("C")) < 2.0) {
            CHECK(ruled.constant_dropped);
            CHECK_FALSE(ruled.spec.constant);
        } else {
            CHECK_FALSE(ruled.constant_dropped);
        }
    }

    TEST_CASE("too short a series for the parameter count") {
        const TimeSeries ts(Period{2000, 1}, std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9});
        CHECK_THROWS_AS((void)estimate(testing::make_spec({1, 2}, {}), ts), LengthError);
    }

    TEST_CASE("model document round-trips bit-exactly") {
        const auto spec = testing::make_spec({1}, {1}, {}, {12}, DifferenceSpec{0, 1, 12}, true);
        const auto sim = testing::simulate_process(spec, ArmaCoefficients{{0.4}, {}, {0.2}, {-0.5}}, 200, 8, 1.0, 0.3);
        const auto m = estimate(spec, sim.series);
        const auto text = dump_model(m);
        const auto back = load_model(text);
        CHECK(back.spec == m.spec);
        CHECK(back.coefficients == m.coefficients);
        CHECK(back.delta == m.delta);
        CHECK(back.sigma2 == m.sigma2);
        CHECK(back.loglik == m.loglik);
        CHECK(back.aic == m.aic);
        CHECK(back.bic == m.bic);
        CHECK(back.adj_r2 == m.adj_r2);
        CHECK(back.t_stats == m.t_stats);
        CHECK(back.residuals == m.residuals);
        CHECK(back.series == m.series);
        CHECK(dump_model(back) == text);
    }

    TEST_CASE("malformed model documents are parse errors") {
        CHECK_THROWS_AS((void)load_model("{"), ParseError);
        CHECK_THROWS_AS((void)load_model("{}"), ParseError);
    }

    TEST_CASE("least squares flags collinear columns") {
        Eigen::MatrixXd X(6, 3);
        X << 1, 2, 3, 1, 3, 4, 1, 5, 6, 1, 1, 2, 1, 0, 1, 1, 7, 8;
        const Eigen::VectorXd y = Eigen::VectorXd::LinSpaced(6, 0, 5);
        try {
            (void)ols(X, y, {"const", "x", "x_plus_one"});
            FAIL("expected a collinearity error");
        } catch (const CollinearityError& e) {
            CHECK(std::string(e.what()).find("x") != std::string::npos);
        }
    }

    TEST_CASE("least squares recovers an exact fit's coefficients") {
        Eigen::MatrixXd X(5, 2);
        X << 1, 0, 1, 1, 1, 2, 1, 3, 1, 4;
        Eigen::VectorXd y(5);
        y << 1.1, 2.9, 5.2, 6.8, 9.1;
        const auto r = ols(X, y);
        // Closed form: slope = Sxy/Sxx.
        CHECK(r.coefficients(1) == doctest::Approx(19.9 / 10.0));
        CHECK(r.dof == 3);
    }

    TEST_CASE("simplex minimises the Rosenbrock function") {
        auto rosen = [](std::span<const double> x) {
            return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
        };
        NelderMeadOptions opts;
        opts.max_evaluations = 20000;
        const auto r = nelder_mead(rosen, {-1.2, 1.0}, opts);
        CHECK(r.converged);
        CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-4));
    }
}
