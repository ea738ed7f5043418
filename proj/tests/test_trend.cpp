#include <doctest.h>

#include <cmath>

#include "gdptrend/trend.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace gdptrend;
using namespace gdptrend::trend;

TEST_CASE("noiseless line") {
    std::vector<double> v;
    for (int t = 0; t <= 10; ++t) v.push_back(3.0 * t + 7.0);
    const auto fit = fit_linear_trend(annual_from(2000, v), {2000, 2010});
    CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(fit.intercept == doctest::Approx(7.0).epsilon(1e-14));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fit.time_origin == 2000);
    CHECK(fit.n_obs == 11);
    CHECK(fit.residual_std < 1e-12);
}

TEST_CASE("five noisy points against the normal-equation oracle") {
    const std::vector<double> t{0, 1, 2, 3, 4};
    const std::vector<double> v{2.1, 3.9, 6.2, 7.8, 10.3};
    const auto fit = fit_linear_trend(annual_from(1990, v), {1990, 1994});
    const auto ref = oracle::normal_equations(t, v);
    CHECK(fit.slope == doctest::Approx(ref.slope).epsilon(1e-9));
    CHECK(fit.intercept == doctest::Approx(ref.intercept).epsilon(1e-9));
    // Hand values: Sxy = 20.3, Sxx = 10, mean v = 6.06.
    CHECK(fit.slope == doctest::Approx(2.03).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(2.0).epsilon(1e-12));
    // SSR = 0.163, SST = 41.372.
    CHECK(fit.r_squared == doctest::Approx(1.0 - 0.163 / 41.372).epsilon(1e-12));
    CHECK(fit.residual_std == doctest::Approx(std::sqrt(0.163 / 3)).epsilon(1e-12));
    CHECK(fit.slope_stderr == doctest::Approx(std::sqrt(0.163 / 3 / 10)).epsilon(1e-12));
}

TEST_CASE("fit uses only observations inside the window") {
    const auto s = annual({{1900, 1000}, {1950, 10}, {1951, 12}, {1952, 14}});
    const auto fit = fit_linear_trend(s, {1950, 2011});
    CHECK(fit.n_obs == 3);
    CHECK(fit.slope == doctest::Approx(2.0));
    CHECK(fit.window == YearWindow{1950, 2011});
}

TEST_CASE("constant series and two points") {
    const auto flat = fit_linear_trend(annual_from(2000, {5, 5, 5, 5}), {2000, 2003});
    CHECK(flat.slope == 0.0);
    CHECK(flat.r_squared == 0.0);
    CHECK(flat.residual_std == 0.0);
    const auto two = fit_linear_trend(annual({{2000, 1}, {2004, 9}}), {2000, 2004});
    CHECK(two.slope == 2.0);
    CHECK(two.residual_std == 0.0);
    CHECK(two.slope_stderr == 0.0);
}

TEST_CASE("fit errors") {
    CHECK(kind_of([] { (void)fit_linear_trend(annual({{2000, 1}}), {2000, 2010}); }) == ErrorKind::InsufficientData);
    CHECK(kind_of([] { (void)fit_linear_trend(annual({{1990, 1}, {2000, 1}}), {1995, 2010}); }) ==
          ErrorKind::InsufficientData);
    const std::vector<double> t{3, 3, 3};
    const std::vector<double> v{1, 2, 3};
    CHECK(kind_of([&] { (void)fit_line(t, v); }) == ErrorKind::DegenerateTime);
}

TEST_CASE("extrapolate") {
    TrendFit fit;
    fit.slope = 3;
    fit.intercept = 7;
    fit.time_origin = 2000;
    CHECK(extrapolate(fit, 2010) == 37.0);

    const auto s = annual_from(1980, {3, 8, 4, 9, 12, 10, 15});
    const auto f = fit_linear_trend(s, {1980, 1986});
    CHECK(extrapolate(f, 1983) == doctest::Approx(61.0 / 7.0).epsilon(1e-14));
}

TEST_CASE("growth rate") {
    TrendFit fit;
    CHECK(growth_rate(fit, 123.0) == 0.0);
    fit.slope = 300;
    CHECK(growth_rate(fit, 300.0) == 1.0);
    fit.slope = 387.7;
    CHECK(growth_rate(fit, 30928.0) == doctest::Approx(0.012536).epsilon(1e-4));
    CHECK(kind_of([&] { (void)growth_rate(fit, 0.0); }) == ErrorKind::ZeroLevel);
}

TEST_CASE("zero crossing") {
    TrendFit fit;
    fit.slope = 2;
    fit.intercept = -4;
    fit.time_origin = 2000;
    CHECK(zero_crossing_year(fit) == 2002.0);
    fit.slope = 0;
    CHECK(kind_of([&] { (void)zero_crossing_year(fit); }) == ErrorKind::FlatTrend);
}

TEST_CASE("deviation from trend") {
    TrendFit fit;
    fit.slope = 0;
    fit.intercept = 100;
    fit.time_origin = 2000;
    CHECK(deviation_from_trend(annual({{2011, 100}}), fit, 2011) == 0.0);
    CHECK(deviation_from_trend(annual({{2011, 110}}), fit, 2011) == doctest::Approx(0.10).epsilon(1e-14));
    CHECK(kind_of([&] { (void)deviation_from_trend(annual({{2011, 110}}), fit, 2010); }) == ErrorKind::MissingYear);
    fit.intercept = 0;
    CHECK(kind_of([&] { (void)deviation_from_trend(annual({{2011, 110}}), fit, 2011); }) ==
          ErrorKind::ZeroTrendValue);
}
