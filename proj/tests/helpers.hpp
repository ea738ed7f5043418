#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include <doctest.h>

#include "gdptrend/error.hpp"
#include "gdptrend/series.hpp"

inline gdptrend::AnnualSeries annual(std::initializer_list<std::pair<int, double>> points,
                                     const char* country = "X") {
    std::vector<gdptrend::AnnualObservation> obs;
    for (const auto& [y, v] : points) obs.push_back({y, v});
    return gdptrend::AnnualSeries({country, "real-gdp-per-capita", "usd"}, std::move(obs));
}

inline gdptrend::AnnualSeries annual_from(int first_year, const std::vector<double>& values,
                                          const char* country = "X") {
    std::vector<gdptrend::AnnualObservation> obs;
    for (std::size_t i = 0; i < values.size(); ++i) obs.push_back({first_year + static_cast<int>(i), values[i]});
    return gdptrend::AnnualSeries({country, "real-gdp-per-capita", "usd"}, std::move(obs));
}

inline gdptrend::MonthlySeries monthly(int year, int month, const std::vector<double>& values,
                                       const char* variable = "m") {
    std::vector<gdptrend::MonthlyObservation> obs;
    for (double v : values) {
        obs.push_back({year, month, v});
        if (++month > 12) {
            month = 1;
            ++year;
        }
    }
    return gdptrend::MonthlySeries(variable, std::move(obs));
}

/** @brief Kind of the gdptrend::Error thrown by f; fails the test if none is. */
template <typename F>
gdptrend::ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const gdptrend::Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return gdptrend::ErrorKind::InvalidArgument;
}
