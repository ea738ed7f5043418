#pragma once

#include <cstddef>

namespace gdptrend::unitroot {

enum class Deterministic { None, Constant, ConstantAndTrend };

struct CriticalValues {
    double pct1;
    double pct5;
    double pct10;
};

/**
 * @brief Dickey-Fuller critical values from the MacKinnon (2010) response surface.
 *
 * cv(T) = b_inf + b1/T + b2/T^2 + b3/T^3 with T the number of observations in
 * the test regression.
 */
[[nodiscard]] CriticalValues mackinnon_critical_values(Deterministic det, std::size_t nobs);

/**
 * @brief DF-GLS critical values, linear in 1/n between tabulated sample sizes.
 *
 * Trend case: Elliott, Rothenberg and Stock (1996), Table 1. Constant case:
 * the tabulated no-constant Dickey-Fuller distribution (Fuller 1976), which
 * ERS show is the limit for GLS demeaning. n is the series length; values are
 * held flat outside the table.
 */
[[nodiscard]] CriticalValues dfgls_critical_values(Deterministic det, std::size_t n);

}  // namespace gdptrend::unitroot
