#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gdptrend/critical_values.hpp"
#include "gdptrend/ingest.hpp"
#include "gdptrend/series.hpp"

namespace gdptrend::unitroot {

enum class TestKind { Adf, DfGls };

struct UnitRootResult {
    TestKind test;
    Deterministic deterministic;
    int lags;
    double statistic;  // t-ratio of the lagged level
    CriticalValues critical_values;
    bool reject_5pct;  // statistic < critical_values.pct5
    std::size_t n_effective;
};

/**
 * @brief Augmented Dickey-Fuller test.
 *
 * Regresses dx_t on [1, t,] x_{t-1}, dx_{t-1} .. dx_{t-lags} over
 * n - lags - 1 rows. Needs n >= lags + 10 (InsufficientData); a singular
 * design or exact fit raises DegenerateRegression.
 */
[[nodiscard]] UnitRootResult adf_test(std::span<const double> x, int lags, Deterministic det);
/** @brief As above; GapInSeries when years are not consecutive. */
[[nodiscard]] UnitRootResult adf_test(const AnnualSeries& series, int lags, Deterministic det);

/** @brief Local-to-unity GLS demeaning (c = -7) or detrending (c = -13.5). */
[[nodiscard]] std::vector<double> gls_detrend(std::span<const double> y, Deterministic det);

/** @brief DF-GLS: no-deterministic ADF regression on gls_detrend(y). */
[[nodiscard]] UnitRootResult dfgls_test(std::span<const double> y, int lags, Deterministic det);
[[nodiscard]] UnitRootResult dfgls_test(const AnnualSeries& series, int lags, Deterministic det);

struct BatteryCell {
    std::optional<UnitRootResult> result;
    std::string error;  // set when result is empty

    [[nodiscard]] bool ok() const noexcept { return result.has_value(); }
};

struct BatteryRow {
    std::string country;
    BatteryCell adf;
    std::vector<BatteryCell> dfgls;  // aligned with BatteryTable::lags

    [[nodiscard]] bool failed() const noexcept;
};

struct BatteryTable {
    YearWindow window;
    std::vector<int> lags;
    int adf_lags;
    std::vector<BatteryRow> rows;
};

/**
 * @brief Per country: first differences of the window slice, one ADF at
 * max(lag_set) and one DF-GLS per lag, constant case. Failures stay in
 * their cells.
 */
[[nodiscard]] BatteryTable unitroot_battery(const ingest::PanelDataset& panel, YearWindow window,
                                            std::vector<int> lag_set = {4, 3, 2, 1},
                                            std::optional<int> adf_lags = std::nullopt);

}  // namespace gdptrend::unitroot
