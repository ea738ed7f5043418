#include "gdptrend/unitroot.hpp"

#include <algorithm>

#include "gdptrend/error.hpp"
#include "gdptrend/regression.hpp"

namespace gdptrend::unitroot {

namespace {

constexpr double kGlsCbarConstant = -7.0;
constexpr double kGlsCbarTrend = -13.5;

struct DfRegression {
    double statistic;
    std::size_t nobs;
};

DfRegression df_regression(std::span<const double> x, int lags, Deterministic det) {
    if (lags < 0) throw Error(ErrorKind::InvalidArgument, "lags must be >= 0");
    const std::size_t n = x.size();
    const auto p = static_cast<std::size_t>(lags);
    if (n < p + 10) {
        throw Error(ErrorKind::InsufficientData,
                    std::to_string(n) + " observations for " + std::to_string(lags) + " lags (need lags + 10)");
    }
    const std::size_t rows = n - p - 1;
    const std::size_t n_det = det == Deterministic::None ? 0 : det == Deterministic::Constant ? 1 : 2;
    const std::size_t rho_col = n_det;
    regression::Design design(rows, n_det + 1 + p);
    std::vector<double> y(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t t = r + p + 1;  // index of x_t
        y[r] = x[t] - x[t - 1];
        if (n_det >= 1) design(r, 0) = 1.0;
        if (n_det == 2) design(r, 1) = static_cast<double>(r + 1);
        design(r, rho_col) = x[t - 1];
        for (std::size_t i = 1; i <= p; ++i) design(r, rho_col + i) = x[t - i] - x[t - i - 1];
    }
    const auto fit = regression::ols(design, y);
    return {fit.t_ratio(rho_col), rows};
}

void require_gap_free(const AnnualSeries& s) {
    if (!s.is_gap_free()) {
        throw Error(ErrorKind::GapInSeries, s.country() + ": years are not consecutive");
    }
}

}  // namespace

UnitRootResult adf_test(std::span<const double> x, int lags, Deterministic det) {
    const auto reg = df_regression(x, lags, det);
    const auto cv = mackinnon_critical_values(det, reg.nobs);
    return {TestKind::Adf, det, lags, reg.statistic, cv, reg.statistic < cv.pct5, reg.nobs};
}

UnitRootResult adf_test(const AnnualSeries& series, int lags, Deterministic det) {
    require_gap_free(series);
    const auto v = series.values();
    return adf_test(v, lags, det);
}

std::vector<double> gls_detrend(std::span<const double> y, Deterministic det) {
    if (det == Deterministic::None) {
        throw Error(ErrorKind::InvalidArgument, "GLS detrending needs a constant or constant-and-trend");
    }
    const std::size_t n = y.size();
    if (n < 3) throw Error(ErrorKind::InsufficientData, "GLS detrending needs at least 3 observations");
    const bool trend = det == Deterministic::ConstantAndTrend;
    const double cbar = trend ? kGlsCbarTrend : kGlsCbarConstant;
    const double a = 1.0 + cbar / static_cast<double>(n);
    const std::size_t k = trend ? 2 : 1;

    regression::Design zq(n, k);
    std::vector<double> yq(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double time = static_cast<double>(t + 1);
        if (t == 0) {
            yq[t] = y[t];
            zq(t, 0) = 1.0;
            if (trend) zq(t, 1) = 1.0;
        } else {
            yq[t] = y[t] - a * y[t - 1];
            zq(t, 0) = 1.0 - a;
            if (trend) zq(t, 1) = time - a * (time - 1.0);
        }
    }
    const auto delta = regression::least_squares(zq, yq);
    std::vector<double> out(n);
    for (std::size_t t = 0; t < n; ++t) {
        double fitted = delta[0];
        if (trend) fitted += delta[1] * static_cast<double>(t + 1);
        out[t] = y[t] - fitted;
    }
    return out;
}

UnitRootResult dfgls_test(std::span<const double> y, int lags, Deterministic det) {
    const auto detrended = gls_detrend(y, det);
    const auto reg = df_regression(detrended, lags, Deterministic::None);
    const auto cv = dfgls_critical_values(det, y.size());
    return {TestKind::DfGls, det, lags, reg.statistic, cv, reg.statistic < cv.pct5, reg.nobs};
}

UnitRootResult dfgls_test(const AnnualSeries& series, int lags, Deterministic det) {
    require_gap_free(series);
    const auto v = series.values();
    return dfgls_test(v, lags, det);
}

bool BatteryRow::failed() const noexcept {
    return !adf.ok() || std::any_of(dfgls.begin(), dfgls.end(), [](const auto& c) { return !c.ok(); });
}

namespace {
template <typename F>
BatteryCell guarded(F&& f) {
    try {
        return {f(), {}};
    } catch (const Error& e) {
        return {std::nullopt, e.what()};
    }
}
}  // namespace

BatteryTable unitroot_battery(const ingest::PanelDataset& panel, YearWindow window, std::vector<int> lag_set,
                              std::optional<int> adf_lags) {
    if (lag_set.empty() && !adf_lags) throw Error(ErrorKind::InvalidArgument, "empty lag set");
    BatteryTable table{window, lag_set,
                       adf_lags.value_or(lag_set.empty() ? 0 : *std::max_element(lag_set.begin(), lag_set.end())),
                       {}};
    for (const auto& series : panel.series()) {
        BatteryRow row;
        row.country = series.country();
        std::optional<AnnualSeries> diff;
        std::string setup_error;
        try {
            const auto window_slice = slice(series, window);
            require_gap_free(window_slice);
            diff = first_difference(window_slice);
        } catch (const Error& e) {
            setup_error = e.what();
        }
        const auto cell = [&](auto&& test) -> BatteryCell {
            if (!diff) return {std::nullopt, setup_error};
            return guarded(test);
        };
        row.adf = cell([&] { return adf_test(*diff, table.adf_lags, Deterministic::Constant); });
        for (int lag : lag_set) {
            row.dfgls.push_back(cell([&] { return dfgls_test(*diff, lag, Deterministic::Constant); }));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace gdptrend::unitroot
