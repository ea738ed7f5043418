#include "gdptrend/series.hpp"

#include <algorithm>
#include <cmath>

#include "gdptrend/error.hpp"
#include "gdptrend/numeric.hpp"

namespace gdptrend {

YearWindow YearWindow::make(Year start, Year end) {
    if (start > end) {
        throw Error(ErrorKind::InvalidArgument,
                    "window start " + std::to_string(start) + " after end " + std::to_string(end));
    }
    return YearWindow{start, end};
}

AnnualSeries::AnnualSeries(SeriesLabels labels, std::vector<AnnualObservation> observations)
    : labels_(std::move(labels)), obs_(std::move(observations)) {
    for (std::size_t i = 0; i < obs_.size(); ++i) {
        if (!std::isfinite(obs_[i].value)) {
            throw Error(ErrorKind::InvalidArgument,
                        labels_.country + ": non-finite value in " + std::to_string(obs_[i].year));
        }
        if (i > 0 && obs_[i].year <= obs_[i - 1].year) {
            throw Error(ErrorKind::OutOfOrderTimestamps,
                        labels_.country + ": year " + std::to_string(obs_[i].year) +
                            " does not increase on " + std::to_string(obs_[i - 1].year));
        }
    }
}

Year AnnualSeries::first_year() const {
    if (obs_.empty()) throw Error(ErrorKind::InsufficientData, labels_.country + ": empty series");
    return obs_.front().year;
}

Year AnnualSeries::last_year() const {
    if (obs_.empty()) throw Error(ErrorKind::InsufficientData, labels_.country + ": empty series");
    return obs_.back().year;
}

std::optional<double> AnnualSeries::value_at(Year year) const noexcept {
    auto it = std::lower_bound(obs_.begin(), obs_.end(), year,
                               [](const AnnualObservation& o, Year y) { return o.year < y; });
    if (it == obs_.end() || it->year != year) return std::nullopt;
    return it->value;
}

bool AnnualSeries::is_gap_free() const noexcept {
    for (std::size_t i = 1; i < obs_.size(); ++i) {
        if (obs_[i].year != obs_[i - 1].year + 1) return false;
    }
    return true;
}

std::vector<double> AnnualSeries::values() const {
    std::vector<double> out;
    out.reserve(obs_.size());
    for (const auto& o : obs_) out.push_back(o.value);
    return out;
}

std::vector<Year> AnnualSeries::years() const {
    std::vector<Year> out;
    out.reserve(obs_.size());
    for (const auto& o : obs_) out.push_back(o.year);
    return out;
}

AnnualSeries AnnualSeries::with_observations(std::vector<AnnualObservation> observations) const {
    return AnnualSeries(labels_, std::move(observations));
}

MonthlySeries::MonthlySeries(std::string variable, std::vector<MonthlyObservation> observations)
    : variable_(std::move(variable)), obs_(std::move(observations)) {
    for (std::size_t i = 0; i < obs_.size(); ++i) {
        const auto& o = obs_[i];
        if (o.month < 1 || o.month > 12) {
            throw Error(ErrorKind::MonthOutOfRange, "month " + std::to_string(o.month));
        }
        if (!std::isfinite(o.value)) {
            throw Error(ErrorKind::InvalidArgument, variable_ + ": non-finite value");
        }
        if (i > 0 && o.index() <= obs_[i - 1].index()) {
            throw Error(ErrorKind::OutOfOrderTimestamps,
                        variable_ + ": " + std::to_string(o.year) + "-" + std::to_string(o.month) +
                            " is not after the previous month");
        }
    }
}

std::optional<double> MonthlySeries::value_at(int year, int month) const noexcept {
    const long key = static_cast<long>(year) * 12 + (month - 1);
    auto it = std::lower_bound(obs_.begin(), obs_.end(), key,
                               [](const MonthlyObservation& o, long k) { return o.index() < k; });
    if (it == obs_.end() || it->index() != key) return std::nullopt;
    return it->value;
}

MonthlySeries MonthlySeries::with_observations(std::vector<MonthlyObservation> observations) const {
    return MonthlySeries(variable_, std::move(observations));
}

double fractional_year(int year, int month) noexcept {
    return static_cast<double>(year) + static_cast<double>(month - 1) / 12.0;
}

AnnualSeries slice(const AnnualSeries& series, YearWindow window) {
    std::vector<AnnualObservation> out;
    for (const auto& o : series.observations()) {
        if (window.contains(o.year)) out.push_back(o);
    }
    return series.with_observations(std::move(out));
}

AnnualSeries first_difference(const AnnualSeries& series) {
    if (series.size() < 2) {
        throw Error(ErrorKind::TooShortSeries, series.country() + ": need at least 2 observations");
    }
    std::vector<AnnualObservation> out;
    const auto obs = series.observations();
    for (std::size_t i = 1; i < obs.size(); ++i) {
        if (obs[i].year == obs[i - 1].year + 1) {
            out.push_back({obs[i].year, obs[i].value - obs[i - 1].value});
        }
    }
    SeriesLabels labels = series.labels();
    labels.variable = "diff(" + labels.variable + ")";
    return AnnualSeries(std::move(labels), std::move(out));
}

MonthlySeries moving_average(const MonthlySeries& series, int window_len) {
    if (window_len < 1) throw Error(ErrorKind::InvalidArgument, "moving-average window must be >= 1");
    const auto w = static_cast<std::size_t>(window_len);
    if (series.size() < w) {
        throw Error(ErrorKind::TooShortSeries, series.variable() + ": shorter than the window");
    }
    const auto obs = series.observations();
    std::vector<MonthlyObservation> out;
    std::size_t run_start = 0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        if (i > 0 && obs[i].index() != obs[i - 1].index() + 1) run_start = i;
        if (i + 1 - run_start < w) continue;
        CompensatedSum sum;
        double lo = obs[i].value;
        double hi = obs[i].value;
        for (std::size_t j = i + 1 - w; j <= i; ++j) {
            sum.add(obs[j].value);
            lo = std::min(lo, obs[j].value);
            hi = std::max(hi, obs[j].value);
        }
        // Rounding must not push the mean outside the window's range.
        const double mean = std::clamp(sum.value() / static_cast<double>(w), lo, hi);
        out.push_back({obs[i].year, obs[i].month, mean});
    }
    return series.with_observations(std::move(out));
}

MonthlySeries cumulative(const MonthlySeries& series) {
    std::vector<MonthlyObservation> out;
    out.reserve(series.size());
    CompensatedSum sum;
    for (const auto& o : series.observations()) {
        sum.add(o.value);
        out.push_back({o.year, o.month, sum.value()});
    }
    return series.with_observations(std::move(out));
}

AnnualSeries cumulative(const AnnualSeries& series) {
    std::vector<AnnualObservation> out;
    out.reserve(series.size());
    CompensatedSum sum;
    for (const auto& o : series.observations()) {
        sum.add(o.value);
        out.push_back({o.year, sum.value()});
    }
    return series.with_observations(std::move(out));
}

AnnualSeries normalize_to_base(const AnnualSeries& series, Year base_year) {
    const auto base = series.value_at(base_year);
    if (!base) {
        throw Error(ErrorKind::MissingBaseYear,
                    series.country() + ": no observation in " + std::to_string(base_year));
    }
    if (*base == 0.0) {
        throw Error(ErrorKind::ZeroBaseValue,
                    series.country() + ": value is zero in " + std::to_string(base_year));
    }
    std::vector<AnnualObservation> out;
    out.reserve(series.size());
    for (const auto& o : series.observations()) out.push_back({o.year, o.value / *base});
    return series.with_observations(std::move(out));
}

}  // namespace gdptrend
