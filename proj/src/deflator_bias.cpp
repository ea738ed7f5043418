#include "gdptrend/deflator_bias.hpp"

#include <algorithm>
#include <cmath>

#include "gdptrend/error.hpp"
#include "gdptrend/numeric.hpp"

namespace gdptrend::bias {

double shift_constant(const AnnualSeries& target, double reference_value, Year match_year) {
    const auto v = target.value_at(match_year);
    if (!v) {
        throw Error(ErrorKind::MissingMatchYear,
                    target.country() + ": no observation in " + std::to_string(match_year));
    }
    return reference_value - *v;
}

AnnualSeries apply_shift(const AnnualSeries& series, double shift) {
    std::vector<AnnualObservation> out;
    out.reserve(series.size());
    for (const auto& o : series.observations()) out.push_back({o.year, o.value + shift});
    return series.with_observations(std::move(out));
}

double deflator_growth(const AnnualSeries& deflator, Year base_year, Year target_year) {
    const auto base = deflator.value_at(base_year);
    const auto target = deflator.value_at(target_year);
    if (!base || !target) {
        throw Error(ErrorKind::MissingYear, deflator.country() + ": deflator lacks " +
                                                std::to_string(base ? target_year : base_year));
    }
    if (*base == 0.0) throw Error(ErrorKind::ZeroBase, deflator.country() + ": deflator is zero in base year");
    return *target / *base;
}

double bias_factor(double deflator_growth, double overestimation_ratio) {
    if (!(deflator_growth > 0.0)) {
        throw Error(ErrorKind::NonpositiveGrowth, "deflator growth must be positive");
    }
    return (deflator_growth + overestimation_ratio) / deflator_growth;
}

MonthlySeries scale_series(const MonthlySeries& series, double factor) {
    std::vector<MonthlyObservation> out;
    out.reserve(series.size());
    for (const auto& o : series.observations()) out.push_back({o.year, o.month, o.value * factor});
    return series.with_observations(std::move(out));
}

std::pair<MonthlySeries, MonthlySeries> common_range(const MonthlySeries& a, const MonthlySeries& b) {
    if (a.empty() || b.empty()) throw Error(ErrorKind::NoOverlap, "empty monthly series");
    const long lo = std::max(a[0].index(), b[0].index());
    const long hi = std::min(a[a.size() - 1].index(), b[b.size() - 1].index());
    if (lo > hi) throw Error(ErrorKind::NoOverlap, a.variable() + " and " + b.variable() + " do not overlap");
    const auto restrict = [&](const MonthlySeries& s) {
        std::vector<MonthlyObservation> out;
        for (const auto& o : s.observations()) {
            if (o.index() >= lo && o.index() <= hi) out.push_back(o);
        }
        return s.with_observations(std::move(out));
    };
    return {restrict(a), restrict(b)};
}

MonthlySeries anchored_cumulative(const MonthlySeries& series) {
    std::vector<MonthlyObservation> out;
    out.reserve(series.size());
    CompensatedSum sum;
    for (const auto& o : series.observations()) {
        if (!out.empty()) sum.add(o.value);
        out.push_back({o.year, o.month, sum.value()});
    }
    return series.with_observations(std::move(out));
}

namespace {

struct GapPoint {
    const MonthlyObservation* at;  // timestamp source
    double gap;
};

std::vector<GapPoint> gaps(const MonthlySeries& a, const MonthlySeries& b) {
    std::vector<GapPoint> out;
    const auto x = a.observations();
    const auto y = b.observations();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].index() < y[j].index()) {
            ++i;
        } else if (y[j].index() < x[i].index()) {
            ++j;
        } else {
            out.push_back({&x[i], x[i].value - y[j].value});
            ++i;
            ++j;
        }
    }
    if (out.empty()) throw Error(ErrorKind::NoOverlap, a.variable() + " and " + b.variable() + " share no month");
    return out;
}

double month_time(long index) { return static_cast<double>(index) / 12.0; }

}  // namespace

std::vector<CrossingEvent> find_crossings(const MonthlySeries& a, const MonthlySeries& b) {
    const auto g = gaps(a, b);
    std::vector<CrossingEvent> events;
    std::size_t last_nonzero = g.size();
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k].gap == 0.0) continue;
        if (last_nonzero != g.size() && (g[k].gap > 0.0) != (g[last_nonzero].gap > 0.0)) {
            const Direction dir = g[k].gap > 0.0 ? Direction::Upward : Direction::Downward;
            CrossingEvent e{};
            e.direction = dir;
            if (last_nonzero + 1 == k) {
                const auto& p = g[last_nonzero];
                const double w = p.gap / (p.gap - g[k].gap);
                const auto i0 = p.at->index();
                const auto i1 = g[k].at->index();
                e.year = p.at->year;
                e.month = p.at->month;
                e.fraction = w;
                e.time = month_time(i0) + w * (month_time(i1) - month_time(i0));
            } else {
                const auto& z = g[last_nonzero + 1];
                e.year = z.at->year;
                e.month = z.at->month;
                e.fraction = 0.0;
                e.time = month_time(z.at->index());
            }
            events.push_back(e);
        }
        last_nonzero = k;
    }
    return events;
}

std::optional<double> forecast_convergence(const MonthlySeries& a, const MonthlySeries& b, std::size_t months) {
    const auto g = gaps(a, b);
    if (months < 2) throw Error(ErrorKind::InvalidArgument, "trailing window needs at least 2 months");
    const std::size_t n = std::min(months, g.size());
    std::vector<double> t;
    std::vector<double> v;
    for (std::size_t k = g.size() - n; k < g.size(); ++k) {
        t.push_back(month_time(g[k].at->index()));
        v.push_back(g[k].gap);
    }
    const auto fit = trend::fit_line(t, v);
    const double last_gap = v.back();
    if (last_gap == 0.0) return t.back();
    if (fit.slope == 0.0 || (fit.slope > 0.0) == (last_gap > 0.0)) return std::nullopt;
    return -fit.intercept / fit.slope;
}

AnnualSeries normalized_trend_line(const trend::TrendFit& fit, const AnnualSeries& series, Year base_year,
                                   YearWindow years) {
    const auto base = series.value_at(base_year);
    if (!base) {
        throw Error(ErrorKind::MissingBaseYear, series.country() + ": no observation in " + std::to_string(base_year));
    }
    if (*base == 0.0) throw Error(ErrorKind::ZeroBaseValue, series.country() + ": zero value in base year");
    std::vector<AnnualObservation> out;
    for (Year y = years.start; y <= years.end; ++y) out.push_back({y, trend::extrapolate(fit, y) / *base});
    SeriesLabels labels = series.labels();
    labels.variable = "normalized-early-trend";
    labels.unit = "ratio to " + std::to_string(base_year);
    return AnnualSeries(std::move(labels), std::move(out));
}

BiasReport bias_pipeline(const AnnualSeries& real_gdp_pc, const AnnualSeries& deflator,
                         const breaks::BreakReport& break_report, Year base_year, Year target_year,
                         double scaled_cpi_factor) {
    if (real_gdp_pc.country() != break_report.country) {
        throw Error(ErrorKind::InvalidArgument,
                    "series is " + real_gdp_pc.country() + " but the break report is " + break_report.country);
    }
    if (base_year > target_year) throw Error(ErrorKind::InvalidArgument, "base year after target year");
    if (break_report.target_year != target_year) {
        throw Error(ErrorKind::InvalidArgument, "break report was built for " +
                                                    std::to_string(break_report.target_year));
    }
    if (!(scaled_cpi_factor > 0.0)) throw Error(ErrorKind::InvalidArgument, "CPI scale must be positive");

    const auto normalized = normalize_to_base(real_gdp_pc, base_year);
    const auto trend_line = normalized_trend_line(break_report.early_fit, real_gdp_pc, base_year,
                                                  {base_year, base_year});
    BiasReport r;
    r.country = real_gdp_pc.country();
    r.base_year = base_year;
    r.target_year = target_year;
    r.base_level = *real_gdp_pc.value_at(base_year);
    r.shift_constant = shift_constant(trend_line, *normalized.value_at(base_year), base_year);
    r.deflator_growth = deflator_growth(deflator, base_year, target_year);
    r.overestimation_ratio = break_report.level_ratio;
    if (!(r.overestimation_ratio > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, r.country + ": overestimation ratio must be positive");
    }
    r.bias_factor = bias_factor(r.deflator_growth, r.overestimation_ratio);
    r.alternative_bias = r.deflator_growth * r.overestimation_ratio / r.deflator_growth;
    r.scaled_cpi_factor = scaled_cpi_factor;
    return r;
}

}  // namespace gdptrend::bias
