#include "gdptrend/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gdptrend/break_analysis.hpp"
#include "gdptrend/deflator_bias.hpp"
#include "gdptrend/error.hpp"
#include "gdptrend/ingest.hpp"
#include "gdptrend/trend.hpp"
#include "gdptrend/unitroot.hpp"

#ifndef GDPTREND_DEFAULT_DATA_DIR
#define GDPTREND_DEFAULT_DATA_DIR "data"
#endif

namespace gdptrend::cli {

namespace {

constexpr const char* kEarlyFile = "maddison_gdppc_1870_1940.csv";
constexpr const char* kLateFile = "ted_gdppc_1950_2011.csv";
constexpr const char* kDeflatorFile = "us_gdp_deflator.csv";
constexpr const char* kCpiAnnualFile = "us_cpi_annual.csv";
constexpr const char* kCpiFile = "us_cpi_inflation_monthly.csv";
constexpr const char* kRateFile = "us_fedfunds_monthly.csv";
constexpr const char* kBeaFile = "us_real_gdppc_bea.csv";

std::string num(const RunConfig& c, double v) { return report::format_number(v, c.precision); }
std::string year_str(Year y) { return std::to_string(y); }

ingest::PanelDataset load_panel(const RunConfig& c, const std::filesystem::path& file, const char* fallback,
                                const char* source) {
    ingest::PanelOptions opts;
    opts.source = source;
    return ingest::load_annual_csv(c.resolve(file, fallback), opts);
}

ingest::PanelDataset load_spliced(const RunConfig& c) {
    const auto early = load_panel(c, c.early_file, kEarlyFile, "maddison");
    const auto late = load_panel(c, c.late_file, kLateFile, "ted");
    return ingest::splice(early, late, c.switch_year);
}

AnnualSeries load_single(const RunConfig& c, const std::filesystem::path& file, const char* fallback,
                         const char* variable, const char* unit) {
    ingest::PanelOptions opts;
    opts.variable = variable;
    opts.unit = unit;
    const auto path = c.resolve(file, fallback);
    const auto panel = ingest::load_annual_csv(path, opts);
    if (const auto* s = panel.find(c.country)) return *s;
    if (panel.size() == 1) return panel.series().front();
    throw Error(ErrorKind::InvalidArgument, path.string() + ": no series for " + c.country);
}

const AnnualSeries& require_country(const ingest::PanelDataset& panel, const std::string& country) {
    const auto* s = panel.find(country);
    if (s == nullptr) throw Error(ErrorKind::InvalidArgument, "country " + country + " not in the panel");
    return *s;
}

std::string cell(const RunConfig& c, const unitroot::BatteryCell& cell) {
    if (!cell.ok()) return "failed";
    const auto& r = *cell.result;
    return num(c, r.statistic) + (r.reject_5pct ? "" : "*");
}

std::string window_str(YearWindow w) { return year_str(w.start) + "-" + year_str(w.end); }

report::Table battery_table(const RunConfig& c, const ingest::PanelDataset& panel, YearWindow window,
                            std::vector<std::string>& diagnostics) {
    const auto table = unitroot::unitroot_battery(panel, window, c.lags, c.adf_lags);
    report::Table t;
    t.title = "unit root tests on first differences " + window_str(window) + ", constant, ADF lags " +
              std::to_string(table.adf_lags) + " (* = unit root not rejected at 5%)";
    t.header = {"country", "adf"};
    for (int lag : table.lags) t.header.push_back("dfgls_" + std::to_string(lag));
    for (const auto& row : table.rows) {
        std::vector<std::string> r{row.country, cell(c, row.adf)};
        for (const auto& d : row.dfgls) r.push_back(cell(c, d));
        t.rows.push_back(std::move(r));
        if (row.failed()) {
            const auto& bad = !row.adf.ok() ? row.adf
                                            : *std::find_if(row.dfgls.begin(), row.dfgls.end(),
                                                            [](const auto& x) { return !x.ok(); });
            diagnostics.push_back(row.country + " (" + window_str(window) + "): " + bad.error);
        }
    }
    return t;
}

struct MonthlyInputs {
    MonthlySeries rate;
    MonthlySeries cpi;
};

MonthlyInputs load_monthly(const RunConfig& c) {
    return {ingest::load_monthly_csv(c.resolve(c.rate_file, kRateFile), "federal-funds-rate"),
            ingest::load_monthly_csv(c.resolve(c.cpi_file, kCpiFile), "cpi")};
}

struct Cumulative {
    MonthlySeries rate;
    MonthlySeries cpi;
    MonthlySeries scaled;
};

Cumulative cumulative_curves(const RunConfig& c, const MonthlyInputs& m) {
    const auto cpi = c.fig5_smooth ? moving_average(m.cpi, c.ma_window) : m.cpi;
    const auto [rate, cpi_common] = bias::common_range(m.rate, cpi);
    return {bias::anchored_cumulative(rate), bias::anchored_cumulative(cpi_common),
            bias::anchored_cumulative(bias::scale_series(cpi_common, c.cpi_scale))};
}

std::string month_time(const RunConfig& c, const MonthlyObservation& o) {
    return num(c, fractional_year(o.year, o.month));
}

}  // namespace

void RunConfig::validate() const {
    const auto bad = [](const std::string& m) { throw Error(ErrorKind::InvalidArgument, m); };
    if (break_window.start > break_window.end) bad("break window start after end");
    if (base_year > target_year) bad("base year after target year");
    if (target_year < break_window.end) bad("target year inside or before the break window");
    if (!(cpi_scale > 0.0)) bad("cpi scale must be positive");
    if (precision < 1 || precision > 17) bad("precision must be within 1..17");
    if (ma_window < 1) bad("moving-average window must be >= 1");
    if (lags.empty() && !adf_lags) bad("no lags requested");
    for (int l : lags) {
        if (l < 0) bad("lags must be >= 0");
    }
    if (early_test_window.start > early_test_window.end || late_test_window.start > late_test_window.end) {
        bad("test window start after end");
    }
}

std::filesystem::path RunConfig::resolve(const std::filesystem::path& given, const char* fallback) const {
    if (!given.empty()) return given;
    const auto dir = data_dir.empty() ? std::filesystem::path(GDPTREND_DEFAULT_DATA_DIR) : data_dir;
    return dir / fallback;
}

Output cmd_trends(const RunConfig& c) {
    const auto panel = load_spliced(c);
    Output out;
    report::Table t;
    t.title = "segment trend slopes";
    t.header = {"country", "slope_ted", "slope_maddison", "ratio", "r2_early", "r2_late"};
    for (const auto& s : panel.series()) {
        try {
            const auto f = breaks::fit_segments(s, c.break_window);
            t.rows.push_back({s.country(), num(c, f.late.slope), num(c, f.early.slope),
                              num(c, f.late.slope / f.early.slope), num(c, f.early.r_squared),
                              num(c, f.late.r_squared)});
        } catch (const Error& e) {
            out.diagnostics.push_back(s.country() + ": " + e.what());
        }
    }
    out.tables.push_back(std::move(t));
    return out;
}

Output cmd_unitroot(const RunConfig& c) {
    const auto panel = load_spliced(c);
    Output out;
    out.tables.push_back(battery_table(c, panel, c.early_test_window, out.diagnostics));
    out.tables.push_back(battery_table(c, panel, c.late_test_window, out.diagnostics));
    return out;
}

Output cmd_tables(const RunConfig& c) {
    const auto panel = load_spliced(c);
    const auto pr = breaks::panel_report(panel, c.break_window, c.target_year);
    Output out;
    for (const auto& d : pr.diagnostics) out.diagnostics.push_back(d.country + ": " + d.message);

    const auto ty = year_str(c.target_year);
    report::Table levels;
    levels.title = "levels in " + ty + ": observed vs early trend extrapolation";
    levels.header = {"country", "observed_" + ty, "extrapolated_" + ty, "ratio"};
    for (const auto& r : pr.reports) {
        levels.rows.push_back({r.country, num(c, r.observed_level_at_target), num(c, r.extrapolated_level_at_target),
                               num(c, r.level_ratio)});
    }

    report::Table crossings;
    crossings.title = "zero crossing of the late trend (anomaly = outside 1900-1950)";
    crossings.header = {"country", "crossing_year", "anomaly"};
    for (const auto& row : breaks::crossing_summary(pr.reports)) {
        crossings.rows.push_back({row.country, num(c, row.crossing_year), row.anomaly ? "yes" : "no"});
    }

    report::Table gap;
    gap.title = "final-year deviation from the late trend (on trend = within 2%)";
    gap.header = {"country", "year", "deviation", "position"};
    for (const auto& r : pr.reports) {
        gap.rows.push_back({r.country, year_str(r.final_year), num(c, r.deviation_from_late_trend),
                            breaks::to_string(breaks::classify_deviation(r.deviation_from_late_trend))});
    }
    out.tables = {std::move(levels), std::move(crossings), std::move(gap)};
    return out;
}

Output cmd_bias(const RunConfig& c) {
    const auto panel = load_spliced(c);
    const auto& gdp = require_country(panel, c.country);
    const auto deflator =
        c.use_cpi_as_deflator
            ? load_single(c, c.cpi_annual_file, kCpiAnnualFile, "cpi", "index")
            : load_single(c, c.deflator_file, kDeflatorFile, "gdp-deflator", "index");
    const auto br = breaks::analyze_country(gdp, c.break_window, c.target_year);
    const auto b = bias::bias_pipeline(gdp, deflator, br, c.base_year, c.target_year, c.cpi_scale);

    Output out;
    report::Table t;
    t.title = "deflator bias, " + b.country + " " + year_str(b.base_year) + "-" + year_str(b.target_year);
    t.header = {"quantity", "value"};
    t.rows = {
        {"deflator_source", c.use_cpi_as_deflator ? "cpi" : "gdp-deflator"},
        {"base_year", year_str(b.base_year)},
        {"target_year", year_str(b.target_year)},
        {"shift_constant", num(c, b.shift_constant)},
        {"deflator_growth", num(c, b.deflator_growth)},
        {"overestimation_ratio", num(c, b.overestimation_ratio)},
        {"bias_factor", num(c, b.bias_factor)},
        {"alternative_bias_multiplicative", num(c, b.alternative_bias)},
        {"scaled_cpi_factor", num(c, b.scaled_cpi_factor)},
    };

    if (c.monthly) {
        const auto m = load_monthly(c);
        const auto cum = cumulative_curves(c, m);
        const auto events = bias::find_crossings(cum.scaled, cum.rate);
        const auto forecast = bias::forecast_convergence(cum.scaled, cum.rate, c.forecast_months);
        const auto& last_s = cum.scaled[cum.scaled.size() - 1];
        const auto& last_r = cum.rate[cum.rate.size() - 1];
        t.rows.push_back({"cumulative_crossings", std::to_string(events.size())});
        t.rows.push_back({"final_cumulative_gap", num(c, last_s.value - last_r.value)});
        t.rows.push_back({"forecast_zero_gap_year", forecast ? num(c, *forecast) : "none"});
        out.tables.push_back(std::move(t));

        report::Table ct;
        ct.title = "crossings of cumulative scaled CPI and cumulative rate";
        ct.header = {"time", "year", "month", "direction"};
        for (const auto& e : events) {
            ct.rows.push_back({num(c, e.time), year_str(e.year), std::to_string(e.month),
                               e.direction == bias::Direction::Upward ? "cpi-above" : "cpi-below"});
        }
        out.tables.push_back(std::move(ct));
    } else {
        out.tables.push_back(std::move(t));
    }
    return out;
}

std::vector<Figure> figure_tables(const RunConfig& c) {
    const auto panel = load_spliced(c);
    std::vector<Figure> figs;

    std::set<Year> all_years;
    for (const auto& s : panel.series()) {
        for (const auto& o : s.observations()) all_years.insert(o.year);
    }

    {
        report::Table t;
        t.header = {"year"};
        for (const auto& s : panel.series()) t.header.push_back(s.country());
        for (const auto& s : panel.series()) t.header.push_back("ln_" + s.country());
        for (Year y : all_years) {
            std::vector<std::string> row{year_str(y)};
            std::vector<std::string> logs;
            for (const auto& s : panel.series()) {
                const auto v = s.value_at(y);
                row.push_back(v ? num(c, *v) : "");
                logs.push_back(v && *v > 0.0 ? num(c, std::log(*v)) : "");
            }
            row.insert(row.end(), logs.begin(), logs.end());
            t.rows.push_back(std::move(row));
        }
        figs.push_back({"fig1.csv", std::move(t)});
    }

    {
        struct Entry {
            const AnnualSeries* series;
            breaks::SegmentFits fits;
        };
        std::vector<Entry> entries;
        for (const auto& s : panel.series()) {
            try {
                entries.push_back({&s, breaks::fit_segments(s, c.break_window)});
            } catch (const Error&) {
            }
        }
        report::Table t;
        t.header = {"year"};
        for (const auto& e : entries) {
            const auto& n = e.series->country();
            t.header.insert(t.header.end(), {n, n + "_early_trend", n + "_late_trend"});
        }
        if (!all_years.empty()) {
            const Year last = std::max(*all_years.rbegin(), c.target_year);
            for (Year y = *all_years.begin(); y <= last; ++y) {
                std::vector<std::string> row{year_str(y)};
                for (const auto& e : entries) {
                    const auto v = e.series->value_at(y);
                    row.push_back(v ? num(c, *v) : "");
                    row.push_back(num(c, trend::extrapolate(e.fits.early, y)));
                    row.push_back(num(c, trend::extrapolate(e.fits.late, y)));
                }
                t.rows.push_back(std::move(row));
            }
        }
        figs.push_back({"fig2.csv", std::move(t)});
    }

    {
        const auto& gdp = require_country(panel, c.country);
        const auto deflator = c.use_cpi_as_deflator
                                  ? load_single(c, c.cpi_annual_file, kCpiAnnualFile, "cpi", "index")
                                  : load_single(c, c.deflator_file, kDeflatorFile, "gdp-deflator", "index");
        const auto bea_path = c.resolve(c.bea_file, kBeaFile);
        std::optional<AnnualSeries> bea;
        if (!c.bea_file.empty() || std::filesystem::exists(bea_path)) {
            bea = load_single(c, c.bea_file, kBeaFile, "real-gdp-per-capita", "index");
        }
        const auto br = breaks::analyze_country(gdp, c.break_window, c.target_year);
        const YearWindow span{gdp.first_year(), std::max(gdp.last_year(), c.target_year)};
        const auto trend_line = bias::normalized_trend_line(br.early_fit, gdp, c.base_year, span);
        const double shift = bias::shift_constant(trend_line, 1.0, c.base_year);
        const auto shifted_trend = bias::apply_shift(trend_line, shift);
        const auto gdp_norm = normalize_to_base(gdp, c.base_year);
        const auto defl_norm = normalize_to_base(deflator, c.base_year);
        std::optional<AnnualSeries> bea_norm;
        if (bea) bea_norm = normalize_to_base(*bea, c.base_year);

        report::Table t;
        t.header = {"year", "gdppc_norm", "bea_gdppc_norm", "deflator_norm", "early_shifted", "trend_shifted"};
        for (Year y = span.start; y <= span.end; ++y) {
            const auto g = gdp_norm.value_at(y);
            const auto b = bea_norm ? bea_norm->value_at(y) : std::nullopt;
            const auto d = defl_norm.value_at(y);
            const bool early = y < c.break_window.start;
            t.rows.push_back({year_str(y), g ? num(c, *g) : "", b ? num(c, *b) : "", d ? num(c, *d) : "",
                              g && early ? num(c, *g + shift) : "", num(c, *shifted_trend.value_at(y))});
        }
        figs.push_back({"fig3.csv", std::move(t)});
    }

    const auto m = load_monthly(c);
    {
        const auto cpi = c.fig4_smooth ? moving_average(m.cpi, c.ma_window) : m.cpi;
        const auto [rate, cpi_common] = bias::common_range(m.rate, cpi);
        const auto scaled = bias::scale_series(cpi_common, c.cpi_scale);
        report::Table t;
        const std::string cpi_name = c.fig4_smooth ? "cpi_ma" + std::to_string(c.ma_window) : "cpi";
        t.header = {"year", "month", "time", "rate", cpi_name, "cpi_scaled"};
        for (const auto& o : rate.observations()) {
            const auto v = cpi_common.value_at(o.year, o.month);
            const auto s = scaled.value_at(o.year, o.month);
            t.rows.push_back({year_str(o.year), std::to_string(o.month), month_time(c, o), num(c, o.value),
                              v ? num(c, *v) : "", s ? num(c, *s) : ""});
        }
        figs.push_back({"fig4.csv", std::move(t)});
    }
    {
        const auto cum = cumulative_curves(c, m);
        report::Table t;
        t.header = {"year", "month", "time", "cum_rate", "cum_cpi", "cum_cpi_scaled"};
        for (const auto& o : cum.rate.observations()) {
            const auto v = cum.cpi.value_at(o.year, o.month);
            const auto s = cum.scaled.value_at(o.year, o.month);
            t.rows.push_back({year_str(o.year), std::to_string(o.month), month_time(c, o), num(c, o.value),
                              v ? num(c, *v) : "", s ? num(c, *s) : ""});
        }
        figs.push_back({"fig5.csv", std::move(t)});
    }
    return figs;
}

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateRegression:
        case ErrorKind::DegenerateTime:
        case ErrorKind::FlatTrend:
        case ErrorKind::ZeroLevel:
        case ErrorKind::ZeroTrendValue:
            return 3;
        default:
            return 2;
    }
}

void emit(const RunConfig& c, const Output& o, std::ostream& out, std::ostream& err) {
    for (const auto& d : o.diagnostics) err << "warning: " << d << "\n";
    const bool titles = o.tables.size() > 1 || c.format == report::Format::Markdown;
    std::string text;
    for (std::size_t i = 0; i < o.tables.size(); ++i) {
        if (i) text += "\n";
        text += report::render(o.tables[i], c.format, titles);
    }
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f || !(f << text)) throw Error(ErrorKind::Io, "cannot write " + c.out);
}

void write_figures(const RunConfig& c, std::ostream& out) {
    const auto figs = figure_tables(c);
    const std::filesystem::path dir = c.out.empty() ? std::filesystem::path(".") : std::filesystem::path(c.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());
    for (const auto& fig : figs) {
        const auto path = dir / fig.file_name;
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << report::render(fig.table, report::Format::Csv, false))) {
            throw Error(ErrorKind::Io, "cannot write " + path.string());
        }
        out << path.string() << "\n";
    }
}

void add_window(CLI::App* app, const std::string& name, std::vector<int>& storage, const std::string& help) {
    app->add_option(name, storage, help)->expected(2)->type_name("START END");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    c.data_dir = GDPTREND_DEFAULT_DATA_DIR;
    CLI::App app{"Segment trends, unit-root tests and deflator-bias arithmetic for GDP per capita panels"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    app.add_option("--data-dir", c.data_dir, "Directory with the bundled CSV files")->capture_default_str();
    app.add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "markdown"}))->capture_default_str();
    app.add_option("--out", c.out, "Output file (tables) or directory (figures)");
    app.add_option("--precision", c.precision, "Significant digits")->capture_default_str();
    app.add_option("--early", c.early_file, "Early annual panel CSV");
    app.add_option("--late", c.late_file, "Late annual panel CSV");
    app.add_option("--deflator", c.deflator_file, "GDP deflator CSV");
    app.add_option("--cpi-annual", c.cpi_annual_file, "Annual CPI level CSV");
    app.add_option("--cpi", c.cpi_file, "Monthly CPI inflation CSV");
    app.add_option("--rate", c.rate_file, "Monthly policy rate CSV");
    app.add_option("--bea", c.bea_file, "BEA real GDP per capita CSV (figure 3)");

    std::vector<int> break_window;
    const auto add_common = [&](CLI::App* sub) {
        add_window(sub, "--break", break_window, "Excluded break years (default 1941 1949)");
        sub->add_option("--switch-year", c.switch_year, "First year taken from the late panel")->capture_default_str();
    };
    const auto add_target = [&](CLI::App* sub) {
        sub->add_option("--target-year", c.target_year, "Year of the level comparison")->capture_default_str();
    };
    const auto add_bias = [&](CLI::App* sub) {
        sub->add_option("--country", c.country, "Country for the deflator analysis")->capture_default_str();
        sub->add_option("--base-year", c.base_year, "Normalization year")->capture_default_str();
        sub->add_option("--cpi-scale", c.cpi_scale, "CPI multiplier")->capture_default_str();
        sub->add_flag("--use-cpi-as-deflator", c.use_cpi_as_deflator, "Use annual CPI in place of the deflator");
    };

    auto* trends = app.add_subcommand("trends", "Early/late trend slopes and ratios");
    add_common(trends);

    auto* unitroot_cmd = app.add_subcommand("unitroot", "ADF and DF-GLS on first differences");
    add_common(unitroot_cmd);
    unitroot_cmd->add_option("--lags", c.lags, "DF-GLS lags")->delimiter(',')->capture_default_str();
    unitroot_cmd->add_option("--adf-lags", c.adf_lags, "ADF lags (default: largest DF-GLS lag)");
    std::vector<int> early_w, late_w;
    add_window(unitroot_cmd, "--early-window", early_w, "First test window (default 1870 1940)");
    add_window(unitroot_cmd, "--late-window", late_w, "Second test window (default 1950 2008)");

    auto* tables = app.add_subcommand("tables", "Level extrapolations, zero crossings, trend positions");
    add_common(tables);
    add_target(tables);

    auto* bias_cmd = app.add_subcommand("bias", "Deflator bias arithmetic and CPI/rate comparison");
    add_common(bias_cmd);
    add_target(bias_cmd);
    add_bias(bias_cmd);
    bias_cmd->add_option("--forecast-months", c.forecast_months, "Trailing months for the convergence forecast")
        ->capture_default_str();
    bool no_monthly = false;
    bias_cmd->add_flag("--no-monthly", no_monthly, "Skip the monthly CPI/rate comparison");

    auto* figures = app.add_subcommand("figures", "Write fig1.csv .. fig5.csv");
    add_common(figures);
    add_target(figures);
    add_bias(figures);
    figures->add_option("--ma-window", c.ma_window, "CPI moving-average length")->capture_default_str();
    bool fig4_raw = false;
    figures->add_flag("--fig4-raw", fig4_raw, "Plot raw CPI in figure 4");
    figures->add_flag("--fig5-smooth", c.fig5_smooth, "Accumulate smoothed CPI in figure 5");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        c.format = format == "markdown" ? report::Format::Markdown : report::Format::Csv;
        if (!break_window.empty()) c.break_window = YearWindow::make(break_window[0], break_window[1]);
        if (!early_w.empty()) c.early_test_window = YearWindow::make(early_w[0], early_w[1]);
        if (!late_w.empty()) c.late_test_window = YearWindow::make(late_w[0], late_w[1]);
        c.monthly = !no_monthly;
        c.fig4_smooth = !fig4_raw;
        c.validate();

        if (trends->parsed()) emit(c, cmd_trends(c), out, err);
        else if (unitroot_cmd->parsed()) emit(c, cmd_unitroot(c), out, err);
        else if (tables->parsed()) emit(c, cmd_tables(c), out, err);
        else if (bias_cmd->parsed()) emit(c, cmd_bias(c), out, err);
        else if (figures->parsed()) write_figures(c, out);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"gdptrend"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gdptrend::cli
