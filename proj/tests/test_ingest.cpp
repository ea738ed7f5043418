#include <doctest.h>

#include <filesystem>

#include "gdptrend/ingest.hpp"
#include "helpers.hpp"

using namespace gdptrend;
using namespace gdptrend::ingest;

namespace {
std::size_t error_row(std::string_view text, Layout layout) {
    try {
        (void)parse_annual_csv(text, layout);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedCsv);
        return e.row();
    }
    FAIL("parsed");
    return 0;
}
}  // namespace

TEST_CASE("long layout") {
    const auto p = parse_annual_csv("country,year,value\nUS,1950,9561", Layout::Long);
    REQUIRE(p.size() == 1);
    CHECK(p.series()[0].country() == "US");
    CHECK(p.series()[0].observations().size() == 1);
    CHECK(p.series()[0].value_at(1950) == 9561.0);
}

TEST_CASE("long layout sorts years and keeps first-seen country order") {
    const auto p = parse_annual_csv("country,year,value\nUK,1951,2\nUS,1950,1\nUK,1950,3\n", Layout::Long);
    CHECK(p.countries() == std::vector<std::string>{"UK", "US"});
    CHECK(p.find("UK")->years() == std::vector<int>{1950, 1951});
}

TEST_CASE("wide layout with blank cells") {
    const auto p = parse_annual_csv("year,US,UK\n1950,9561,6939\n1951,,7002", Layout::Wide);
    REQUIRE(p.size() == 2);
    CHECK(p.find("US")->size() == 1);
    CHECK(p.find("US")->value_at(1950) == 9561.0);
    CHECK(p.find("UK")->size() == 2);
    CHECK(p.find("UK")->value_at(1951) == 7002.0);
}

TEST_CASE("malformed rows carry their row number") {
    CHECK(error_row("country,year,value\nUS,1950,1\nUS,1951,abc\n", Layout::Long) == 3);
    CHECK(error_row("country,year,value\nUS,1950,1\nUS,1950,2\n", Layout::Long) == 3);
    CHECK(error_row("country,yr,value\nUS,1950,1\n", Layout::Long) == 1);
    CHECK(error_row("country,year,value\nUS,1950\n", Layout::Long) == 2);
    CHECK(error_row("year,US\n1950,1\n1950,2\n", Layout::Wide) == 3);
    CHECK(error_row("year,US,US\n1950,1,2\n", Layout::Wide) == 1);
    CHECK(error_row("year,US\n1950,\"1,000\"\n", Layout::Wide) == 2);
    CHECK(error_row("country,year,value\nUS,1950,1 000\n", Layout::Long) == 2);
    CHECK(error_row("country,year,value\nUS,1950,inf\n", Layout::Long) == 2);
    CHECK(error_row("country,year,value\nUS,1950.5,1\n", Layout::Long) == 2);
    CHECK(error_row("country,year,value\n\nUS,1950,1\n", Layout::Long) == 2);
    CHECK(error_row("", Layout::Long) == 1);
}

TEST_CASE("BOM, CRLF, scientific notation and trailing blank lines") {
    const auto p = parse_annual_csv("\xEF\xBB\xBF" "country,year,value\r\nUS,1950,9.561e3\r\nUS,1951,-2.5E-1\r\n\r\n\n",
                                    Layout::Long);
    CHECK(p.find("US")->value_at(1950) == 9561.0);
    CHECK(p.find("US")->value_at(1951) == -0.25);
}

TEST_CASE("layout detection") {
    CHECK(detect_layout("country,year,value\n") == Layout::Long);
    CHECK(detect_layout("\xEF\xBB\xBFyear,US\n") == Layout::Wide);
}

TEST_CASE("monthly parsing") {
    const auto m = parse_monthly_csv("year,month,value\n1980,3,14.8");
    REQUIRE(m.size() == 1);
    CHECK(m[0] == MonthlyObservation{1980, 3, 14.8});
    CHECK(kind_of([] { (void)parse_monthly_csv("year,month,value\n1980,13,1"); }) == ErrorKind::MonthOutOfRange);
    CHECK(kind_of([] { (void)parse_monthly_csv("year,month,value\n1980,2,1\n1980,1,1"); }) ==
          ErrorKind::OutOfOrderTimestamps);
    CHECK(kind_of([] { (void)parse_monthly_csv("year,value\n1980,1"); }) == ErrorKind::MalformedCsv);
    CHECK(kind_of([] { (void)parse_monthly_csv("year,month,value\n1980,1,x"); }) == ErrorKind::MalformedCsv);
}

namespace {
PanelDataset panel_of(std::vector<AnnualSeries> series, std::string unit = "usd") {
    PanelDataset p("user", "real-gdp-per-capita", unit);
    for (auto& s : series) p.add(std::move(s));
    return p;
}
std::vector<AnnualObservation> range(int first, int last, double base) {
    std::vector<AnnualObservation> obs;
    for (int y = first; y <= last; ++y) obs.push_back({y, base + y});
    return obs;
}
AnnualSeries us(std::vector<AnnualObservation> obs) {
    return AnnualSeries({"US", "real-gdp-per-capita", "usd"}, std::move(obs));
}
}  // namespace

TEST_CASE("splice composes by year") {
    const auto early = panel_of({us(range(1870, 1950, 0))});
    const auto late = panel_of({us(range(1950, 2011, 1000))});
    const auto s = splice(early, late, 1950);
    const auto& u = *s.find("US");
    CHECK(u.size() == (1949 - 1870 + 1) + (2011 - 1950 + 1));
    CHECK(u.value_at(1949) == 1949.0);
    CHECK(u.value_at(1950) == 2950.0);
    CHECK(s.provenance().find("switch year 1950") != std::string::npos);

    const auto gapped = splice(panel_of({us(range(1870, 1940, 0))}), late, 1950);
    CHECK(gapped.find("US")->size() == 71 + 62);
    CHECK_FALSE(gapped.find("US")->contains(1945));

    const auto only_late = splice(PanelDataset(), panel_of({us(range(1940, 2011, 0))}), 1950);
    CHECK(only_late.find("US")->first_year() == 1950);
}

TEST_CASE("splice refuses mixed units") {
    const auto a = panel_of({us(range(1870, 1940, 0))});
    PanelDataset b("ted", "real-gdp-per-capita", "eur");
    b.add(AnnualSeries({"US", "real-gdp-per-capita", "eur"}, range(1950, 1960, 0)));
    CHECK(kind_of([&] { (void)splice(a, b, 1950); }) == ErrorKind::UnitMismatch);
    PanelDataset c("x", "real-gdp-per-capita", "usd");
    CHECK(kind_of([&] { c.add(AnnualSeries({"US", "gdp-deflator", "usd"}, range(1950, 1951, 0))); }) ==
          ErrorKind::UnitMismatch);
}

TEST_CASE("coverage warnings") {
    const auto full = panel_of({us(range(1870, 1940, 0))});
    CHECK(validate_panel(full, {1870, 1940}, 0.9).empty());
    std::vector<AnnualObservation> half;
    for (int y = 1870; y <= 1940; y += 2) half.push_back({y, 1.0});
    const auto w = validate_panel(panel_of({us(half)}), {1870, 1940}, 0.9);
    REQUIRE(w.size() == 1);
    CHECK(w[0].country == "US");
    CHECK(w[0].coverage == doctest::Approx(36.0 / 71.0));
    CHECK(validate_panel(PanelDataset(), {1870, 1940}, 0.9).empty());
}

TEST_CASE("long csv round trip is lossless") {
    const auto p = parse_annual_csv("year,A,B\n1950,0.1,1e-300\n1951,,3.141592653589793\n1952,-7,2\n", Layout::Wide);
    const auto again = parse_annual_csv(to_long_csv(p), Layout::Long);
    REQUIRE(again.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(again.series()[i] == p.series()[i]);
}

TEST_CASE("files") {
    CHECK(kind_of([] { (void)read_file("/nonexistent/file.csv"); }) == ErrorKind::Io);
    const auto p = load_annual_csv(std::filesystem::path(GDPTREND_DATA_DIR) / "ted_gdppc_1950_2011.csv");
    CHECK(p.size() == 14);
    CHECK(p.find("US")->value_at(1950) == 9561.0);
    try {
        (void)read_file("/nonexistent/file.csv");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/file.csv") != std::string::npos);
    }
}
