#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gdptrend/cli.hpp"
#include "gdptrend/ingest.hpp"
#include "helpers.hpp"

using namespace gdptrend;

namespace {
struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), {"--data-dir", GDPTREND_DATA_DIR});
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::filesystem::path temp_dir(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / ("gdptrend_test_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

cli::RunConfig bundled() {
    cli::RunConfig c;
    c.data_dir = GDPTREND_DATA_DIR;
    return c;
}
}  // namespace

TEST_CASE("trends on bundled data") {
    const auto r = run({"trends"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 15);
    CHECK(l[0] == "country,slope_ted,slope_maddison,ratio,r2_early,r2_late");
    CHECK(l[14].rfind("US,387.7,60.8593,6.37043,", 0) == 0);

    const auto md = run({"trends", "--format", "markdown"});
    REQUIRE(md.code == 0);
    CHECK(md.out.find("| country | slope_ted | slope_maddison | ratio | r2_early | r2_late |") != std::string::npos);
    CHECK(md.out.find("| US | 387.7 | 60.8593 | 6.37043 |") != std::string::npos);

    CHECK(run({"--precision", "3", "trends"}).out.find("US,388,60.9,6.37,") != std::string::npos);
}

TEST_CASE("missing input file exits 2 and names the path") {
    const auto r = run({"trends", "--early", "/no/such/early.csv"});
    CHECK(r.code == 2);
    CHECK(r.err.find("/no/such/early.csv") != std::string::npos);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"trends", "--format", "xml"}).code == 2);
    CHECK(run({"bias", "--base-year", "2020"}).code == 2);
    CHECK(run({"bias", "--cpi-scale", "-1"}).code == 2);
}

TEST_CASE("unitroot tables and lag flag") {
    const auto r = run({"unitroot"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("country,adf,dfgls_4,dfgls_3,dfgls_2,dfgls_1") != std::string::npos);
    CHECK(r.out.find("1870-1940") != std::string::npos);
    CHECK(r.out.find("1950-2008") != std::string::npos);
    CHECK(r.out.find("US,-7.05248,") != std::string::npos);

    const auto two = run({"unitroot", "--lags", "2"});
    REQUIRE(two.code == 0);
    CHECK(two.out.find("country,adf,dfgls_2\n") != std::string::npos);
    CHECK(two.out.find("dfgls_4") == std::string::npos);
}

TEST_CASE("gap-ridden custom panel marks failed rows and still succeeds") {
    const auto dir = temp_dir("gaps");
    {
        std::ofstream f(dir / "early.csv");
        f << "year,A,B\n";
        for (int y = 1870; y <= 1940; ++y) {
            f << y << "," << (1000 + 20 * (y - 1870) + (y * 7919 % 13)) << ",";
            if (y != 1900) f << (900 + 30 * (y - 1870) + (y * 104729 % 17));
            f << "\n";
        }
    }
    const auto r = run({"unitroot", "--early", (dir / "early.csv").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("B,failed,failed,failed,failed,failed") != std::string::npos);
    CHECK(r.out.find("A,-") != std::string::npos);
    CHECK(r.err.find("B (1870-1940)") != std::string::npos);
}

TEST_CASE("tables and target year") {
    const auto r = run({"tables"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("country,observed_2011,extrapolated_2011,ratio") != std::string::npos);
    CHECK(r.out.find("US,30928,10955.9,2.82295") != std::string::npos);
    CHECK(r.out.find("Japan,1944,no") != std::string::npos);

    const auto y2000 = run({"tables", "--target-year", "2000"});
    REQUIRE(y2000.code == 0);
    CHECK(y2000.out.find("country,observed_2000,extrapolated_2000,ratio") != std::string::npos);
    CHECK(y2000.out.find("US,30928,") == std::string::npos);
}

TEST_CASE("bias") {
    const auto r = run({"bias"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("deflator_source,gdp-deflator") != std::string::npos);
    CHECK(r.out.find("bias_factor,") != std::string::npos);
    CHECK(r.out.find("alternative_bias_multiplicative,") != std::string::npos);
    const auto cpi = run({"bias", "--use-cpi-as-deflator", "--no-monthly"});
    REQUIRE(cpi.code == 0);
    CHECK(cpi.out.find("deflator_source,cpi") != std::string::npos);
    CHECK(cpi.out.find("cumulative_crossings") == std::string::npos);
    CHECK(cpi.out != r.out);
}

TEST_CASE("bias on synthetic fixtures gives exact formula outputs") {
    const auto dir = temp_dir("bias");
    {
        std::ofstream e(dir / "e.csv"), l(dir / "l.csv"), d(dir / "d.csv");
        e << "country,year,value\n";
        for (int y = 1870; y <= 1940; ++y) e << "US," << y << "," << 1000 + 50 * (y - 1870) << "\n";
        l << "country,year,value\n";
        for (int y = 1950; y <= 2011; ++y) l << "US," << y << "," << 6000 + 300 * (y - 1950) << "\n";
        d << "country,year,value\nUS,1950,25\nUS,2011,100\n";
    }
    const auto r = run({"bias", "--early", (dir / "e.csv").string(), "--late", (dir / "l.csv").string(),
                        "--deflator", (dir / "d.csv").string(), "--no-monthly", "--precision", "12"});
    REQUIRE(r.code == 0);
    // early trend 1000 + 50 (y - 1870): 2011 -> 8050; observed 24300
    CHECK(r.out.find("deflator_growth,4\n") != std::string::npos);
    CHECK(r.out.find("overestimation_ratio,3.01863354037\n") != std::string::npos);
    CHECK(r.out.find("bias_factor,1.75465838509\n") != std::string::npos);
    CHECK(r.out.find("shift_constant,0.166666666667\n") != std::string::npos);
}

TEST_CASE("figures") {
    const auto dir = temp_dir("figs");
    const auto r = run({"figures", "--out", dir.string()});
    REQUIRE(r.code == 0);
    for (const char* f : {"fig1.csv", "fig2.csv", "fig3.csv", "fig4.csv", "fig5.csv"}) {
        CHECK(std::filesystem::exists(dir / f));
    }
    const auto figs = cli::figure_tables(bundled());
    REQUIRE(figs.size() == 5);

    const auto& f3 = figs[2].table;
    CHECK(f3.header.back() == "trend_shifted");
    bool found = false;
    for (const auto& row : f3.rows) {
        if (row[0] == "1950") {
            CHECK(row.back() == "1");
            CHECK(row[1] == "1");
            found = true;
        }
    }
    CHECK(found);

    const auto& f5 = figs[4].table;
    REQUIRE(!f5.rows.empty());
    CHECK(f5.rows[0][3] == "0");
    CHECK(f5.rows[0][4] == "0");
    CHECK(f5.rows[0][5] == "0");

    CHECK(figs[3].table.header == std::vector<std::string>{"year", "month", "time", "rate", "cpi_ma12", "cpi_scaled"});
    CHECK(figs[0].table.header.size() == 1 + 2 * 14);
    CHECK(figs[1].table.header.size() == 1 + 3 * 14);
}

TEST_CASE("unwritable output exits 2") {
    const auto dir = temp_dir("ro");
    { std::ofstream(dir / "file") << "x"; }
    CHECK(run({"figures", "--out", (dir / "file" / "sub").string()}).code == 2);
    CHECK(run({"trends", "--out", (dir / "missing" / "t.csv").string()}).code == 2);
}

TEST_CASE("output is deterministic and --out matches stdout") {
    const auto a = run({"tables"});
    const auto b = run({"tables"});
    CHECK(a.out == b.out);
    const auto dir = temp_dir("det");
    const auto path = (dir / "t.csv").string();
    REQUIRE(run({"tables", "--out", path}).code == 0);
    CHECK(ingest::read_file(path) == a.out);
}
