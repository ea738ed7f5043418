#include "gdptrend/critical_values.hpp"

#include <array>
#include <limits>
#include <span>

#include "gdptrend/error.hpp"

namespace gdptrend::unitroot {

namespace {

// MacKinnon, "Critical Values for Cointegration Tests", QED WP 1227 (2010),
// Table 2, N = 1: {b_inf, b1, b2, b3} for 1%, 5%, 10%.
using Surface = std::array<std::array<double, 4>, 3>;

constexpr Surface kNoConstant{{
    {-2.56574, -2.2358, -3.627, 0.0},
    {-1.94100, -0.2686, -3.365, 31.223},
    {-1.61682, 0.2656, -2.714, 25.364},
}};
constexpr Surface kConstant{{
    {-3.43035, -6.5393, -16.786, -79.433},
    {-2.86154, -2.8903, -4.234, -40.040},
    {-2.56677, -1.5384, -2.809, 0.0},
}};
constexpr Surface kConstantTrend{{
    {-3.95877, -9.0531, -28.428, -134.155},
    {-3.41049, -4.3904, -9.036, -45.374},
    {-3.12705, -2.5856, -3.925, -22.380},
}};

double surface(const std::array<double, 4>& b, double t) {
    return b[0] + b[1] / t + b[2] / (t * t) + b[3] / (t * t * t);
}

struct Row {
    double n;  // infinity for the asymptotic row
    CriticalValues cv;
};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fuller (1976), Table 8.5.2, no-constant case.
constexpr std::array<Row, 6> kGlsConstant{{
    {25, {-2.66, -1.95, -1.60}},
    {50, {-2.62, -1.95, -1.61}},
    {100, {-2.60, -1.95, -1.61}},
    {250, {-2.58, -1.95, -1.62}},
    {500, {-2.58, -1.95, -1.62}},
    {kInf, {-2.58, -1.95, -1.62}},
}};

// Elliott, Rothenberg and Stock (1996), Table 1, linear trend, c = -13.5.
constexpr std::array<Row, 4> kGlsTrend{{
    {50, {-3.77, -3.19, -2.89}},
    {100, {-3.58, -3.03, -2.74}},
    {200, {-3.46, -2.93, -2.64}},
    {kInf, {-3.48, -2.89, -2.57}},
}};

double lerp(double a, double b, double w) { return a + (b - a) * w; }

CriticalValues interpolate(std::span<const Row> table, double n) {
    if (n <= table.front().n) return table.front().cv;
    for (std::size_t i = 1; i < table.size(); ++i) {
        if (n > table[i].n) continue;
        const double x = 1.0 / n;
        const double x0 = 1.0 / table[i - 1].n;
        const double x1 = table[i].n == kInf ? 0.0 : 1.0 / table[i].n;
        const double w = (x - x0) / (x1 - x0);
        const auto& a = table[i - 1].cv;
        const auto& b = table[i].cv;
        return {lerp(a.pct1, b.pct1, w), lerp(a.pct5, b.pct5, w), lerp(a.pct10, b.pct10, w)};
    }
    return table.back().cv;
}

}  // namespace

CriticalValues mackinnon_critical_values(Deterministic det, std::size_t nobs) {
    if (nobs == 0) throw Error(ErrorKind::InvalidArgument, "critical values need nobs > 0");
    const Surface& s = det == Deterministic::None       ? kNoConstant
                       : det == Deterministic::Constant ? kConstant
                                                        : kConstantTrend;
    const auto t = static_cast<double>(nobs);
    return {surface(s[0], t), surface(s[1], t), surface(s[2], t)};
}

CriticalValues dfgls_critical_values(Deterministic det, std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "critical values need n > 0");
    switch (det) {
        case Deterministic::Constant: return interpolate(kGlsConstant, static_cast<double>(n));
        case Deterministic::ConstantAndTrend: return interpolate(kGlsTrend, static_cast<double>(n));
        case Deterministic::None: break;
    }
    throw Error(ErrorKind::InvalidArgument, "DF-GLS needs a constant or constant-and-trend specification");
}

}  // namespace gdptrend::unitroot
