#include "gdptrend/error.hpp"

namespace gdptrend {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::TooShortSeries: return "too-short-series";
        case ErrorKind::MissingBaseYear: return "missing-base-year";
        case ErrorKind::ZeroBaseValue: return "zero-base-value";
        case ErrorKind::MalformedCsv: return "malformed-csv";
        case ErrorKind::OutOfOrderTimestamps: return "out-of-order-timestamps";
        case ErrorKind::MonthOutOfRange: return "month-out-of-range";
        case ErrorKind::UnitMismatch: return "unit-mismatch";
        case ErrorKind::InsufficientData: return "insufficient-data";
        case ErrorKind::DegenerateTime: return "degenerate-time";
        case ErrorKind::ZeroLevel: return "zero-level";
        case ErrorKind::FlatTrend: return "flat-trend";
        case ErrorKind::MissingYear: return "missing-year";
        case ErrorKind::ZeroTrendValue: return "zero-trend-value";
        case ErrorKind::GapInSeries: return "gap-in-series";
        case ErrorKind::DegenerateRegression: return "degenerate-regression";
        case ErrorKind::InsufficientSegmentData: return "insufficient-segment-data";
        case ErrorKind::MissingTargetYear: return "missing-target-year";
        case ErrorKind::MissingMatchYear: return "missing-match-year";
        case ErrorKind::ZeroBase: return "zero-base";
        case ErrorKind::NonpositiveGrowth: return "nonpositive-growth";
        case ErrorKind::NoOverlap: return "no-overlap";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

namespace {
std::string decorate(ErrorKind kind, const std::string& message, std::size_t row) {
    std::string out(to_string(kind));
    if (row != 0) out += " (row " + std::to_string(row) + ")";
    out += ": ";
    out += message;
    return out;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::size_t row)
    : std::runtime_error(decorate(kind, message, row)), kind_(kind), detail_(message), row_(row) {}

}  // namespace gdptrend
