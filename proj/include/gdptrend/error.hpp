#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gdptrend {

enum class ErrorKind {
    InvalidArgument,
    TooShortSeries,
    MissingBaseYear,
    ZeroBaseValue,
    MalformedCsv,
    OutOfOrderTimestamps,
    MonthOutOfRange,
    UnitMismatch,
    InsufficientData,
    DegenerateTime,
    ZeroLevel,
    FlatTrend,
    MissingYear,
    ZeroTrendValue,
    GapInSeries,
    DegenerateRegression,
    InsufficientSegmentData,
    MissingTargetYear,
    MissingMatchYear,
    ZeroBase,
    NonpositiveGrowth,
    NoOverlap,
    Io,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/** @brief Every failure raised by the library. `row()` is 1-based and only set for CSV errors. */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::size_t row = 0);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t row() const noexcept { return row_; }
    /** @brief Message without the kind/row prefix. */
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
    std::size_t row_;
};

}  // namespace gdptrend
