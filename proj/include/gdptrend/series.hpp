#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gdptrend {

using Year = int;

/** @brief Closed interval of calendar years. */
struct YearWindow {
    Year start;
    Year end;

    /** @brief Throws InvalidArgument when start > end. */
    [[nodiscard]] static YearWindow make(Year start, Year end);

    [[nodiscard]] bool contains(Year y) const noexcept { return start <= y && y <= end; }
    [[nodiscard]] int length() const noexcept { return end - start + 1; }
    bool operator==(const YearWindow&) const = default;
};

struct AnnualObservation {
    Year year;
    double value;
    bool operator==(const AnnualObservation&) const = default;
};

struct SeriesLabels {
    std::string country;
    std::string variable;
    std::string unit;
    bool operator==(const SeriesLabels&) const = default;
};

/**
 * @brief Year-indexed values for one country and variable.
 *
 * Years are strictly increasing and values finite. Missing years are simply
 * absent. An empty series is representable (slices may come out empty).
 */
class AnnualSeries {
public:
    AnnualSeries() = default;
    AnnualSeries(SeriesLabels labels, std::vector<AnnualObservation> observations);

    [[nodiscard]] const SeriesLabels& labels() const noexcept { return labels_; }
    [[nodiscard]] const std::string& country() const noexcept { return labels_.country; }
    [[nodiscard]] const std::string& variable() const noexcept { return labels_.variable; }
    [[nodiscard]] const std::string& unit() const noexcept { return labels_.unit; }

    [[nodiscard]] std::span<const AnnualObservation> observations() const noexcept { return obs_; }
    [[nodiscard]] std::size_t size() const noexcept { return obs_.size(); }
    [[nodiscard]] bool empty() const noexcept { return obs_.empty(); }
    [[nodiscard]] const AnnualObservation& operator[](std::size_t i) const { return obs_[i]; }

    [[nodiscard]] Year first_year() const;
    [[nodiscard]] Year last_year() const;
    [[nodiscard]] std::optional<double> value_at(Year year) const noexcept;
    [[nodiscard]] bool contains(Year year) const noexcept { return value_at(year).has_value(); }

    /** @brief True when consecutive observations are exactly one year apart. */
    [[nodiscard]] bool is_gap_free() const noexcept;

    [[nodiscard]] std::vector<double> values() const;
    [[nodiscard]] std::vector<Year> years() const;

    /** @brief Same labels, new observations (validated). */
    [[nodiscard]] AnnualSeries with_observations(std::vector<AnnualObservation> observations) const;

    bool operator==(const AnnualSeries&) const = default;

private:
    SeriesLabels labels_;
    std::vector<AnnualObservation> obs_;
};

struct MonthlyObservation {
    int year;
    int month;  // 1..12
    double value;

    /** @brief Consecutive months differ by exactly one. */
    [[nodiscard]] long index() const noexcept { return static_cast<long>(year) * 12 + (month - 1); }
    bool operator==(const MonthlyObservation&) const = default;
};

/** @brief Month-indexed values; (year, month) strictly increasing. */
class MonthlySeries {
public:
    MonthlySeries() = default;
    MonthlySeries(std::string variable, std::vector<MonthlyObservation> observations);

    [[nodiscard]] const std::string& variable() const noexcept { return variable_; }
    [[nodiscard]] std::span<const MonthlyObservation> observations() const noexcept { return obs_; }
    [[nodiscard]] std::size_t size() const noexcept { return obs_.size(); }
    [[nodiscard]] bool empty() const noexcept { return obs_.empty(); }
    [[nodiscard]] const MonthlyObservation& operator[](std::size_t i) const { return obs_[i]; }
    [[nodiscard]] std::optional<double> value_at(int year, int month) const noexcept;

    [[nodiscard]] MonthlySeries with_observations(std::vector<MonthlyObservation> observations) const;

    bool operator==(const MonthlySeries&) const = default;

private:
    std::string variable_;
    std::vector<MonthlyObservation> obs_;
};

/** @brief Fractional calendar time of a month: year + (month - 1) / 12. */
[[nodiscard]] double fractional_year(int year, int month) noexcept;

[[nodiscard]] AnnualSeries slice(const AnnualSeries& series, YearWindow window);

/** @brief value(t) - value(t-1) for every pair exactly one year apart; gaps yield no point. */
[[nodiscard]] AnnualSeries first_difference(const AnnualSeries& series);

/**
 * @brief Trailing mean over `window_len` consecutive months.
 *
 * The first output sits at the window_len-th month of each gap-free run; a
 * month gap restarts the window.
 */
[[nodiscard]] MonthlySeries moving_average(const MonthlySeries& series, int window_len);

/** @brief Running sum, same timestamps. */
[[nodiscard]] MonthlySeries cumulative(const MonthlySeries& series);
[[nodiscard]] AnnualSeries cumulative(const AnnualSeries& series);

/** @brief Divide by the value at base_year; the base point becomes exactly 1. */
[[nodiscard]] AnnualSeries normalize_to_base(const AnnualSeries& series, Year base_year);

}  // namespace gdptrend
