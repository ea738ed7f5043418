#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gdptrend::regression {

/** @brief Row-major design matrix. */
struct Design {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Design(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct OlsResult {
    std::vector<double> coef;
    std::vector<double> stderr_;
    double ssr = 0.0;
    std::size_t nobs = 0;

    [[nodiscard]] double t_ratio(std::size_t i) const { return coef[i] / stderr_[i]; }
};

/** @brief Coefficients only. Throws DegenerateRegression when X lacks full column rank. */
[[nodiscard]] std::vector<double> least_squares(const Design& x, std::span<const double> y);

/**
 * @brief Coefficients with classical standard errors.
 *
 * Throws DegenerateRegression on rank deficiency, no residual degrees of
 * freedom, or an exact fit (zero residual variance).
 */
[[nodiscard]] OlsResult ols(const Design& x, std::span<const double> y);

}  // namespace gdptrend::regression
