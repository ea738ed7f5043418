#include "gdptrend/regression.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "gdptrend/error.hpp"

namespace gdptrend::regression {

namespace {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Factored {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
    Eigen::VectorXd beta;
};

Factored factor(const Design& x, std::span<const double> y) {
    if (y.size() != x.rows) throw Error(ErrorKind::InvalidArgument, "design rows and response length differ");
    if (x.rows < x.cols || x.cols == 0) {
        throw Error(ErrorKind::DegenerateRegression,
                    std::to_string(x.rows) + " rows for " + std::to_string(x.cols) + " regressors");
    }
    const Eigen::MatrixXd xm = Eigen::Map<const Matrix>(x.data.data(), x.rows, x.cols);
    const Eigen::VectorXd ym = Eigen::Map<const Eigen::VectorXd>(y.data(), y.size());
    Factored f{Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(xm), {}};
    if (f.qr.rank() < static_cast<Eigen::Index>(x.cols)) {
        throw Error(ErrorKind::DegenerateRegression, "regressors are collinear or have zero variance");
    }
    f.beta = f.qr.solve(ym);
    return f;
}

}  // namespace

std::vector<double> least_squares(const Design& x, std::span<const double> y) {
    const auto f = factor(x, y);
    return {f.beta.data(), f.beta.data() + f.beta.size()};
}

OlsResult ols(const Design& x, std::span<const double> y) {
    const auto f = factor(x, y);
    const Eigen::MatrixXd xm = Eigen::Map<const Matrix>(x.data.data(), x.rows, x.cols);
    const Eigen::VectorXd ym = Eigen::Map<const Eigen::VectorXd>(y.data(), y.size());
    const Eigen::VectorXd resid = ym - xm * f.beta;

    const auto dof = static_cast<double>(x.rows - x.cols);
    if (dof <= 0.0) throw Error(ErrorKind::DegenerateRegression, "no residual degrees of freedom");
    const double ssr = resid.squaredNorm();
    const double s2 = ssr / dof;
    if (!(s2 > 0.0)) throw Error(ErrorKind::DegenerateRegression, "exact fit: zero residual variance");

    // X P = Q R, so cov(beta) = s2 * P (R'R)^-1 P'.
    const auto k = static_cast<Eigen::Index>(x.cols);
    const Eigen::MatrixXd r = f.qr.matrixR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv =
        r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    const auto& perm = f.qr.colsPermutation().indices();

    OlsResult out;
    out.coef.assign(f.beta.data(), f.beta.data() + k);
    out.stderr_.assign(x.cols, 0.0);
    for (Eigen::Index j = 0; j < k; ++j) {
        out.stderr_[static_cast<std::size_t>(perm(j))] = std::sqrt(s2 * r_inv.row(j).squaredNorm());
    }
    out.ssr = ssr;
    out.nobs = x.rows;
    return out;
}

}  // namespace gdptrend::regression
