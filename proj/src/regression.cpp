#include "bjts/regression.hpp"

#include "bjts/errors.hpp"

#include <fmt/format.h>

namespace bjts {

OlsResult ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const std::vector<std::string>& names) {
    const auto n = X.rows();
    const auto k = X.cols();
    if (n != y.size()) {
        throw DimensionError(fmt::format("design has {} rows but response has {}", n, y.size()));
    }
    if (n <= k) {
        throw LengthError(fmt::format("regression needs more rows than columns ({} <= {})", n, k));
    }

    // Scale columns so the rank decision does not depend on units.
    Eigen::VectorXd scale = X.colwise().norm().transpose();
    for (Eigen::Index j = 0; j < k; ++j) {
        if (scale(j) == 0.0) {
            scale(j) = 1.0;
        }
    }
    const Eigen::MatrixXd Xs = X * scale.cwiseInverse().asDiagonal();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xs);
    qr.setThreshold(1e-10);
    if (qr.rank() < k) {
        std::string cols;
        const auto& perm = qr.colsPermutation().indices();
        for (Eigen::Index j = qr.rank(); j < k; ++j) {
            const auto c = static_cast<std::size_t>(perm(j));
            if (!cols.empty()) {
                cols += ", ";
            }
            cols += c < names.size() ? names[c] : fmt::format("column {}", c);
        }
        throw CollinearityError(fmt::format("collinear regressors: {} depend on the other columns", cols));
    }

    OlsResult r;
    r.coefficients = qr.solve(y).cwiseQuotient(scale);
    r.residuals = y - X * r.coefficients;
    r.ssr = r.residuals.squaredNorm();
    r.dof = static_cast<long>(n - k);
    const double s2 = r.ssr / static_cast<double>(r.dof);

    // (X'X)^-1 through R: X P = Q R  =>  (X'X)^-1 = P R^-1 R^-T P'.
    const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k).template triangularView<Eigen::Upper>();
    const Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    const Eigen::MatrixXd cov_perm = Rinv * Rinv.transpose();
    const Eigen::MatrixXd P = qr.colsPermutation();
    const Eigen::MatrixXd cov_scaled = P * cov_perm * P.transpose();

    r.std_errors.resize(k);
    r.t_stats.resize(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        r.std_errors(j) = std::sqrt(s2 * cov_scaled(j, j)) / scale(j);
        r.t_stats(j) = r.coefficients(j) / r.std_errors(j);
    }
    return r;
}

}  // namespace bjts
