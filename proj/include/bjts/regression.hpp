#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bjts {

struct OlsResult {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd std_errors;
    Eigen::VectorXd t_stats;
    Eigen::VectorXd residuals;
    double ssr = 0.0;
    long dof = 0;  // rows - columns
};

/// Ordinary least squares with classical standard errors.
/// Throws CollinearityError naming the dependent columns (from `names` when given).
OlsResult ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const std::vector<std::string>& names = {});

}  // namespace bjts
