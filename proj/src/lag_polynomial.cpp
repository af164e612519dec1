#include "bjts/lag_polynomial.hpp"

#include "bjts/errors.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

namespace bjts {

LagPolynomial LagPolynomial::from_terms(std::span<const int> lags, std::span<const double> values, double sign) {
    if (lags.size() != values.size()) {
        throw SpecificationError(
            fmt::format("{} lags but {} coefficients for a lag polynomial", lags.size(), values.size()));
    }
    std::vector<double> c{1.0};
    for (std::size_t i = 0; i < lags.size(); ++i) {
        if (lags[i] < 1) {
            throw SpecificationError(fmt::format("lag must be positive, got {}", lags[i]));
        }
        const auto p = static_cast<std::size_t>(lags[i]);
        if (c.size() <= p) {
            c.resize(p + 1, 0.0);
        }
        c[p] += sign * values[i];
    }
    LagPolynomial poly(std::move(c));
    poly.trim();
    return poly;
}

LagPolynomial LagPolynomial::from_dense(std::vector<double> coefficients) {
    if (coefficients.empty() || coefficients[0] != 1.0) {
        throw SpecificationError("lag polynomial must have unit constant term");
    }
    LagPolynomial poly(std::move(coefficients));
    poly.trim();
    return poly;
}

void LagPolynomial::trim() {
    while (coefficients_.size() > 1 && coefficients_.back() == 0.0) {
        coefficients_.pop_back();
    }
}

std::vector<std::pair<int, double>> LagPolynomial::nonzero_terms() const {
    std::vector<std::pair<int, double>> terms;
    for (int p = 1; p <= degree(); ++p) {
        if (coefficients_[static_cast<std::size_t>(p)] != 0.0) {
            terms.emplace_back(p, coefficients_[static_cast<std::size_t>(p)]);
        }
    }
    return terms;
}

double LagPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double LagPolynomial::min_root_modulus() const { return bjts::min_root_modulus(coefficients_); }

std::string LagPolynomial::to_string(int decimals) const {
    std::string out = "1";
    for (auto [p, c] : nonzero_terms()) {
        out += fmt::format(" {} {:.{}f}B^{}", c < 0 ? '-' : '+', std::abs(c), decimals, p);
    }
    return out;
}

LagPolynomial operator*(const LagPolynomial& a, const LagPolynomial& b) {
    std::vector<double> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i] == 0.0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            c[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    LagPolynomial product(std::move(c));
    product.trim();
    return product;
}

double min_root_modulus(std::span<const double> c) {
    std::size_t n = c.size();
    while (n > 1 && c[n - 1] == 0.0) {
        --n;
    }
    const int degree = static_cast<int>(n) - 1;
    if (degree < 1) {
        return std::numeric_limits<double>::infinity();
    }
    // Zero roots: unit constant term means there are none.
    if (degree == 1) {
        return std::abs(c[0] / c[1]);
    }
    // Companion matrix of the monic polynomial x^n + (c_{n-1}/c_n) x^{n-1} + ... + c_0/c_n.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
    for (int i = 0; i < degree; ++i) {
        companion(0, i) = -c[static_cast<std::size_t>(degree - 1 - i)] / c[static_cast<std::size_t>(degree)];
    }
    for (int i = 1; i < degree; ++i) {
        companion(i, i - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw NumericalDegeneracyError("companion-matrix eigenvalue iteration did not converge");
    }
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        best = std::min(best, std::abs(solver.eigenvalues()(i)));
    }
    return best;
}

}  // namespace bjts
