#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bjts {

/// Polynomial in the backshift operator B: c_0 + c_1 B + c_2 B^2 + ...  with c_0 = 1.
class LagPolynomial {
public:
    LagPolynomial() : coefficients_{1.0} {}

    /// 1 + sum sign * value_i * B^{lag_i}. Use sign = -1 for autoregressive factors.
    static LagPolynomial from_terms(std::span<const int> lags, std::span<const double> values, double sign);
    /// Takes a dense coefficient vector; the unit term must be 1.
    static LagPolynomial from_dense(std::vector<double> coefficients);

    [[nodiscard]] int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    [[nodiscard]] double operator[](int power) const {
        return power >= 0 && power <= degree() ? coefficients_[static_cast<std::size_t>(power)] : 0.0;
    }
    [[nodiscard]] std::span<const double> coefficients() const { return coefficients_; }

    /// Non-zero terms with power >= 1, as (power, coefficient).
    [[nodiscard]] std::vector<std::pair<int, double>> nonzero_terms() const;

    [[nodiscard]] double evaluate(double x) const;

    /// Smallest modulus among the roots of c_0 + c_1 x + ... (infinity for a constant polynomial).
    [[nodiscard]] double min_root_modulus() const;

    /// Human-readable form, e.g. "1 + 0.255B^14 - 0.860B^24".
    [[nodiscard]] std::string to_string(int decimals = 3) const;

    friend LagPolynomial operator*(const LagPolynomial& a, const LagPolynomial& b);
    friend bool operator==(const LagPolynomial&, const LagPolynomial&) = default;

private:
    explicit LagPolynomial(std::vector<double> c) : coefficients_(std::move(c)) {}
    void trim();

    std::vector<double> coefficients_;
};

/// Smallest root modulus of 1 + c_1 x + ... + c_n x^n, computed from the eigenvalues of the companion
/// matrix (Hessenberg QR iteration).
double min_root_modulus(std::span<const double> coefficients);

}  // namespace bjts
