#pragma once

#include "dpchroma/bigint.hpp"

#include <string>
#include <vector>

namespace dpchroma {

/// Integer-coefficient polynomial in one variable, exact arithmetic.
/// Coefficient i multiplies m^i; the representation is normalized (no
/// trailing zero coefficients, the zero polynomial has no coefficients).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending_coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(BigInt c);
    /// c * m^power
    static IntPolynomial monomial(BigInt c, int power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of m^i; zero beyond the degree.
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    BigInt evaluate(const BigInt& at) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// {"coeffs": ["c0", "c1", ...]} with decimal-string coefficients.
std::string polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const std::string& text);

} // namespace dpchroma
