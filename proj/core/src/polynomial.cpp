#include "dpchroma/polynomial.hpp"

#include "dpchroma/errors.hpp"

#include "json.hpp"

#include <utility>

namespace dpchroma {

BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt parse_decimal(const std::string& text) {
    try {
        return BigInt(text);
    } catch (const std::exception&) {
        throw ParseError("bad integer literal \"" + text + "\"");
    }
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPolynomial IntPolynomial::monomial(BigInt c, int power) {
    if (power < 0) throw ValidationError("monomial power must be nonnegative");
    IntPolynomial p;
    p.coeffs_.assign(static_cast<std::size_t>(power) + 1, BigInt(0));
    p.coeffs_.back() = std::move(c);
    p.trim();
    return p;
}

const BigInt& IntPolynomial::coeff(int i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::evaluate(const BigInt& at) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPolynomial::zero();
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(out));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string polynomial_to_json(const IntPolynomial& p) {
    nlohmann::json j;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& c : p.coeffs()) j["coeffs"].push_back(to_decimal(c));
    return j.dump();
}

IntPolynomial polynomial_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad polynomial JSON: ") + e.what());
    }
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("polynomial JSON needs a coeffs array");
    std::vector<BigInt> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw ParseError("polynomial coefficients must be decimal strings");
        coeffs.push_back(parse_decimal(c.get<std::string>()));
    }
    return IntPolynomial(std::move(coeffs));
}

} // namespace dpchroma
