#include "heatsphere/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heatsphere {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
    trim();
}

RationalPolynomial RationalPolynomial::monomial(long degree, Rational coeff) {
    if (degree < 0) {
        throw std::invalid_argument("monomial degree must be >= 0");
    }
    std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
    c.back() = std::move(coeff);
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::binomial_power(const Rational& a, const Rational& b, long power) {
    if (power < 0) {
        throw std::invalid_argument("binomial_power: negative exponent");
    }
    std::vector<Rational> c(static_cast<std::size_t>(power + 1));
    for (long i = 0; i <= power; ++i) {
        c[static_cast<std::size_t>(i)] = Rational(heatsphere::binomial(power, i)) * a.pow(power - i) * b.pow(i);
    }
    return RationalPolynomial(std::move(c));
}

Rational RationalPolynomial::coefficient(long i) const {
    if (i < 0 || i > degree()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational RationalPolynomial::evaluate(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RationalPolynomial(std::move(c));
}

std::string RationalPolynomial::str(char var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << '-';
        }
        const Rational mag = c.abs();
        const bool unit = mag == Rational(1);
        if (!unit || i == 0) {
            os << mag;
        }
        if (i > 0) {
            os << (unit ? "" : "*") << var;
            if (i > 1) {
                os << '^' << i;
            }
        }
        first = false;
    }
    return os.str();
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

}  // namespace heatsphere
