#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "heatsphere/exactnum.hpp"

namespace heatsphere {

/// Dense polynomial in one variable with rational coefficients; coefficient i
/// multiplies t^i. The highest stored coefficient is never zero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);
    RationalPolynomial(std::initializer_list<Rational> coefficients);

    static RationalPolynomial monomial(long degree, Rational coeff = Rational(1));
    /// (a + b t)^power
    static RationalPolynomial binomial_power(const Rational& a, const Rational& b, long power);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coefficient(long i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& t) const;

    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const Rational& scalar);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
    friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    std::string str(char var = 't') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace heatsphere
