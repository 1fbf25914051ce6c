#pragma once

// Exact arithmetic foundation: big integers, reduced rationals, values of the
// form q * pi^(k/2), and the factorial family.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace heatsphere {

using BigInt = mpz_class;

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Zero is uniquely 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p" or "p/q" in base 10. Throws std::invalid_argument.
    static Rational parse(const std::string& text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational inverse() const;
    Rational abs() const;
    Rational pow(long exponent) const;

    double to_double() const;
    std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_{0};
};

/// coeff * pi^(pi_half / 2). Every heat invariant of a sphere is a single
/// monomial of this kind, so sums of unlike pi powers are rejected rather
/// than represented.
class ExactValue {
public:
    ExactValue() = default;
    ExactValue(Rational coeff, int pi_half = 0);  // NOLINT(google-explicit-constructor)

    static ExactValue sqrt_pi() { return {Rational(1), 1}; }
    static ExactValue pi_power(int pi_half) { return {Rational(1), pi_half}; }

    const Rational& coeff() const { return coeff_; }
    int pi_half() const { return pi_half_; }
    bool is_zero() const { return coeff_.is_zero(); }

    /// Coefficient when the value is rational; throws std::domain_error otherwise.
    Rational as_rational() const;

    ExactValue inverse() const;
    double to_double() const;
    std::string str() const;

    ExactValue& operator+=(const ExactValue& rhs);
    ExactValue& operator-=(const ExactValue& rhs);
    ExactValue& operator*=(const ExactValue& rhs);
    ExactValue& operator/=(const ExactValue& rhs);

    friend ExactValue operator+(ExactValue lhs, const ExactValue& rhs) { return lhs += rhs; }
    friend ExactValue operator-(ExactValue lhs, const ExactValue& rhs) { return lhs -= rhs; }
    friend ExactValue operator*(ExactValue lhs, const ExactValue& rhs) { return lhs *= rhs; }
    friend ExactValue operator/(ExactValue lhs, const ExactValue& rhs) { return lhs /= rhs; }
    ExactValue operator-() const { return {-coeff_, pi_half_}; }

    friend bool operator==(const ExactValue& a, const ExactValue& b) {
        return a.coeff_ == b.coeff_ && a.pi_half_ == b.pi_half_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactValue& v) { return os << v.str(); }

private:
    void normalize();

    Rational coeff_;
    int pi_half_ = 0;
};

BigInt factorial(long m);

/// 1/m!, with the reciprocal-gamma convention 1/m! = 0 for m < 0.
Rational reciprocal_factorial(long m);

/// C(a, b) for a >= 0; zero outside 0 <= b <= a. Throws for a < 0.
BigInt binomial(long a, long b);

/// Rising factorial t(t+1)...(t+m-1); (t)_0 = 1.
Rational pochhammer(const Rational& t, long m);

/// Gamma(m/2) for m >= 1.
ExactValue gamma_half(long m);

/// Bernoulli number B_m with B_1 = -1/2, i.e. z/(e^z - 1) = sum B_m z^m / m!.
/// Memoized; safe to call from several threads.
Rational bernoulli(long m);

}  // namespace heatsphere
