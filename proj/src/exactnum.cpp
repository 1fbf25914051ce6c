#include "heatsphere/exactnum.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <mpfr.h>

namespace heatsphere {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [&text](const std::string& s) {
        BigInt v;
        if (s.empty() || v.set_str(s, 10) != 0) {
            throw std::invalid_argument("not a rational number: '" + text + "'");
        }
        return v;
    };
    if (slash == std::string::npos) {
        return Rational(parse_int(text));
    }
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    Rational r;
    r.q_ = 1 / q_;
    r.q_.canonicalize();
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r;
    r.q_ = mpq_class(num, den);  // already coprime
    return r;
}

double Rational::to_double() const { return ExactValue(*this).to_double(); }

std::string Rational::str() const { return q_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

// ---------------------------------------------------------------------------

ExactValue::ExactValue(Rational coeff, int pi_half) : coeff_(std::move(coeff)), pi_half_(pi_half) {
    normalize();
}

void ExactValue::normalize() {
    if (coeff_.is_zero()) {
        pi_half_ = 0;
    }
}

Rational ExactValue::as_rational() const {
    if (pi_half_ != 0) {
        throw std::domain_error("ExactValue " + str() + " is not rational");
    }
    return coeff_;
}

ExactValue ExactValue::inverse() const { return {coeff_.inverse(), -pi_half_}; }

double ExactValue::to_double() const {
    if (is_zero()) {
        return 0.0;
    }
    mpfr_t x, pi;
    mpfr_init2(x, 256);
    mpfr_init2(pi, 256);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_sqrt(pi, pi, MPFR_RNDN);
    mpfr_pow_si(x, pi, pi_half_, MPFR_RNDN);
    mpfr_mul_q(x, x, coeff_.raw().get_mpq_t(), MPFR_RNDN);
    const double out = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    mpfr_clear(pi);
    return out;
}

std::string ExactValue::str() const {
    if (pi_half_ == 0) {
        return coeff_.str();
    }
    std::ostringstream os;
    os << coeff_.str() << '*';
    if (pi_half_ == 1) {
        os << "sqrt(pi)";
    } else if (pi_half_ == 2) {
        os << "pi";
    } else if (pi_half_ % 2 == 0) {
        os << "pi^" << pi_half_ / 2;
    } else {
        os << "pi^(" << pi_half_ << "/2)";
    }
    return os.str();
}

ExactValue& ExactValue::operator+=(const ExactValue& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    if (pi_half_ != rhs.pi_half_) {
        throw std::domain_error("ExactValue: cannot add " + str() + " and " + rhs.str());
    }
    coeff_ += rhs.coeff_;
    normalize();
    return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& rhs) { return *this += -rhs; }

ExactValue& ExactValue::operator*=(const ExactValue& rhs) {
    coeff_ *= rhs.coeff_;
    pi_half_ += rhs.pi_half_;
    normalize();
    return *this;
}

ExactValue& ExactValue::operator/=(const ExactValue& rhs) { return *this *= rhs.inverse(); }

// ---------------------------------------------------------------------------

BigInt factorial(long m) {
    if (m < 0) {
        throw std::domain_error("factorial of negative integer");
    }
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

Rational reciprocal_factorial(long m) {
    if (m < 0) {
        return Rational(0);
    }
    return Rational(BigInt(1), factorial(m));
}

BigInt binomial(long a, long b) {
    if (a < 0) {
        throw std::domain_error("binomial: negative upper argument");
    }
    if (b < 0 || b > a) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

Rational pochhammer(const Rational& t, long m) {
    if (m < 0) {
        throw std::domain_error("pochhammer: negative length");
    }
    Rational r(1);
    for (long i = 0; i < m && !r.is_zero(); ++i) {
        r *= t + Rational(i);
    }
    return r;
}

ExactValue gamma_half(long m) {
    if (m <= 0) {
        throw std::domain_error("gamma_half: argument must be positive");
    }
    if (m % 2 == 0) {
        return ExactValue(Rational(factorial(m / 2 - 1)));
    }
    // Gamma(m/2) = (1/2)(3/2)...((m-2)/2) sqrt(pi)
    Rational c(1);
    for (long k = 1; k < m; k += 2) {
        c *= Rational(k, 2);
    }
    return {c, 1};
}

namespace {

std::shared_mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

}  // namespace

Rational bernoulli(long m) {
    if (m < 0) {
        throw std::domain_error("bernoulli: negative index");
    }
    const auto index = static_cast<std::size_t>(m);
    {
        std::shared_lock lock(bernoulli_mutex);
        if (index < bernoulli_table.size()) {
            return bernoulli_table[index];
        }
    }
    std::unique_lock lock(bernoulli_mutex);
    // sum_{k=0}^{j} C(j+1, k) B_k = 0 for j >= 1
    for (std::size_t j = bernoulli_table.size(); j <= index; ++j) {
        Rational acc;
        for (std::size_t k = 0; k < j; ++k) {
            if (!bernoulli_table[k].is_zero()) {
                acc += Rational(binomial(static_cast<long>(j + 1), static_cast<long>(k))) * bernoulli_table[k];
            }
        }
        bernoulli_table.push_back(-acc / Rational(static_cast<long>(j + 1)));
    }
    return bernoulli_table[index];
}

}  // namespace heatsphere
