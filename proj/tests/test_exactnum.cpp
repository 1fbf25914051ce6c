#include <doctest.h>

#include <random>
#include <stdexcept>

#include "heatsphere/exactnum.hpp"

using namespace heatsphere;

TEST_CASE("rational normalization") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("factorial family") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK_THROWS(factorial(-1));
    CHECK(reciprocal_factorial(3) == Rational(1, 6));
    CHECK(reciprocal_factorial(-1) == Rational(0));
    CHECK(reciprocal_factorial(-4) == Rational(0));
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(30, 15) == 155117520);
    CHECK_THROWS(binomial(-1, 0));
    CHECK(pochhammer(Rational(5, 2), 0) == Rational(1));
    CHECK(pochhammer(Rational(3), 2) == Rational(12));
    CHECK(pochhammer(Rational(-2), 3) == Rational(0));
}

TEST_CASE("gamma at half integers") {
    CHECK(gamma_half(1) == ExactValue::sqrt_pi());
    CHECK(gamma_half(2) == ExactValue(1));
    CHECK(gamma_half(5) == ExactValue(Rational(3, 4), 1));
    CHECK_THROWS(gamma_half(0));
    // Gamma(z+1) = z Gamma(z)
    for (long m = 1; m <= 40; ++m) {
        CHECK(gamma_half(m + 2) == ExactValue(Rational(m, 2)) * gamma_half(m));
    }
}

TEST_CASE("pochhammer recurrence") {
    for (const Rational t : {Rational(1, 2), Rational(-7, 3), Rational(4)}) {
        for (long m = 0; m < 12; ++m) {
            CHECK(pochhammer(t, m + 1) == pochhammer(t, m) * (t + Rational(m)));
        }
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (long m = 3; m <= 41; m += 2) {
        CHECK(bernoulli(m).is_zero());
    }
    for (long m = 2; m <= 40; m += 2) {
        CHECK(bernoulli(m).sign() == (m % 4 == 2 ? 1 : -1));
    }
}

TEST_CASE("exact values") {
    const ExactValue a(Rational(1, 2), 1);
    const ExactValue b(Rational(3), 1);
    CHECK(a + b == ExactValue(Rational(7, 2), 1));
    CHECK(a * b == ExactValue(Rational(3, 2), 2));
    CHECK(b / a == ExactValue(6));
    CHECK_THROWS_AS(a + ExactValue(1), std::domain_error);
    CHECK((a - a) + ExactValue(5) == ExactValue(5));
    CHECK((a - a).pi_half() == 0);
    CHECK_THROWS_AS(a.as_rational(), std::domain_error);
    CHECK(ExactValue(Rational(2, 3)).as_rational() == Rational(2, 3));
    CHECK(ExactValue::sqrt_pi().to_double() == doctest::Approx(1.7724538509055159).epsilon(1e-16));
    CHECK(ExactValue(Rational(2), 2).str() == "2*pi");
    CHECK(ExactValue(Rational(1, 4), 1).str() == "1/4*sqrt(pi)");
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    std::uniform_int_distribution<int> pi(0, 4);
    auto draw = [&] { return ExactValue(Rational(num(rng), den(rng)), pi(rng)); };
    for (int i = 0; i < 200; ++i) {
        const ExactValue x = draw();
        const ExactValue y = draw();
        const ExactValue z = draw();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        if (x.pi_half() == y.pi_half() || x.is_zero() || y.is_zero()) {
            CHECK(x + y == y + x);
            const ExactValue zz(z.coeff());
            CHECK(zz * (x + y) == zz * x + zz * y);
        }
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == ExactValue(1));
        }
    }
}
