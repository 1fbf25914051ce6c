#include <doctest.h>

#include "heatsphere/spectrum.hpp"

using namespace heatsphere;

TEST_CASE("eigenvalues") {
    for (long d = 1; d <= 9; ++d) {
        CHECK(eigenvalue(0, d) == 0);
    }
    CHECK(eigenvalue(2, 2) == 6);
    CHECK(eigenvalue(1, 3) == 3);
    CHECK_THROWS(eigenvalue(-1, 2));
    CHECK_THROWS(eigenvalue(1, 0));
}

TEST_CASE("multiplicities") {
    CHECK(multiplicity(0, 7) == 1);
    CHECK(multiplicity(1, 3) == 4);
    CHECK(multiplicity(2, 2) == 5);
    for (long k = 1; k < 30; ++k) {
        CHECK(multiplicity(k, 1) == 2);
        CHECK(multiplicity(k, 2) == 2 * k + 1);
        CHECK(multiplicity(k, 3) == (k + 1) * (k + 1));
        // harmonic polynomials: dim H_k = C(k+d, d) - C(k+d-2, d)
        for (long d = 2; d <= 8; ++d) {
            CHECK(multiplicity(k, d) == binomial(k + d, d) - binomial(k + d - 2, d));
        }
    }
    const SpectralDatum s = spectral_datum(3, 4);
    CHECK(s.lambda == 18);
    CHECK(s.mu == 30);
}

TEST_CASE("volumes and Weyl term") {
    CHECK(sphere_volume(1) == ExactValue(Rational(2), 2));
    CHECK(sphere_volume(2) == ExactValue(Rational(4), 2));
    CHECK(sphere_volume(3) == ExactValue(Rational(2), 4));
    CHECK(weyl_leading_term(1) == ExactValue::sqrt_pi());
    CHECK(weyl_leading_term(2) == ExactValue(1));
    CHECK(weyl_leading_term(5) == ExactValue(Rational(1, 32), 1));
    CHECK(weyl_leading_term(7) == ExactValue(Rational(1, 384), 1));
    // vol(S^{d+1}) = 2 pi vol(S^{d-1}) / d
    for (long d = 2; d <= 12; ++d) {
        CHECK(sphere_volume(d + 1) == ExactValue(Rational(2, d), 2) * sphere_volume(d - 1));
    }
    CHECK_THROWS(sphere_volume(0));
}
