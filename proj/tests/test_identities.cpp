#include <doctest.h>

#include "heatsphere/identities.hpp"

using namespace heatsphere;

TEST_CASE("S1 sums") {
    CHECK(s1_sum(1, 2, Rational(0)).is_zero());
    CHECK(s1_sum(2, 4, Rational(1, 2)).is_zero());
    CHECK(s1_sum(1, 1, Rational(0)) == Rational(-1, 6));
    CHECK(s1_sum_one_sided(1, 1) == Rational(-1, 12));
    for (long n = 1; n <= 4; ++n) {
        for (long omega = 0; omega <= 2 * n + 3; ++omega) {
            CHECK(s1_sum(n, omega, Rational(0)) == Rational(2) * s1_sum_one_sided(n, omega));
        }
    }
}

TEST_CASE("S3 sums") {
    CHECK(s3_sum(1, 2) == ExactValue(Rational(1, 8), 1));
    CHECK(s3_sum(2, 4) == ExactValue(Rational(-1, 16), 1));
    CHECK(s3_sum(1, 5) == ExactValue(Rational(1, 8), 1));
    CHECK(s3_expected(3) == ExactValue(Rational(1, 48), 1));
    CHECK(s3_expected(4) == ExactValue(Rational(-1, 192), 1));
    CHECK_THROWS(s3_sum(2, 3));
}

TEST_CASE("alternating power sums") {
    CHECK(alternating_power_sum(2, 3) == 0);
    CHECK(alternating_power_sum(1, 2) == 2);
    CHECK(alternating_power_sum(0, 0) == 1);
    CHECK(alternating_power_sum(5, 10) == factorial(10));
}

TEST_CASE("verification reports") {
    for (const auto id : {Identity::s1, Identity::s1g, Identity::s3, Identity::vychet}) {
        CHECK(verify_identity(id, IdentityBox{}).passed());
    }
    IdentityBox bad;
    bad.n = {1, 1};
    bad.omega_offset = {-1, -1};
    const auto report = verify_identity(Identity::s1, bad);
    CHECK_FALSE(report.passed());
    CHECK(report.failures.size() == 1);
    CHECK(parse_identity("vychet") == Identity::vychet);
    CHECK_THROWS(parse_identity("s2"));
}
