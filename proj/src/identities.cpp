#include "heatsphere/identities.hpp"

#include <stdexcept>

namespace heatsphere {

namespace {

std::string str(long v) { return std::to_string(v); }

Rational sign_of(long power) { return Rational(power % 2 == 0 ? 1 : -1); }

void require_n(long n) {
    if (n < 1) {
        throw std::invalid_argument("identity needs n >= 1, got " + str(n));
    }
}

}  // namespace

Rational s1_sum(long n, long omega, const Rational& x) {
    require_n(n);
    if (omega < 0) {
        throw std::invalid_argument("s1_sum needs omega >= 0");
    }
    Rational total;
    for (long j = 0; j <= omega; ++j) {
        Rational inner;
        for (long k = -j; k <= j; ++k) {
            inner += sign_of(k) * (x + Rational(k)).pow(2 * j + 2 * n) * reciprocal_factorial(j - k) *
                     reciprocal_factorial(j + k);
        }
        total += inner * reciprocal_factorial(omega - j) * reciprocal_factorial(j + n) / Rational(2 * j + 1);
    }
    return total;
}

Rational s1_sum_one_sided(long n, long omega) {
    require_n(n);
    if (omega < 0) {
        throw std::invalid_argument("s1_sum_one_sided needs omega >= 0");
    }
    Rational total;
    for (long j = 0; j <= omega; ++j) {
        Rational inner;
        for (long k = 0; k <= j; ++k) {
            inner += sign_of(k) * Rational(k).pow(2 * j + 2 * n) * reciprocal_factorial(j - k) *
                     reciprocal_factorial(j + k);
        }
        total += inner * reciprocal_factorial(omega - j) * reciprocal_factorial(j + n) / Rational(2 * j + 1);
    }
    return total;
}

ExactValue s3_sum(long n, long omega) {
    require_n(n);
    if (omega < 2 * n) {
        throw std::invalid_argument("s3_sum needs omega >= 2n");
    }
    Rational total;
    for (long j = 0; j <= omega; ++j) {
        Rational inner;
        for (long l = 0; l <= j + 1; ++l) {
            const Rational l2(l * l);
            inner += sign_of(l) * l2 * (l2 - Rational(1)).pow(j + n) * reciprocal_factorial(j + l + 1) *
                     reciprocal_factorial(j - l + 1);
        }
        total += inner * reciprocal_factorial(omega - j) * reciprocal_factorial(j + n) / Rational(2 * j + 3);
    }
    // Gamma(omega + 5/2)
    return ExactValue(total) * gamma_half(2 * omega + 5);
}

ExactValue s3_expected(long n) {
    require_n(n);
    return {sign_of(n + 1) * reciprocal_factorial(n) / Rational(8), 1};
}

BigInt alternating_power_sum(long j, long s) {
    if (j < 0 || s < 0) {
        throw std::invalid_argument("alternating_power_sum needs j, s >= 0");
    }
    BigInt total = 0;
    for (long p = 0; p <= 2 * j; ++p) {
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), BigInt(p - j).get_mpz_t(), static_cast<unsigned long>(s));
        BigInt term = binomial(2 * j, p) * power;
        if (p % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

std::string to_string(Identity identity) {
    switch (identity) {
        case Identity::s1: return "s1";
        case Identity::s1g: return "s1g";
        case Identity::s3: return "s3";
        case Identity::vychet: return "vychet";
    }
    return "?";
}

Identity parse_identity(const std::string& name) {
    for (Identity id : {Identity::s1, Identity::s1g, Identity::s3, Identity::vychet}) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw std::invalid_argument("unknown identity '" + name + "'");
}

VerificationReport verify_identity(Identity identity, const IdentityBox& box) {
    VerificationReport report;
    report.identity_name = to_string(identity);

    if (identity == Identity::vychet) {
        for (long j = box.j.lo; j <= box.j.hi; ++j) {
            for (long s = 0; s <= 2 * j; ++s) {
                const BigInt expected = s < 2 * j ? BigInt(0) : factorial(2 * j);
                report.check({{"j", str(j)}, {"s", str(s)}}, ExactValue(Rational(alternating_power_sum(j, s))),
                             ExactValue(Rational(expected)));
            }
        }
        return report;
    }

    for (long n = box.n.lo; n <= box.n.hi; ++n) {
        for (long offset = box.omega_offset.lo; offset <= box.omega_offset.hi; ++offset) {
            const long omega = 2 * n + offset;
            if (omega < 0) {
                continue;
            }
            ParameterPoint point{{"n", str(n)}, {"omega", str(omega)}};
            switch (identity) {
                case Identity::s1: {
                    const Rational one_sided = s1_sum_one_sided(n, omega);
                    const Rational symmetric = s1_sum(n, omega, Rational(0));
                    if (symmetric != Rational(2) * one_sided) {
                        report.add_failure({{"n", str(n)}, {"omega", str(omega)}, {"check", "symmetrization"}},
                                           ExactValue(symmetric), ExactValue(Rational(2) * one_sided));
                    }
                    report.check(std::move(point), ExactValue(one_sided), ExactValue());
                    break;
                }
                case Identity::s1g:
                    for (const Rational& x : box.x) {
                        ParameterPoint px = point;
                        px.emplace_back("x", x.str());
                        report.check(std::move(px), ExactValue(s1_sum(n, omega, x)), ExactValue());
                    }
                    break;
                case Identity::s3:
                    if (omega < 2 * n) {
                        throw std::invalid_argument("s3 box must satisfy omega >= 2n");
                    }
                    report.check(std::move(point), s3_sum(n, omega), s3_expected(n));
                    break;
                case Identity::vychet:
                    break;
            }
        }
    }
    return report;
}

}  // namespace heatsphere
