#include "heatsphere/spectrum.hpp"

#include <stdexcept>
#include <string>

namespace heatsphere {

namespace {

void check_args(long k, long d) {
    if (d < 1) {
        throw std::invalid_argument("sphere dimension must be >= 1, got " + std::to_string(d));
    }
    if (k < 0) {
        throw std::invalid_argument("eigenvalue index must be >= 0, got " + std::to_string(k));
    }
}

}  // namespace

BigInt eigenvalue(long k, long d) {
    check_args(k, d);
    return BigInt(k) * BigInt(k + d - 1);
}

BigInt multiplicity(long k, long d) {
    check_args(k, d);
    if (k == 0) {
        return 1;
    }
    // (k+d-2)!/k! is an integer only for d >= 2; the full quotient always is.
    const BigInt num = BigInt(2 * k + d - 1) * factorial(k + d - 2);
    const BigInt den = factorial(k) * factorial(d - 1);
    return num / den;
}

SpectralDatum spectral_datum(long k, long d) { return {k, d, eigenvalue(k, d), multiplicity(k, d)}; }

ExactValue sphere_volume(long d) {
    check_args(0, d);
    return ExactValue(Rational(2), static_cast<int>(d + 1)) / gamma_half(d + 1);
}

ExactValue weyl_leading_term(long d) {
    check_args(0, d);
    // (4 pi)^(d/2) = 2^d pi^(d/2)
    const ExactValue four_pi_power(Rational(BigInt(1) << static_cast<mp_bitcnt_t>(d)), static_cast<int>(d));
    return sphere_volume(d) / four_pi_power;
}

}  // namespace heatsphere
