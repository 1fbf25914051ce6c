#pragma once

// Legendre (Gegenbauer) polynomials on [-1, 1] with weight (1 - t^2)^((d-2)/2),
// normalized by L_{k,d}(1) = 1, and the expansion of (1 - t)^j in that basis.

#include <vector>

#include "heatsphere/exactnum.hpp"
#include "heatsphere/polynomial.hpp"
#include "heatsphere/report.hpp"

namespace heatsphere {

/// Integral over [-1, 1] of t^m (1 - t^2)^((d-2)/2). Zero for odd m.
ExactValue weighted_moment(long m, long d);

/// Weighted inner product of two polynomials for dimension d.
ExactValue weighted_inner_product(const RationalPolynomial& p, const RationalPolynomial& q, long d);

/// L_{0,d}, ..., L_{k_max,d} by exact Gram-Schmidt on monomials, each scaled
/// to value 1 at t = 1.
std::vector<RationalPolynomial> legendre_basis(long k_max, long d);

RationalPolynomial gegenbauer_poly(long k, long d);

/// Coefficient of L_{k,d} in (1 - t)^j, from the ratio of weighted integrals.
/// Zero when k > j.
Rational expansion_coeff(long j, long k, long d);

/// The same coefficient from its closed form
/// (-1)^k 2^j Gamma(j + d/2) j! / ((j-k)! (j+k+d-1)!) * (4 pi)^(d/2) mu_{k,d} / vol(S^d).
Rational expansion_coeff_closed(long j, long k, long d);

/// Orthogonality (k < k' <= k_max), the norm identity, reconstruction of
/// (1 - t)^j for j <= j_max, and closed form versus brute force, for every
/// d in `dims`.
VerificationReport verify_legendre(long j_max, IntRange dims, long k_max = 6);

}  // namespace heatsphere
