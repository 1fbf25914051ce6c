#pragma once

// Laplace spectrum of the round unit sphere S^d.

#include "heatsphere/exactnum.hpp"

namespace heatsphere {

struct SpectralDatum {
    long k = 0;
    long d = 1;
    BigInt lambda;
    BigInt mu;
};

/// k(k + d - 1). Throws std::invalid_argument for d < 1 or k < 0.
BigInt eigenvalue(long k, long d);

/// Dimension of the k-th eigenspace: (2k+d-1)(k+d-2)!/(k!(d-1)!), and 1 for k = 0.
BigInt multiplicity(long k, long d);

SpectralDatum spectral_datum(long k, long d);

/// 2 pi^((d+1)/2) / Gamma((d+1)/2).
ExactValue sphere_volume(long d);

/// vol(S^d) / (4 pi)^(d/2), the coefficient a_{0,d}.
ExactValue weyl_leading_term(long d);

}  // namespace heatsphere
