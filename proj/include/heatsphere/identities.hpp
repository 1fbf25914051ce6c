#pragma once

// Combinatorial identities that follow from the heat invariants of S^1 and S^3,
// and the alternating power sums used to prove them. Each is evaluated
// exactly; verify_identity sweeps a parameter box and records witnesses.

#include <string>
#include <vector>

#include "heatsphere/exactnum.hpp"
#include "heatsphere/report.hpp"

namespace heatsphere {

/// Symmetrized S^1 sum
///   sum_{j=0}^{omega} 1/((omega-j)! (j+n)! (2j+1)) sum_{k=-j}^{j} (-1)^k (x+k)^(2j+2n) / ((j-k)! (j+k)!)
/// Vanishes for omega >= 2n. No precondition on omega beyond omega >= 0.
Rational s1_sum(long n, long omega, const Rational& x);

/// The S^1 sum exactly as first displayed: x = 0 and the inner index k running
/// from 0. For n >= 1 the k = 0 term vanishes, so s1_sum(n, omega, 0) is twice this.
Rational s1_sum_one_sided(long n, long omega);

/// Left side of the S^3 identity (inner index l from 0 to j+1).
/// Requires n >= 1 and omega >= 2n.
ExactValue s3_sum(long n, long omega);

/// (-1)^(n+1) sqrt(pi) / (8 n!)
ExactValue s3_expected(long n);

/// sum_{p=0}^{2j} (-1)^p C(2j, p) (p - j)^s
BigInt alternating_power_sum(long j, long s);

enum class Identity { s1, s1g, s3, vychet };

std::string to_string(Identity identity);
/// Throws std::invalid_argument for unknown names.
Identity parse_identity(const std::string& name);

/// Parameter box for verify_identity. omega runs over 2n + omega_offset for
/// each offset; negative offsets probe below the hypothesis. For vychet,
/// `j` gives the range of j and s runs over [0, 2j].
struct IdentityBox {
    IntRange n{1, 4};
    IntRange omega_offset{0, 3};
    std::vector<Rational> x{Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)};
    IntRange j{0, 10};
};

/// Points are visited in lexicographic (n, omega, x) or (j, s) order.
VerificationReport verify_identity(Identity identity, const IdentityBox& box);

}  // namespace heatsphere
