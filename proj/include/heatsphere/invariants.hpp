#pragma once

// Heat invariants a_{n,d} of the round sphere S^d: coefficient of t^(n - d/2)
// in the small-t expansion of sum_k mu_{k,d} exp(-t lambda_{k,d}).
//
// Three independent routes are provided: the general double sum valid for
// any omega >= 2n, a single sum over K-coefficients for odd d = 2 alpha + 1,
// and a K-coefficient / Bernoulli formula for even d = 2 nu. Closed forms for
// d in {1, 2, 3, 5, 7} serve as a fourth check.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heatsphere/exactnum.hpp"
#include "heatsphere/report.hpp"

namespace heatsphere {

/// prod_{beta=0}^{alpha-1} (z^2 - beta^2) = sum_{s=1}^{alpha} entries[s] z^(2s)
struct KTableOdd {
    long alpha = 1;
    std::map<long, Rational> entries;
};

/// prod_{beta=1/2, 3/2, ..., nu-3/2} (z^2 - beta^2) = sum_{t=0}^{nu-1} entries[t] z^(2nu-2-2t)
struct KTableEven {
    long nu = 1;
    std::map<long, Rational> entries;
};

enum class Route { general, odd, even, closed, weyl };

/// Formula selection for the public entry point; `automatic` dispatches on d.
enum class Formula { automatic, general, odd, even, closed };

std::string to_string(Route route);
Route parse_route(const std::string& name);
std::string to_string(Formula formula);
Formula parse_formula(const std::string& name);

struct HeatInvariantResult {
    long n = 0;
    long d = 1;
    std::optional<long> omega_used;
    Route route = Route::weyl;
    ExactValue value;
};

KTableOdd k_table_odd(long alpha);
KTableEven k_table_even(long nu);

/// The general double sum for a_{n,d}. Requires n >= 1, d >= 1 and
/// omega >= 2n; throws std::invalid_argument otherwise (the formula is false
/// below 2n).
ExactValue heat_invariant_general(long n, long d, long omega);

/// The same double sum without the omega >= 2n precondition, for probing
/// where the formula stops holding. Requires n >= 1, d >= 1, omega >= 0.
ExactValue general_formula_sum(long n, long d, long omega);

/// a_{n, 2 alpha + 1} for n >= 1, alpha >= 1.
ExactValue heat_invariant_odd(long n, long alpha);

/// a_{n, 2 nu} for n >= 1, nu >= 1.
ExactValue heat_invariant_even(long n, long nu);

/// Closed forms: d = 1 (zero), d = 2 (Bernoulli sum), d = 3, 5, 7.
/// n = 0 returns the Weyl term. Throws for any other d.
ExactValue heat_invariant_closed(long n, long d);

/// Default dispatcher: n = 0 -> Weyl term; d = 1 -> closed; odd d -> odd;
/// even d -> even; an explicit omega forces the general route.
HeatInvariantResult heat_invariant(long n, long d, std::optional<long> omega = std::nullopt);

/// Route-selecting variant used by the CLI. Throws std::invalid_argument when
/// the formula does not apply to (n, d) or omega < 2n.
HeatInvariantResult heat_invariant(long n, long d, Formula formula, std::optional<long> omega);

/// General route (omega = 2n) against the odd/even route for every cell.
VerificationReport verify_crosscheck(IntRange ns, IntRange ds);

/// General route identical for every omega in [2n, 3n + 4].
VerificationReport verify_omega_stability(IntRange ns, IntRange ds);

/// The general sum at omega = 2n - 1 must differ from the omega = 2n value.
/// A failure here means the value did NOT change.
VerificationReport verify_sharpness(const std::vector<std::pair<long, long>>& cells);

}  // namespace heatsphere
