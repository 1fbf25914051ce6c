#include "heatsphere/invariants.hpp"

#include <stdexcept>
#include <vector>

#include "heatsphere/polynomial.hpp"
#include "heatsphere/spectrum.hpp"

namespace heatsphere {

namespace {

std::string str(long v) { return std::to_string(v); }

Rational sign_of(long power) { return Rational(power % 2 == 0 ? 1 : -1); }

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

}  // namespace

std::string to_string(Route route) {
    switch (route) {
        case Route::general: return "general";
        case Route::odd: return "odd";
        case Route::even: return "even";
        case Route::closed: return "closed";
        case Route::weyl: return "weyl";
    }
    return "?";
}

Route parse_route(const std::string& name) {
    for (Route r : {Route::general, Route::odd, Route::even, Route::closed, Route::weyl}) {
        if (to_string(r) == name) {
            return r;
        }
    }
    throw std::invalid_argument("unknown route '" + name + "'");
}

std::string to_string(Formula formula) {
    switch (formula) {
        case Formula::automatic: return "auto";
        case Formula::general: return "general";
        case Formula::odd: return "odd";
        case Formula::even: return "even";
        case Formula::closed: return "closed";
    }
    return "?";
}

Formula parse_formula(const std::string& name) {
    for (Formula f : {Formula::automatic, Formula::general, Formula::odd, Formula::even, Formula::closed}) {
        if (to_string(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown formula '" + name + "'");
}

KTableOdd k_table_odd(long alpha) {
    require(alpha >= 1, "k_table_odd: alpha must be >= 1");
    // Polynomial in u = z^2.
    RationalPolynomial prod{Rational(1)};
    for (long beta = 0; beta < alpha; ++beta) {
        prod = prod * RationalPolynomial{Rational(-beta * beta), Rational(1)};
    }
    KTableOdd table{alpha, {}};
    for (long s = 1; s <= alpha; ++s) {
        table.entries[s] = prod.coefficient(s);
    }
    return table;
}

KTableEven k_table_even(long nu) {
    require(nu >= 1, "k_table_even: nu must be >= 1");
    RationalPolynomial prod{Rational(1)};
    for (long i = 0; i + 1 < nu; ++i) {
        const Rational beta(2 * i + 1, 2);
        prod = prod * RationalPolynomial{-beta * beta, Rational(1)};
    }
    KTableEven table{nu, {}};
    for (long t = 0; t < nu; ++t) {
        table.entries[t] = prod.coefficient(nu - 1 - t);
    }
    return table;
}

ExactValue general_formula_sum(long n, long d, long omega) {
    require(n >= 1, "general formula needs n >= 1");
    require(d >= 1, "general formula needs d >= 1");
    require(omega >= 0, "general formula needs omega >= 0");

    std::vector<BigInt> mu(static_cast<std::size_t>(omega + 1));
    std::vector<BigInt> lambda(mu.size());
    for (long k = 1; k <= omega; ++k) {
        mu[static_cast<std::size_t>(k)] = multiplicity(k, d);
        lambda[static_cast<std::size_t>(k)] = eigenvalue(k, d);
    }

    Rational total;
    for (long j = 1; j <= omega; ++j) {
        BigInt inner = 0;
        for (long k = 1; k <= j; ++k) {
            BigInt power;
            mpz_pow_ui(power.get_mpz_t(), lambda[static_cast<std::size_t>(k)].get_mpz_t(),
                       static_cast<unsigned long>(j + n));
            BigInt term = binomial(2 * j + d - 1, j - k) * mu[static_cast<std::size_t>(k)] * power;
            if (k % 2 == 0) {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += Rational(inner, factorial(omega - j) * factorial(j + n) * factorial(2 * j + d));
    }
    return ExactValue(Rational(2) * sign_of(n) * total) * gamma_half(2 * omega + d + 2);
}

ExactValue heat_invariant_general(long n, long d, long omega) {
    require(n >= 1 && d >= 1, "general formula needs n >= 1 and d >= 1");
    require(omega >= 2 * n, "general formula needs omega >= 2n (got omega=" + str(omega) + ", n=" + str(n) + ")");
    return general_formula_sum(n, d, omega);
}

ExactValue heat_invariant_odd(long n, long alpha) {
    require(n >= 1, "odd formula needs n >= 1");
    require(alpha >= 1, "odd formula needs alpha >= 1");
    const KTableOdd table = k_table_odd(alpha);
    ExactValue total;
    for (const auto& [s, k_coeff] : table.entries) {
        const Rational weight = Rational(alpha).pow(2 * n - 2 * alpha + 2 * s) * k_coeff *
                                reciprocal_factorial(n - alpha + s) / Rational(factorial(2 * alpha));
        total += ExactValue(weight) * gamma_half(2 * s + 1);
    }
    return total;
}

ExactValue heat_invariant_even(long n, long nu) {
    require(n >= 1, "even formula needs n >= 1");
    require(nu >= 1, "even formula needs nu >= 1");
    const KTableEven table = k_table_even(nu);
    const Rational half_shift(2 * nu - 1, 2);

    Rational leading;
    for (const auto& [t, k_coeff] : table.entries) {
        leading += Rational(factorial(nu - 1 - t)) * reciprocal_factorial(n - t) *
                   half_shift.pow(2 * n - 2 * t) * k_coeff;
    }

    // Bernoulli correction; empty when nu > n.
    Rational correction;
    for (const auto& [t, k_coeff] : table.entries) {
        for (long p = nu - t; p <= n - t; ++p) {
            const Rational term = sign_of(p + nu - t - 1) * half_shift.pow(2 * n - 2 * t - 2 * p) *
                                  bernoulli(2 * p) * reciprocal_factorial(n - t - p) *
                                  reciprocal_factorial(p - nu + t) / Rational(p) *
                                  (Rational(2).pow(1 - 2 * p) - Rational(1));
            correction += k_coeff * term;
        }
    }
    return ExactValue((leading + correction) * reciprocal_factorial(2 * nu - 1));
}

ExactValue heat_invariant_closed(long n, long d) {
    require(n >= 0, "closed form needs n >= 0");
    require(d == 1 || d == 2 || d == 3 || d == 5 || d == 7,
            "closed form available only for d in {1,2,3,5,7}, got d=" + str(d));
    if (n == 0) {
        return weyl_leading_term(d);
    }
    const Rational inv_nfact = reciprocal_factorial(n);
    switch (d) {
        case 1:
            return {};
        case 2: {
            Rational sum;
            for (long r = 0; r <= n; ++r) {
                sum += sign_of(r) * Rational(binomial(n, r)) * (Rational(2) - Rational(4).pow(r)) * bernoulli(2 * r);
            }
            return ExactValue(sum * inv_nfact / Rational(4).pow(n));
        }
        case 3:
            return ExactValue(inv_nfact / Rational(4), 1);
        case 5:
            return ExactValue(Rational(4).pow(n - 3) * Rational(6 - n) * inv_nfact / Rational(3), 1);
        default:
            return ExactValue(Rational(3).pow(2 * n - 6) * Rational(16 * n * n - 286 * n + 1215) * inv_nfact /
                                  Rational(640),
                              1);
    }
}

HeatInvariantResult heat_invariant(long n, long d, std::optional<long> omega) {
    return heat_invariant(n, d, Formula::automatic, omega);
}

HeatInvariantResult heat_invariant(long n, long d, Formula formula, std::optional<long> omega) {
    require(n >= 0, "n must be >= 0, got " + str(n));
    require(d >= 1, "d must be >= 1, got " + str(d));
    require(!omega || formula == Formula::automatic || formula == Formula::general,
            "--omega applies only to the general formula");

    HeatInvariantResult result{n, d, std::nullopt, Route::weyl, {}};
    if (formula == Formula::automatic && omega) {
        formula = Formula::general;
    }
    if (n == 0 && formula != Formula::general) {
        result.value = weyl_leading_term(d);
        return result;
    }

    switch (formula) {
        case Formula::general: {
            const long w = omega.value_or(2 * n);
            result.route = Route::general;
            result.omega_used = w;
            result.value = heat_invariant_general(n, d, w);
            break;
        }
        case Formula::odd:
            require(d % 2 == 1 && d >= 3, "odd formula needs odd d >= 3, got d=" + str(d));
            result.route = Route::odd;
            result.value = heat_invariant_odd(n, (d - 1) / 2);
            break;
        case Formula::even:
            require(d % 2 == 0, "even formula needs even d, got d=" + str(d));
            result.route = Route::even;
            result.value = heat_invariant_even(n, d / 2);
            break;
        case Formula::closed:
            result.route = Route::closed;
            result.value = heat_invariant_closed(n, d);
            break;
        case Formula::automatic:
            if (d == 1) {
                result.route = Route::closed;
                result.value = heat_invariant_closed(n, d);
            } else if (d % 2 == 1) {
                result.route = Route::odd;
                result.value = heat_invariant_odd(n, (d - 1) / 2);
            } else {
                result.route = Route::even;
                result.value = heat_invariant_even(n, d / 2);
            }
            break;
    }
    return result;
}

VerificationReport verify_crosscheck(IntRange ns, IntRange ds) {
    VerificationReport report;
    report.identity_name = "crosscheck";
    for (long d = ds.lo; d <= ds.hi; ++d) {
        for (long n = ns.lo; n <= ns.hi; ++n) {
            const ExactValue general = heat_invariant_general(n, d, 2 * n);
            if (d == 1) {
                report.check({{"n", str(n)}, {"d", str(d)}, {"route", "closed"}}, general, heat_invariant_closed(n, 1));
            } else if (d % 2 == 1) {
                report.check({{"n", str(n)}, {"d", str(d)}, {"route", "odd"}}, general,
                             heat_invariant_odd(n, (d - 1) / 2));
            } else {
                report.check({{"n", str(n)}, {"d", str(d)}, {"route", "even"}}, general, heat_invariant_even(n, d / 2));
            }
        }
    }
    return report;
}

VerificationReport verify_omega_stability(IntRange ns, IntRange ds) {
    VerificationReport report;
    report.identity_name = "omega-stability";
    for (long n = ns.lo; n <= ns.hi; ++n) {
        for (long d = ds.lo; d <= ds.hi; ++d) {
            const ExactValue base = heat_invariant_general(n, d, 2 * n);
            for (long omega = 2 * n + 1; omega <= 3 * n + 4; ++omega) {
                report.check({{"n", str(n)}, {"d", str(d)}, {"omega", str(omega)}},
                             heat_invariant_general(n, d, omega), base);
            }
        }
    }
    return report;
}

VerificationReport verify_sharpness(const std::vector<std::pair<long, long>>& cells) {
    VerificationReport report;
    report.identity_name = "sharpness";
    for (const auto& [n, d] : cells) {
        const ExactValue below = general_formula_sum(n, d, 2 * n - 1);
        const ExactValue at = general_formula_sum(n, d, 2 * n);
        ParameterPoint point{{"n", str(n)}, {"d", str(d)}, {"omega", str(2 * n - 1)}};
        if (below == at) {
            report.add_failure(point, below, at);
        } else {
            report.notes.push_back("omega=2n-1 differs at n=" + str(n) + ", d=" + str(d) + ": " + below.str() +
                                   " vs " + at.str());
        }
        report.parameter_box.push_back(std::move(point));
    }
    return report;
}

}  // namespace heatsphere
