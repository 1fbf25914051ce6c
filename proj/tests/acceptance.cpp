// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "heatsphere/asymptotics.hpp"
#include "heatsphere/identities.hpp"
#include "heatsphere/invariants.hpp"
#include "heatsphere/legendre.hpp"
#include "heatsphere/opercalc.hpp"
#include "heatsphere/spectrum.hpp"

using namespace heatsphere;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void require(const VerificationReport& report) {
        if (!report.passed() && ok) {
            ok = false;
            detail = report.identity_name + ": " + std::to_string(report.failures.size()) + " failures, first at " +
                     to_string(report.failures.front().parameters);
        }
    }
};

std::string cell(long n, long d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); }

ExactValue sqrt_pi_times(const Rational& c) { return {c, 1}; }

Outcome closed_form_s3() {
    Outcome o;
    for (long n = 1; n <= 10; ++n) {
        const ExactValue expected = sqrt_pi_times(Rational(1, 4) * reciprocal_factorial(n));
        o.require(heat_invariant_general(n, 3, 2 * n) == expected, "general omega=2n " + cell(n, 3));
        o.require(heat_invariant_general(n, 3, 2 * n + 3) == expected, "general omega=2n+3 " + cell(n, 3));
        o.require(heat_invariant_odd(n, 1) == expected, "odd " + cell(n, 3));
    }
    return o;
}

Outcome closed_form_s5_s7() {
    Outcome o;
    for (long n = 1; n <= 10; ++n) {
        const Rational inv = reciprocal_factorial(n);
        const ExactValue five = sqrt_pi_times(Rational(4).pow(n - 3) * Rational(6 - n) * inv / Rational(3));
        const ExactValue seven =
            sqrt_pi_times(Rational(3).pow(2 * n - 6) * Rational(16 * n * n - 286 * n + 1215) * inv / Rational(640));
        o.require(heat_invariant_odd(n, 2) == five, cell(n, 5));
        o.require(heat_invariant_odd(n, 3) == seven, cell(n, 7));
    }
    return o;
}

Outcome bernoulli_s2() {
    Outcome o;
    for (long n = 1; n <= 10; ++n) {
        o.require(heat_invariant_even(n, 1) == heat_invariant_closed(n, 2), cell(n, 2));
    }
    o.require(heat_invariant_even(1, 1) == ExactValue(Rational(1, 3)), "a_{1,2} != 1/3");
    o.require(heat_invariant_even(2, 1) == ExactValue(Rational(1, 15)), "a_{2,2} != 1/15");
    return o;
}

Outcome cross_formula() {
    Outcome o;
    long cells = 0;
    for (long n = 1; n <= 8; ++n) {
        for (long alpha = 1; alpha <= 5; ++alpha) {
            const long d = 2 * alpha + 1;
            o.require(heat_invariant_general(n, d, 2 * n) == heat_invariant_odd(n, alpha), "odd " + cell(n, d));
            ++cells;
        }
        for (long nu = 1; nu <= 5; ++nu) {
            const long d = 2 * nu;
            o.require(heat_invariant_general(n, d, 2 * n) == heat_invariant_even(n, nu), "even " + cell(n, d));
            ++cells;
        }
    }
    o.require(cells == 80, "cell count");
    return o;
}

Outcome omega_stability_and_sharpness() {
    Outcome o;
    o.require(verify_omega_stability({1, 6}, {1, 8}));
    for (const auto& [n, d] : {std::pair{1L, 1L}, {2L, 1L}, {2L, 3L}}) {
        o.require(general_formula_sum(n, d, 2 * n - 1) != general_formula_sum(n, d, 2 * n),
                  "omega=2n-1 agrees at " + cell(n, d));
    }
    return o;
}

Outcome identity_suites() {
    Outcome o;
    IdentityBox box;
    box.n = {1, 5};
    box.omega_offset = {0, 4};
    box.j = {0, 10};
    for (const auto id : {Identity::s1, Identity::s1g, Identity::s3, Identity::vychet}) {
        o.require(verify_identity(id, box));
    }
    return o;
}

Outcome circle_vanishing() {
    Outcome o;
    for (long n = 1; n <= 8; ++n) {
        o.require(heat_invariant(n, 1).value.is_zero(), "dispatcher " + cell(n, 1));
        o.require(heat_invariant_general(n, 1, 2 * n).is_zero(), "general " + cell(n, 1));
    }
    return o;
}

Outcome weyl_and_a1() {
    Outcome o;
    // vol(S^0) = 2, vol(S^1) = 2 pi, vol(S^d) = 2 pi vol(S^{d-2}) / (d-1)
    ExactValue vol_prev(2);
    ExactValue vol(Rational(2), 2);
    for (long d = 2; d <= 8; ++d) {
        const ExactValue next = ExactValue(Rational(2, d - 1), 2) * vol_prev;
        vol_prev = vol;
        vol = next;
        // (4 pi)^{d/2} = 2^d pi^{d/2}
        const ExactValue weyl = vol / ExactValue(Rational(2).pow(d), static_cast<int>(d));
        o.require(heat_invariant(0, d).value == weyl, "a_0 " + cell(0, d));
        o.require(heat_invariant(1, d).value == ExactValue(Rational(d * (d - 1), 6)) * weyl, "a_1 " + cell(1, d));
    }
    return o;
}

Outcome lemma_suites() {
    Outcome o;
    o.require(verify_lemmas({0, 4}, {0, 3}, {0, 3}));
    o.require(check_bernoulli_link(8));
    return o;
}

Outcome legendre_brute_force() {
    Outcome o;
    o.require(verify_legendre(4, {2, 5}));
    return o;
}

Outcome numeric_asymptotics() {
    Outcome o;
    for (long d : {2L, 3L, 5L}) {
        for (long n : {2L, 3L, 4L}) {
            const auto est = remainder_order(d, n, 0.05);
            std::ostringstream msg;
            msg << "d=" << d << " n_terms=" << n << " observed " << est.observed_order;
            o.require(est.status == RemainderStatus::measured && est.relative_deviation < 0.2, msg.str());
        }
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double time_limit;
        std::function<Outcome()> body;
    };
    const Criterion criteria[] = {
        {1, "S^3 closed form via general and odd routes", 5.0, closed_form_s3},
        {2, "S^5 and S^7 closed forms", 0.0, closed_form_s5_s7},
        {3, "S^2 Bernoulli sum", 0.0, bernoulli_s2},
        {4, "general formula vs odd/even formulas on 40+40 cells", 60.0, cross_formula},
        {5, "omega-stability and sharpness", 0.0, omega_stability_and_sharpness},
        {6, "S1, S1g, S3 and residue identities", 0.0, identity_suites},
        {7, "circle vanishing", 0.0, circle_vanishing},
        {8, "Weyl term and a_1 oracles", 0.0, weyl_and_a1},
        {9, "operator lemmas and Bernoulli link", 0.0, lemma_suites},
        {10, "Legendre expansion brute force", 0.0, legendre_brute_force},
        {11, "numeric remainder order within 20%", 30.0, numeric_asymptotics},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0.0 && secs >= c.time_limit) {
            o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit) + " s");
        }
        failed += o.ok ? 0 : 1;
        std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                    o.ok ? "" : "  -- ", o.detail.c_str());
    }
    std::printf("%d of 11 criteria passed\n", 11 - failed);
    return failed == 0 ? 0 : 1;
}
