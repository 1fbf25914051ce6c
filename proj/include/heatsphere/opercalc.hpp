#pragma once

// Operator calculus on polynomials: truncated power series in the
// differentiation symbol D, the symmetric-difference symbol
// P(D) = 2 sinh(D/2) / D, terminating 2F1 sums, and exact checks of the
// lemmas built on them.

#include <string>
#include <vector>

#include "heatsphere/exactnum.hpp"
#include "heatsphere/polynomial.hpp"
#include "heatsphere/report.hpp"

namespace heatsphere {

/// sum_{i=0}^{order} c_i D^i, arithmetic modulo D^(order+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(long order = 0);
    /// Missing coefficients are zero; extra ones are dropped.
    TruncatedSeries(long order, std::vector<Rational> coefficients);

    static TruncatedSeries constant(long order, const Rational& c);
    /// The series variable itself (D, or z for hypergeometric work).
    static TruncatedSeries variable(long order);

    long order() const { return order_; }
    const Rational& operator[](long i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Same series truncated to a lower order.
    TruncatedSeries truncate(long order) const;
    TruncatedSeries pow(long exponent) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Rational& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
    /// Result order is the smaller of the two orders.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string str() const;

private:
    long order_ = 0;
    std::vector<Rational> coeffs_;
};

/// P(D) = (e^{D/2} - e^{-D/2}) / D: c_{2i} = 1 / (4^i (2i+1)!), odd terms zero.
TruncatedSeries p_series(long order);

/// Multiplicative inverse; throws std::domain_error for zero constant term.
TruncatedSeries invert_series(const TruncatedSeries& s);

/// D / (e^{-D/2} - e^{D/2}) = -1/P(D), the sign convention under which the
/// Bernoulli link (2t)! P_{2t} = -2 (B_{2t}/2^{2t} - B_{2t}/2) holds.
TruncatedSeries negated_p_inverse(long order);

/// s applied to x^m, as a polynomial in x. Requires m <= order.
RationalPolynomial apply_to_power(const TruncatedSeries& s, long m);

/// (s x^m) at x = 0, i.e. m! c_m. Requires m <= order.
Rational apply_to_monomial(const TruncatedSeries& s, long m);

/// Finite 2F1(a, b; c; z) = sum (a)_m (b)_m / (c)_m z^m / m!. Requires a or b
/// to be a nonpositive integer; throws std::domain_error on a pole of (c)_m
/// before termination.
Rational terminating_2f1(const Rational& a, const Rational& b, const Rational& c, const Rational& z);
TruncatedSeries terminating_2f1(const Rational& a, const Rational& b, const Rational& c, const TruncatedSeries& z);

/// Coefficients of 2F1(a, b; c; z) as a series in z up to `order`; need not
/// terminate.
TruncatedSeries hypergeometric_series(const Rational& a, const Rational& b, const Rational& c, long order);

/// (1 - z)^e = sum (-e)_m z^m / m!, truncated.
TruncatedSeries binomial_series(const Rational& exponent, long order);

/// Euler's transformation 2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a,c-b;c;z) with a
/// a nonpositive integer. Compared exactly as power series in z through
/// `series_order`; when c-a-b is a nonnegative integer and the right side
/// also terminates the two sides are additionally compared at z.
bool check_euler_transform(const Rational& a, const Rational& b, const Rational& c, const Rational& z,
                           long series_order = 40);

/// (2t)! [D^{2t}] (-1/P) against -2 (B_{2t}/2^{2t} - B_{2t}/2) for 1 <= t <= t_max.
VerificationReport check_bernoulli_link(long t_max);

enum class Lemma { ff1_bb, ff2_e2 };

std::string to_string(Lemma lemma);
Lemma parse_lemma(const std::string& name);

struct LemmaSides {
    RationalPolynomial lhs;
    RationalPolynomial rhs;
};

/// Both sides of the lemma with no precondition check. ff1_bb compares
/// polynomials in x; ff2_e2 compares constants (evaluation at x = 0).
LemmaSides lemma_sides(Lemma which, long t, long s, long omega_prime);

/// True iff the lemma's equality holds exactly. Throws std::invalid_argument
/// outside the lemma's hypotheses (ff1: t >= 1; ff2: t >= 0; both s >= 0 and
/// omega' >= 2t + s).
bool check_lemma(Lemma which, long t, long s, long omega_prime);

/// The S^1 sum in operator form against 1/(omega! n!) 2F1(n+1/2, -omega; 3/2; P^2)
/// and its Euler transform 1/(omega! n!) 2F1(1-n, omega+3/2; 3/2; P^2) (1-P^2)^(omega-n+1),
/// as series through D^(2n+2). Returns true iff all three agree.
bool check_s1_operator_form(long n, long omega);

/// Lemma boxes t in ts, s in ss, omega' = 2t + s + offset; plus the S^1
/// operator form and the (1 - P^2)^(omega-n+1) vanishing order. Probes at
/// omega' = 2t + s - 1 are recorded as notes.
VerificationReport verify_lemmas(IntRange ts, IntRange ss, IntRange offsets);

}  // namespace heatsphere
