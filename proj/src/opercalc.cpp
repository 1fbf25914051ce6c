#include "heatsphere/opercalc.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace heatsphere {

namespace {

std::string str(long v) { return std::to_string(v); }

Rational sign_of(long power) { return Rational(power % 2 == 0 ? 1 : -1); }

bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

long to_long(const Rational& r) { return r.numerator().get_si(); }

/// Index of the last nonzero term of a terminating 2F1.
long termination_point(const Rational& a, const Rational& b) {
    std::optional<long> n;
    for (const Rational* p : {&a, &b}) {
        if (is_nonpositive_integer(*p)) {
            const long m = -to_long(*p);
            n = n ? std::min(*n, m) : m;
        }
    }
    if (!n) {
        throw std::domain_error("2F1(" + a.str() + ", " + b.str() + "; ...) does not terminate");
    }
    return *n;
}

/// (a)_m (b)_m / ((c)_m m!) for m = 0..last; stops early once a term vanishes.
std::vector<Rational> hypergeometric_terms(const Rational& a, const Rational& b, const Rational& c, long last) {
    std::vector<Rational> terms{Rational(1)};
    for (long m = 0; m < last; ++m) {
        const Rational& prev = terms.back();
        const Rational num = prev * (a + Rational(m)) * (b + Rational(m));
        if (num.is_zero()) {
            terms.resize(static_cast<std::size_t>(last + 1));
            break;
        }
        const Rational den = (c + Rational(m)) * Rational(m + 1);
        if (den.is_zero()) {
            throw std::domain_error("2F1: lower parameter " + c.str() + " hits a pole before termination");
        }
        terms.push_back(num / den);
    }
    return terms;
}

}  // namespace

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(long order) : order_(order) {
    if (order < 0) {
        throw std::invalid_argument("series order must be >= 0");
    }
    coeffs_.resize(static_cast<std::size_t>(order + 1));
}

TruncatedSeries::TruncatedSeries(long order, std::vector<Rational> coefficients) : TruncatedSeries(order) {
    const std::size_t n = std::min(coeffs_.size(), coefficients.size());
    std::move(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
}

TruncatedSeries TruncatedSeries::constant(long order, const Rational& c) { return {order, {c}}; }

TruncatedSeries TruncatedSeries::variable(long order) { return {order, {Rational(0), Rational(1)}}; }

TruncatedSeries TruncatedSeries::truncate(long order) const {
    if (order > order_) {
        throw std::invalid_argument("cannot raise the truncation order of a series");
    }
    return {order, coeffs_};
}

TruncatedSeries TruncatedSeries::pow(long exponent) const {
    if (exponent < 0) {
        return invert_series(*this).pow(-exponent);
    }
    TruncatedSeries result = constant(order_, Rational(1));
    TruncatedSeries base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    if (rhs.order_ < order_) {
        *this = truncate(rhs.order_);
    }
    for (long i = 0; i <= order_; ++i) {
        coeffs_[static_cast<std::size_t>(i)] += rhs[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    if (rhs.order_ < order_) {
        *this = truncate(rhs.order_);
    }
    for (long i = 0; i <= order_; ++i) {
        coeffs_[static_cast<std::size_t>(i)] -= rhs[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const long order = std::min(a.order_, b.order_);
    TruncatedSeries out(order);
    for (long i = 0; i <= order; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (long j = 0; i + j <= order; ++j) {
            if (!b[j].is_zero()) {
                out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
            }
        }
    }
    return out;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        os << (i ? ", " : "") << coeffs_[i];
    }
    os << "] + O(D^" << order_ + 1 << ')';
    return os.str();
}

// ---------------------------------------------------------------------------

TruncatedSeries p_series(long order) {
    if (order < 0) {
        throw std::invalid_argument("series order must be >= 0");
    }
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    for (long i = 0; 2 * i <= order; ++i) {
        c[static_cast<std::size_t>(2 * i)] = reciprocal_factorial(2 * i + 1) / Rational(4).pow(i);
    }
    return {order, std::move(c)};
}

TruncatedSeries invert_series(const TruncatedSeries& s) {
    if (s[0].is_zero()) {
        throw std::domain_error("series with zero constant term has no inverse");
    }
    const Rational inv0 = s[0].inverse();
    std::vector<Rational> r(static_cast<std::size_t>(s.order() + 1));
    r[0] = inv0;
    for (long i = 1; i <= s.order(); ++i) {
        Rational acc;
        for (long k = 1; k <= i; ++k) {
            acc += s[k] * r[static_cast<std::size_t>(i - k)];
        }
        r[static_cast<std::size_t>(i)] = -acc * inv0;
    }
    return {s.order(), std::move(r)};
}

TruncatedSeries negated_p_inverse(long order) { return invert_series(p_series(order)) * Rational(-1); }

RationalPolynomial apply_to_power(const TruncatedSeries& s, long m) {
    if (m < 0 || m > s.order()) {
        throw std::invalid_argument("apply: monomial degree " + str(m) + " exceeds series order " + str(s.order()));
    }
    // D^i x^m = m!/(m-i)! x^(m-i)
    std::vector<Rational> c(static_cast<std::size_t>(m + 1));
    Rational falling(1);
    for (long i = 0; i <= m; ++i) {
        c[static_cast<std::size_t>(m - i)] = s[i] * falling;
        falling *= Rational(m - i);
    }
    return RationalPolynomial(std::move(c));
}

Rational apply_to_monomial(const TruncatedSeries& s, long m) { return apply_to_power(s, m).coefficient(0); }

Rational terminating_2f1(const Rational& a, const Rational& b, const Rational& c, const Rational& z) {
    const auto terms = hypergeometric_terms(a, b, c, termination_point(a, b));
    Rational acc;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

TruncatedSeries terminating_2f1(const Rational& a, const Rational& b, const Rational& c, const TruncatedSeries& z) {
    const auto terms = hypergeometric_terms(a, b, c, termination_point(a, b));
    TruncatedSeries acc(z.order());
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        acc = acc * z + TruncatedSeries::constant(z.order(), *it);
    }
    return acc;
}

TruncatedSeries hypergeometric_series(const Rational& a, const Rational& b, const Rational& c, long order) {
    return {order, hypergeometric_terms(a, b, c, order)};
}

TruncatedSeries binomial_series(const Rational& exponent, long order) {
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    for (long m = 0; m <= order; ++m) {
        c[static_cast<std::size_t>(m)] = pochhammer(-exponent, m) * reciprocal_factorial(m);
    }
    return {order, std::move(c)};
}

bool check_euler_transform(const Rational& a, const Rational& b, const Rational& c, const Rational& z,
                           long series_order) {
    if (!is_nonpositive_integer(a)) {
        throw std::invalid_argument("check_euler_transform needs a nonpositive integer a, got " + a.str());
    }
    const Rational e = c - a - b;
    const TruncatedSeries lhs = hypergeometric_series(a, b, c, series_order);
    const TruncatedSeries rhs = binomial_series(e, series_order) * hypergeometric_series(c - a, c - b, c, series_order);
    if (!(lhs == rhs)) {
        return false;
    }
    if (e.is_integer() && e.sign() >= 0 && (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b))) {
        const Rational left = terminating_2f1(a, b, c, z);
        const Rational right = (Rational(1) - z).pow(to_long(e)) * terminating_2f1(c - a, c - b, c, z);
        return left == right;
    }
    return true;
}

VerificationReport check_bernoulli_link(long t_max) {
    if (t_max < 1) {
        throw std::invalid_argument("check_bernoulli_link needs t_max >= 1");
    }
    VerificationReport report;
    report.identity_name = "bernoulli-link";
    const TruncatedSeries symmetric_inverse = negated_p_inverse(2 * t_max);
    const TruncatedSeries true_inverse = invert_series(p_series(2 * t_max));
    long opposite_sign_matches = 0;
    for (long t = 1; t <= t_max; ++t) {
        const Rational b = bernoulli(2 * t);
        const Rational expected = Rational(-2) * (b / Rational(2).pow(2 * t) - b / Rational(2));
        const Rational computed = apply_to_monomial(symmetric_inverse, 2 * t);
        report.check({{"t", str(t)}}, ExactValue(computed), ExactValue(expected));
        if (apply_to_monomial(true_inverse, 2 * t) == -expected) {
            ++opposite_sign_matches;
        }
    }
    report.notes.push_back("sign convention: P^{-1} = D/(e^{-D/2} - e^{D/2}) = -1/P(D)");
    report.notes.push_back("with the multiplicative inverse 1/P(D) the link holds with the opposite sign at " +
                           str(opposite_sign_matches) + " of " + str(t_max) + " points");
    return report;
}

std::string to_string(Lemma lemma) { return lemma == Lemma::ff1_bb ? "ff1_bb" : "ff2_e2"; }

Lemma parse_lemma(const std::string& name) {
    if (name == "ff1_bb") {
        return Lemma::ff1_bb;
    }
    if (name == "ff2_e2") {
        return Lemma::ff2_e2;
    }
    throw std::invalid_argument("unknown lemma '" + name + "'");
}

LemmaSides lemma_sides(Lemma which, long t, long s, long omega_prime) {
    if (t < 0 || s < 0 || omega_prime < 0) {
        throw std::invalid_argument("lemma parameters must be nonnegative");
    }
    const long order = 2 * t + 2;
    const TruncatedSeries p = p_series(order);
    const TruncatedSeries p2 = p * p;
    TruncatedSeries power = which == Lemma::ff1_bb ? TruncatedSeries::constant(order, Rational(1)) : p;
    TruncatedSeries sum(order);
    for (long j = 0; j <= omega_prime; ++j) {
        const Rational coeff =
            which == Lemma::ff1_bb
                ? sign_of(j) * Rational(factorial(2 * j + 2 * t)) * reciprocal_factorial(omega_prime - j) *
                      reciprocal_factorial(j + t - s) * reciprocal_factorial(2 * j + 1)
                : sign_of(j) * Rational(factorial(2 * j + 2 * t + 1)) * reciprocal_factorial(omega_prime - j) *
                      reciprocal_factorial(j + t - s) * reciprocal_factorial(2 * j + 2);
        sum += power * coeff;
        power = power * p2;
    }
    if (which == Lemma::ff1_bb) {
        return {apply_to_power(sum, 2 * t), RationalPolynomial()};
    }
    const Rational lhs = apply_to_monomial(sum, 2 * t);
    const Rational scale = Rational(factorial(2 * t)) * pochhammer(Rational(t - s), s) /
                           (Rational(2) * Rational(factorial(omega_prime + 1)) * Rational(factorial(t)));
    const Rational rhs = scale * apply_to_monomial(invert_series(p), 2 * t);
    return {RationalPolynomial{lhs}, RationalPolynomial{rhs}};
}

bool check_lemma(Lemma which, long t, long s, long omega_prime) {
    const long t_min = which == Lemma::ff1_bb ? 1 : 0;
    if (t < t_min || s < 0 || omega_prime < 2 * t + s) {
        throw std::invalid_argument(to_string(which) + " needs t >= " + str(t_min) +
                                    ", s >= 0, omega' >= 2t+s (got t=" + str(t) + ", s=" + str(s) +
                                    ", omega'=" + str(omega_prime) + ")");
    }
    const LemmaSides sides = lemma_sides(which, t, s, omega_prime);
    return sides.lhs == sides.rhs;
}

bool check_s1_operator_form(long n, long omega) {
    if (n < 1 || omega < n - 1) {
        throw std::invalid_argument("check_s1_operator_form needs n >= 1 and omega >= n - 1");
    }
    const long order = 2 * n + 2;
    const TruncatedSeries p = p_series(order);
    const TruncatedSeries p2 = p * p;
    const TruncatedSeries one = TruncatedSeries::constant(order, Rational(1));

    TruncatedSeries sum(order);
    TruncatedSeries power = one;
    for (long j = 0; j <= omega; ++j) {
        const Rational coeff = sign_of(j) * Rational(factorial(2 * j + 2 * n)) * reciprocal_factorial(omega - j) *
                               reciprocal_factorial(j + n) * reciprocal_factorial(2 * j + 1) *
                               reciprocal_factorial(2 * n);
        sum += power * coeff;
        power = power * p2;
    }
    const Rational prefactor = reciprocal_factorial(omega) * reciprocal_factorial(n);
    const TruncatedSeries direct = terminating_2f1(Rational(2 * n + 1, 2), Rational(-omega), Rational(3, 2), p2) * prefactor;
    const TruncatedSeries euler = terminating_2f1(Rational(1 - n), Rational(2 * omega + 3, 2), Rational(3, 2), p2) *
                                  (one - p2).pow(omega - n + 1) * prefactor;
    return sum == direct && direct == euler;
}

VerificationReport verify_lemmas(IntRange ts, IntRange ss, IntRange offsets) {
    VerificationReport report;
    report.identity_name = "lemmas";
    const ExactValue ok(Rational(1));
    const ExactValue bad(Rational(0));
    long probes = 0;
    long probe_failures = 0;

    for (Lemma which : {Lemma::ff1_bb, Lemma::ff2_e2}) {
        const long t_min = which == Lemma::ff1_bb ? 1 : 0;
        for (long t = std::max(ts.lo, t_min); t <= ts.hi; ++t) {
            for (long s = ss.lo; s <= ss.hi; ++s) {
                for (long off = offsets.lo; off <= offsets.hi; ++off) {
                    const long w = 2 * t + s + off;
                    const LemmaSides sides = lemma_sides(which, t, s, w);
                    const RationalPolynomial diff = sides.lhs - sides.rhs;
                    report.check({{"lemma", to_string(which)}, {"t", str(t)}, {"s", str(s)}, {"omega'", str(w)}},
                                 ExactValue(diff.is_zero() ? Rational(0) : diff.coefficient(diff.degree())),
                                 ExactValue());
                }
                if (which == Lemma::ff1_bb && 2 * t + s - 1 >= 0) {
                    const LemmaSides probe = lemma_sides(which, t, s, 2 * t + s - 1);
                    ++probes;
                    probe_failures += probe.lhs == probe.rhs ? 0 : 1;
                }
            }
        }
    }
    report.notes.push_back("ff1_bb probed at omega' = 2t+s-1: fails at " + str(probe_failures) + " of " +
                           str(probes) + " points (outside the hypothesis, informational)");

    for (long n = 1; n <= std::max(ts.hi, 1L); ++n) {
        for (long w = 2 * n; w <= 2 * n + 3; ++w) {
            report.check({{"check", "s1-operator-form"}, {"n", str(n)}, {"omega", str(w)}},
                         check_s1_operator_form(n, w) ? ok : bad, ok);
        }
    }

    for (long n = 1; n <= 4; ++n) {
        for (long w = n; w <= 10; ++w) {
            const long e = w - n + 1;
            const long order = 2 * e;
            const TruncatedSeries p = p_series(order);
            const TruncatedSeries defect = (TruncatedSeries::constant(order, Rational(1)) - p * p).pow(e);
            bool vanishes = true;
            for (long i = 0; i < order; ++i) {
                vanishes = vanishes && defect[i].is_zero();
            }
            vanishes = vanishes && defect[order] == Rational(-1, 12).pow(e);
            report.check({{"check", "one-minus-p2-order"}, {"n", str(n)}, {"omega", str(w)}}, vanishes ? ok : bad, ok);
        }
    }
    return report;
}

}  // namespace heatsphere
