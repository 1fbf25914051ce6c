#include "heatsphere/asymptotics.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "heatsphere/invariants.hpp"

namespace heatsphere {

namespace {

double multiplicity_double(std::int64_t k, long d) {
    if (k == 0) {
        return 1.0;
    }
    if (d == 1) {
        return 2.0;
    }
    // (2k+d-1)/(d-1) * prod_{i=1}^{d-2} (k+i)/i
    double m = static_cast<double>(2 * k + d - 1);
    for (long i = 1; i <= d - 2; ++i) {
        m *= static_cast<double>(k + i) / static_cast<double>(i);
    }
    return m / static_cast<double>(d - 1);
}

struct TraceSum {
    double value;
    std::int64_t terms;
};

TraceSum sum_trace(long d, double t, double rel_tol, std::int64_t max_k) {
    if (d < 1) {
        throw std::invalid_argument("dimension must be >= 1");
    }
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("heat trace needs t > 0");
    }
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw std::invalid_argument("rel_tol must lie in (0, 1)");
    }
    const double dd = static_cast<double>(d);
    // Neumaier compensated sum; all terms are positive.
    double sum = 0.0;
    double carry = 0.0;
    for (std::int64_t k = 0;; ++k) {
        if (k > max_k) {
            throw SummationCapExceeded("heat trace at t=" + std::to_string(t) + " needs more than " +
                                       std::to_string(max_k) + " terms (raise HEATSPHERE_MAX_K)");
        }
        const double kk = static_cast<double>(k);
        const double lambda = kk * (kk + dd - 1.0);
        if (k > 0) {
            // g(k) = (2k+d)^d exp(-t lambda_k) bounds mu_k exp(-t lambda_k); the ratio
            // g(k+1)/g(k) is decreasing in k, so the tail is at most g(k)/(1 - rho_k).
            const double log_rho = dd * std::log((2.0 * kk + dd + 2.0) / (2.0 * kk + dd)) - t * (2.0 * kk + dd);
            if (log_rho < 0.0) {
                const double log_g = dd * std::log(2.0 * kk + dd) - t * lambda;
                const double tail = std::exp(log_g) / (1.0 - std::exp(log_rho));
                if (tail <= rel_tol * (sum + carry)) {
                    return {sum + carry, k};
                }
            }
        }
        const double term = multiplicity_double(k, d) * std::exp(-t * lambda);
        const double next = sum + term;
        carry += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
        sum = next;
    }
}

}  // namespace

std::int64_t max_k_from_environment() {
    const char* raw = std::getenv("HEATSPHERE_MAX_K");
    if (raw == nullptr || *raw == '\0') {
        return default_max_k;
    }
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (errno != 0 || end == raw || *end != '\0' || v <= 0) {
        throw std::invalid_argument(std::string("HEATSPHERE_MAX_K must be a positive integer, got '") + raw + "'");
    }
    return static_cast<std::int64_t>(v);
}

double heat_trace_numeric(long d, double t, double rel_tol, std::int64_t max_k) {
    return sum_trace(d, t, rel_tol, max_k).value;
}

std::int64_t heat_trace_terms(long d, double t, double rel_tol, std::int64_t max_k) {
    return sum_trace(d, t, rel_tol, max_k).terms;
}

double asymptotic_sum(long d, double t, long n_terms) {
    if (n_terms < 1) {
        throw std::invalid_argument("asymptotic_sum needs n_terms >= 1");
    }
    const double half_d = static_cast<double>(d) / 2.0;
    double total = 0.0;
    for (long n = 0; n < n_terms; ++n) {
        total += heat_invariant(n, d).value.to_double() * std::pow(t, static_cast<double>(n) - half_d);
    }
    return total;
}

std::string to_string(RemainderStatus status) {
    switch (status) {
        case RemainderStatus::measured: return "measured";
        case RemainderStatus::beyond_all_orders: return "beyond-all-orders";
        case RemainderStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

RemainderEstimate remainder_order(long d, long n_terms, double t0, double rel_tol, std::int64_t max_k) {
    if (n_terms < 1) {
        throw std::invalid_argument("remainder_order needs n_terms >= 1");
    }
    if (!(t0 > 0.0 && t0 < 1.0)) {
        throw std::invalid_argument("remainder_order needs 0 < t0 < 1");
    }
    RemainderEstimate est;
    est.d = d;
    est.n_terms = n_terms;
    est.t_values = {t0, t0 / 2.0};

    // Search a window past the truncation point for the first nonzero term.
    constexpr long search_window = 8;
    for (long n = n_terms; n < n_terms + search_window; ++n) {
        if (!heat_invariant(n, d).value.is_zero()) {
            est.expected_order = static_cast<double>(n) - static_cast<double>(d) / 2.0;
            break;
        }
    }

    std::vector<double> traces;
    for (double t : est.t_values) {
        traces.push_back(heat_trace_numeric(d, t, rel_tol, max_k));
        est.remainders.push_back(std::abs(traces.back() - asymptotic_sum(d, t, n_terms)));
    }

    if (!est.expected_order) {
        est.status = RemainderStatus::beyond_all_orders;
        return est;
    }
    // Remainders within a few hundred ulps of the trace are rounding noise.
    const double eps = std::numeric_limits<double>::epsilon();
    if (est.remainders[0] <= 256.0 * eps * traces[0] || est.remainders[1] <= 256.0 * eps * traces[1]) {
        est.status = RemainderStatus::inconclusive;
        return est;
    }
    est.observed_order = std::log2(est.remainders[0] / est.remainders[1]);
    est.relative_deviation =
        std::abs(est.observed_order - *est.expected_order) / std::max(std::abs(*est.expected_order), 0.5);
    return est;
}

}  // namespace heatsphere
