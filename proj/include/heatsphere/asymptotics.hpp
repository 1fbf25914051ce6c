#pragma once

// Floating-point cross-check of the small-t expansion
//   sum_k mu_{k,d} exp(-t lambda_{k,d})  ~  sum_n a_{n,d} t^(n - d/2)
// against direct summation of the spectrum.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heatsphere {

/// Raised when the summation index needed for the requested accuracy exceeds
/// the configured cap.
class SummationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on the eigenvalue index, overridable through HEATSPHERE_MAX_K.
inline constexpr std::int64_t default_max_k = 1'000'000;

/// Reads HEATSPHERE_MAX_K; falls back to default_max_k when unset. Throws
/// std::invalid_argument when the variable is set but not a positive integer.
std::int64_t max_k_from_environment();

/// Partial sum over k = 0..K-1 where K is the first index at which the tail
/// bound mu_{k,d} <= (2k+d)^d, summed as a geometric series, drops below
/// rel_tol times the partial sum. Throws SummationCapExceeded if K would
/// exceed max_k.
double heat_trace_numeric(long d, double t, double rel_tol, std::int64_t max_k = default_max_k);

/// Number of terms heat_trace_numeric would sum for these arguments.
std::int64_t heat_trace_terms(long d, double t, double rel_tol, std::int64_t max_k = default_max_k);

/// sum_{n=0}^{n_terms-1} a_{n,d} t^(n - d/2) with exact coefficients rounded once.
double asymptotic_sum(long d, double t, long n_terms);

enum class RemainderStatus { measured, beyond_all_orders, inconclusive };

std::string to_string(RemainderStatus status);

struct RemainderEstimate {
    long d = 1;
    long n_terms = 1;
    std::vector<double> t_values;
    RemainderStatus status = RemainderStatus::measured;
    double observed_order = 0.0;
    /// Exponent of the first omitted nonzero term; absent when every later
    /// coefficient in the search window vanishes.
    std::optional<double> expected_order;
    double relative_deviation = 0.0;
    std::vector<double> remainders;
};

/// Observed order log2(R(t0) / R(t0/2)) of the remainder
/// R(t) = |trace(t) - asymptotic_sum(t)| against the exponent of the first
/// omitted nonzero coefficient.
RemainderEstimate remainder_order(long d, long n_terms, double t0 = 0.05, double rel_tol = 1e-15,
                                  std::int64_t max_k = default_max_k);

}  // namespace heatsphere
