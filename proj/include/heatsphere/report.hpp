#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heatsphere/exactnum.hpp"

namespace heatsphere {

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntRange {
    long lo = 0;
    long hi = -1;
};

/// Ordered name=value assignment, e.g. {{"n","2"},{"omega","4"}}.
using ParameterPoint = std::vector<std::pair<std::string, std::string>>;

std::string to_string(const ParameterPoint& point);

struct VerificationFailure {
    ParameterPoint parameters;
    ExactValue computed;
    ExactValue expected;
};

/// Outcome of checking one identity over a parameter box. A report passes
/// exactly when it has no failures.
struct VerificationReport {
    std::string identity_name;
    std::vector<ParameterPoint> parameter_box;
    std::vector<VerificationFailure> failures;
    /// Informational remarks (conventions chosen, probes below a hypothesis).
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }

    /// Records one checked point; adds a failure when computed != expected.
    void check(ParameterPoint point, const ExactValue& computed, const ExactValue& expected);
    void add_failure(ParameterPoint point, ExactValue computed, ExactValue expected);

    /// Appends the points, failures and notes of `other` under this name.
    void merge(const VerificationReport& other);

    /// Human readable rendering; lists every failing witness.
    std::string render() const;
};

}  // namespace heatsphere
