#pragma once

// Command-line front end: `compute`, `verify <target>` and `asympt`.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "heatsphere/exactnum.hpp"
#include "heatsphere/invariants.hpp"
#include "heatsphere/report.hpp"

namespace heatsphere::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// One computed coefficient as emitted by `compute`.
struct OutputRecord {
    long n = 0;
    long d = 1;
    std::optional<long> omega_used;
    std::string route;
    ExactValue value;
    std::optional<double> float_value;
};

OutputRecord make_record(const HeatInvariantResult& result, bool with_float = true);

nlohmann::json to_json(const OutputRecord& record);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
OutputRecord record_from_json(const nlohmann::json& j);

inline constexpr const char* csv_header = "n,d,omega,route,num,den,pi_half,float";
std::string to_csv_row(const OutputRecord& record);
/// Inverse of to_csv_row.
OutputRecord record_from_csv(const std::string& row);

nlohmann::json to_json(const VerificationReport& report);

/// "a..b" or a single integer.
IntRange parse_range(const std::string& text);

/// Runs the CLI on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heatsphere::cli
