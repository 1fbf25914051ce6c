#include "heatsphere/cli.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "heatsphere/asymptotics.hpp"
#include "heatsphere/identities.hpp"
#include "heatsphere/legendre.hpp"
#include "heatsphere/opercalc.hpp"

namespace heatsphere::cli {

namespace {

/// Thrown for bad flag values found after CLI11 parsing succeeded.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

long parse_long(const std::string& text) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + text + "'");
    }
    if (pos != text.size()) {
        throw UsageError("not an integer: '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep)) {
        parts.push_back(cur);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

IntRange range_or(const std::string& text, IntRange fallback) { return text.empty() ? fallback : parse_range(text); }

// ---------------------------------------------------------------------------

struct ComputeOptions {
    std::string n;
    std::string d;
    std::optional<long> omega;
    std::string formula = "auto";
    std::string format = "json";
};

int cmd_compute(const ComputeOptions& opt, std::ostream& out) {
    const IntRange ns = parse_range(opt.n);
    const IntRange ds = parse_range(opt.d);
    if (ns.lo > ns.hi || ds.lo > ds.hi) {
        throw UsageError("empty --n or --d range");
    }
    const Formula formula = parse_formula(opt.formula);

    std::vector<OutputRecord> records;
    for (long n = ns.lo; n <= ns.hi; ++n) {
        for (long d = ds.lo; d <= ds.hi; ++d) {
            records.push_back(make_record(heat_invariant(n, d, formula, opt.omega)));
        }
    }
    if (opt.format == "csv") {
        out << csv_header << '\n';
        for (const auto& r : records) {
            out << to_csv_row(r) << '\n';
        }
    } else {
        for (const auto& r : records) {
            out << to_json(r).dump() << '\n';
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::string target;
    std::string n;
    std::string d;
    std::string omega_offset;
    std::string j;
    std::string t;
    std::string s;
    std::string x;
    long t_max = 8;
    std::string format = "text";
};

VerificationReport run_verify(const VerifyOptions& opt) {
    const std::string& target = opt.target;
    if (target == "s1" || target == "s1g" || target == "s3" || target == "vychet") {
        IdentityBox box;
        if (target == "s1g") {
            box.n = {1, 5};
            box.omega_offset = {0, 4};
        } else if (target == "s3") {
            box.omega_offset = {0, 2};
        }
        box.n = range_or(opt.n, box.n);
        box.omega_offset = range_or(opt.omega_offset, box.omega_offset);
        box.j = range_or(opt.j, box.j);
        if (!opt.x.empty()) {
            box.x.clear();
            for (const auto& part : split(opt.x, ',')) {
                box.x.push_back(Rational::parse(part));
            }
        }
        return verify_identity(parse_identity(target), box);
    }
    if (target == "lemmas") {
        return verify_lemmas(range_or(opt.t, {0, 4}), range_or(opt.s, {0, 3}), range_or(opt.omega_offset, {0, 3}));
    }
    if (target == "bernoulli-link") {
        return check_bernoulli_link(opt.t_max);
    }
    if (target == "legendre") {
        return verify_legendre(range_or(opt.j, {0, 4}).hi, range_or(opt.d, {2, 5}));
    }
    if (target == "crosscheck") {
        return verify_crosscheck(range_or(opt.n, {1, 6}), range_or(opt.d, {1, 8}));
    }
    if (target == "omega-stability") {
        return verify_omega_stability(range_or(opt.n, {1, 6}), range_or(opt.d, {1, 8}));
    }
    if (target == "sharpness") {
        std::vector<std::pair<long, long>> cells{{1, 1}, {2, 1}, {2, 3}};
        if (!opt.n.empty() || !opt.d.empty()) {
            cells.clear();
            const IntRange ns = range_or(opt.n, {1, 2});
            const IntRange ds = range_or(opt.d, {1, 3});
            for (long n = ns.lo; n <= ns.hi; ++n) {
                for (long d = ds.lo; d <= ds.hi; ++d) {
                    cells.emplace_back(n, d);
                }
            }
        }
        return verify_sharpness(cells);
    }
    throw UsageError("unknown verify target '" + target + "'");
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    const VerificationReport report = run_verify(opt);
    if (opt.format == "json") {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << report.render();
    }
    return report.passed() ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------------------

struct AsymptOptions {
    long d = 0;
    long n_terms = 0;
    double t0 = 0.05;
    double max_dev = 0.2;
    double rel_tol = 1e-15;
};

int cmd_asympt(const AsymptOptions& opt, std::ostream& out, std::ostream& err) {
    const std::int64_t max_k = max_k_from_environment();
    RemainderEstimate est;
    try {
        est = remainder_order(opt.d, opt.n_terms, opt.t0, opt.rel_tol, max_k);
    } catch (const SummationCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    const bool measured = est.status == RemainderStatus::measured;
    const bool passed = !measured || est.relative_deviation <= opt.max_dev;
    nlohmann::json j{
        {"d", est.d},
        {"n_terms", est.n_terms},
        {"t_values", est.t_values},
        {"remainders", est.remainders},
        {"status", to_string(est.status)},
        {"expected_order", est.expected_order ? nlohmann::json(*est.expected_order) : nlohmann::json(nullptr)},
        {"observed_order", measured ? nlohmann::json(est.observed_order) : nlohmann::json(nullptr)},
        {"relative_deviation", measured ? nlohmann::json(est.relative_deviation) : nlohmann::json(nullptr)},
        {"max_dev", opt.max_dev},
        {"passed", passed},
    };
    out << j.dump(2) << '\n';
    return passed ? exit_ok : exit_failure;
}

}  // namespace

// ---------------------------------------------------------------------------

OutputRecord make_record(const HeatInvariantResult& result, bool with_float) {
    OutputRecord r{result.n, result.d, result.omega_used, to_string(result.route), result.value, std::nullopt};
    if (with_float) {
        r.float_value = result.value.to_double();
    }
    return r;
}

nlohmann::json to_json(const OutputRecord& record) {
    nlohmann::json j{
        {"n", record.n},
        {"d", record.d},
        {"omega_used", record.omega_used ? nlohmann::json(*record.omega_used) : nlohmann::json(nullptr)},
        {"route", record.route},
        {"value",
         {{"num", record.value.coeff().numerator().get_str()},
          {"den", record.value.coeff().denominator().get_str()},
          {"pi_half", record.value.pi_half()}}},
    };
    if (record.float_value) {
        j["float_value"] = *record.float_value;
    }
    return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
    try {
        OutputRecord r;
        r.n = j.at("n").get<long>();
        r.d = j.at("d").get<long>();
        if (!j.at("omega_used").is_null()) {
            r.omega_used = j.at("omega_used").get<long>();
        }
        r.route = j.at("route").get<std::string>();
        const auto& v = j.at("value");
        const Rational coeff = Rational::parse(v.at("num").get<std::string>() + "/" + v.at("den").get<std::string>());
        r.value = ExactValue(coeff, v.at("pi_half").get<int>());
        if (j.contains("float_value")) {
            r.float_value = j.at("float_value").get<double>();
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed output record: ") + e.what());
    }
}

std::string to_csv_row(const OutputRecord& record) {
    std::ostringstream os;
    os << record.n << ',' << record.d << ',' << (record.omega_used ? std::to_string(*record.omega_used) : "") << ','
       << record.route << ',' << record.value.coeff().numerator().get_str() << ','
       << record.value.coeff().denominator().get_str() << ',' << record.value.pi_half() << ','
       << (record.float_value ? format_double(*record.float_value) : "");
    return os.str();
}

OutputRecord record_from_csv(const std::string& row) {
    const auto f = split(row, ',');
    if (f.size() != 8) {
        throw std::invalid_argument("CSV row needs 8 fields: '" + row + "'");
    }
    OutputRecord r;
    r.n = parse_long(f[0]);
    r.d = parse_long(f[1]);
    if (!f[2].empty()) {
        r.omega_used = parse_long(f[2]);
    }
    r.route = f[3];
    r.value = ExactValue(Rational::parse(f[4] + "/" + f[5]), static_cast<int>(parse_long(f[6])));
    if (!f[7].empty()) {
        r.float_value = std::stod(f[7]);
    }
    return r;
}

nlohmann::json to_json(const VerificationReport& report) {
    auto point_json = [](const ParameterPoint& p) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [k, v] : p) {
            j[k] = v;
        }
        return j;
    };
    auto value_json = [](const ExactValue& v) {
        return nlohmann::json{{"num", v.coeff().numerator().get_str()},
                              {"den", v.coeff().denominator().get_str()},
                              {"pi_half", v.pi_half()}};
    };
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures) {
        failures.push_back(
            {{"parameters", point_json(f.parameters)}, {"computed", value_json(f.computed)}, {"expected", value_json(f.expected)}});
    }
    return {{"identity", report.identity_name},
            {"passed", report.passed()},
            {"points", report.parameter_box.size()},
            {"failures", failures},
            {"notes", report.notes}};
}

IntRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long v = parse_long(text);
        return {v, v};
    }
    const IntRange r{parse_long(text.substr(0, dots)), parse_long(text.substr(dots + 2))};
    if (r.lo > r.hi) {
        throw std::invalid_argument("empty range '" + text + "'");
    }
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact heat invariants of round spheres"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* c = app.add_subcommand("compute", "Heat invariants a_{n,d} as exact values");
    c->add_option("--n", compute.n, "Index n or range a..b")->required();
    c->add_option("--d", compute.d, "Dimension d or range a..b")->required();
    c->add_option("--omega", compute.omega, "Summation bound for the general formula (>= 2n)");
    c->add_option("--formula", compute.formula, "auto|general|odd|even|closed")
        ->check(CLI::IsMember({"auto", "general", "odd", "even", "closed"}));
    c->add_option("--format", compute.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Run an exact verification suite");
    v->add_option("target", verify.target,
                  "s1|s1g|s3|vychet|lemmas|bernoulli-link|legendre|crosscheck|omega-stability|sharpness")
        ->required();
    v->add_option("--n", verify.n, "n range a..b");
    v->add_option("--d", verify.d, "d range a..b");
    v->add_option("--omega-offset", verify.omega_offset, "omega - 2n range a..b");
    v->add_option("--j", verify.j, "j range a..b");
    v->add_option("--t", verify.t, "lemma t range a..b");
    v->add_option("--s", verify.s, "lemma s range a..b");
    v->add_option("--x", verify.x, "comma separated rational x values");
    v->add_option("--t-max", verify.t_max, "largest t for bernoulli-link");
    v->add_option("--format", verify.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    AsymptOptions asympt;
    auto* a = app.add_subcommand("asympt", "Remainder order of the truncated expansion");
    a->add_option("--d", asympt.d, "Dimension")->required()->check(CLI::PositiveNumber);
    a->add_option("--n-terms", asympt.n_terms, "Number of expansion terms kept")->required()->check(CLI::PositiveNumber);
    a->add_option("--t0", asympt.t0, "Largest t of the slope measurement");
    a->add_option("--max-dev", asympt.max_dev, "Allowed relative deviation of the observed order");
    a->add_option("--rel-tol", asympt.rel_tol, "Relative accuracy of the spectral sum");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (c->parsed()) {
            return cmd_compute(compute, out);
        }
        if (v->parsed()) {
            return cmd_verify(verify, out);
        }
        return cmd_asympt(asympt, out, err);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

}  // namespace heatsphere::cli
