#include "heatsphere/report.hpp"

#include <sstream>

namespace heatsphere {

std::string to_string(const ParameterPoint& point) {
    std::string out;
    for (const auto& [name, value] : point) {
        if (!out.empty()) {
            out += ", ";
        }
        out += name + "=" + value;
    }
    return out;
}

void VerificationReport::check(ParameterPoint point, const ExactValue& computed, const ExactValue& expected) {
    if (!(computed == expected)) {
        failures.push_back({point, computed, expected});
    }
    parameter_box.push_back(std::move(point));
}

void VerificationReport::add_failure(ParameterPoint point, ExactValue computed, ExactValue expected) {
    failures.push_back({std::move(point), std::move(computed), std::move(expected)});
}

void VerificationReport::merge(const VerificationReport& other) {
    parameter_box.insert(parameter_box.end(), other.parameter_box.begin(), other.parameter_box.end());
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string VerificationReport::render() const {
    std::ostringstream os;
    os << identity_name << ": " << (passed() ? "PASS" : "FAIL") << " (" << parameter_box.size() << " points, "
       << failures.size() << " failures)\n";
    for (const auto& f : failures) {
        os << "  witness [" << to_string(f.parameters) << "] computed " << f.computed << " expected " << f.expected
           << '\n';
    }
    for (const auto& note : notes) {
        os << "  note: " << note << '\n';
    }
    return os.str();
}

}  // namespace heatsphere
