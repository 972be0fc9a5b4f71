#pragma once

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ncfree {

struct CaseFailure {
    std::string key;    // canonical case identifier
    std::string detail; // inputs and both computed values
};

// Outcome of one theorem-suite run.  Failures are sorted by case key, so
// the JSON form is byte-identical for a given seed and parameter set
// (wall time is reported in the text form only).
struct VerificationReport {
    std::string suite;
    std::map<std::string, std::string> parameters;
    long cases = 0;
    std::vector<CaseFailure> failures;
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }
    void fail(std::string key, std::string detail);
    void sort_failures();
};

nlohmann::json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

} // namespace ncfree
