#include "ncfree/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace ncfree {

void VerificationReport::fail(std::string key, std::string detail) {
    failures.push_back({std::move(key), std::move(detail)});
}

void VerificationReport::sort_failures() {
    std::sort(failures.begin(), failures.end(),
              [](const CaseFailure& a, const CaseFailure& b) { return a.key < b.key; });
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures) fails.push_back({{"case", f.key}, {"detail", f.detail}});
    return nlohmann::json{{"suite", r.suite},
                          {"parameters", r.parameters},
                          {"cases", r.cases},
                          {"failures", fails},
                          {"passed", r.passed()}};
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases
        << " cases";
    for (const auto& [k, v] : r.parameters) out << ", " << k << "=" << v;
    out << ", " << r.wall_seconds << "s)\n";
    for (const auto& f : r.failures) out << "  counterexample " << f.key << ": " << f.detail << "\n";
    return out.str();
}

} // namespace ncfree
