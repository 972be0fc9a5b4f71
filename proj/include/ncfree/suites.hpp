#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ncfree/report.hpp"

namespace ncfree {

// Knobs shared by every suite; 0 picks the suite's documented default.
// The seed drives all instance generation and is echoed in the report.
struct SuiteParams {
    int degree = 0;
    int instances = 0;
    std::uint64_t seed = 1;
};

using SuiteFn = std::function<VerificationReport(const SuiteParams&)>;

// Suite names follow the results they verify (thm1.5, cor1.8, prop2.4,
// ..., zetamoeb); listed in presentation order.
const std::vector<std::pair<std::string, SuiteFn>>& suite_registry();

// Throws domain_error for an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

} // namespace ncfree
