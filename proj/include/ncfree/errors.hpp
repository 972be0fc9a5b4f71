#pragma once

#include <stdexcept>
#include <string>

namespace ncfree {

// Violation of an operation's domain (bad partition literal, mismatched
// caps, ground set above the configured limit, ...).  The CLI maps this
// to exit code 2.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request for a value the exact engine deliberately does not represent
// (e.g. odd quarter-circular moments, which are not rational).
class unsupported_value_error : public domain_error {
public:
    explicit unsupported_value_error(const std::string& what) : domain_error(what) {}
};

} // namespace ncfree
