#pragma once

#include <string>
#include <vector>

namespace enttopo {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Result of one verification suite: named checks plus the first few concrete
/// violations when something fails.
struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<std::string> violations; // capped at 10

    bool passed() const;
    std::string to_json() const;
};

std::vector<std::string> verify_suite_names();

/// Run one of: ghz-footprint, iec-identity, ade-bounds, kuniform, appendix.
SuiteReport run_verify_suite(const std::string& name);

} // namespace enttopo
