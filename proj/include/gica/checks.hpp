#pragma once

#include "gica/scenario.hpp"

#include <string>
#include <vector>

namespace gica {

struct CheckOutcome {
    std::string name;
    bool pass = false;
    long cases = 0;
    std::string detail;  // witness or coverage note, empty when clean
};

struct ChecksReport {
    std::vector<CheckOutcome> outcomes;

    bool all_pass() const;
    /// One line per check: "PASS|FAIL <name> cases=<n> [<detail>]".
    std::string to_text() const;
};

/// Execute the checks requested by the scenario, in the order listed.
/// Infrastructure problems (truncation overflow, inconsistent setup)
/// propagate as exceptions; failed checks come back in the report.
ChecksReport run_checks(const Scenario& scenario);

}  // namespace gica
