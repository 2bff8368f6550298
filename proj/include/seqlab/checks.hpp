#pragma once

// Invariant suites run by `seqlab check`.

#include <functional>
#include <string>
#include <vector>

namespace seqlab {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct CheckSuite {
    std::string name;
    bool extended = false;  // only run with --extended
    std::function<CheckResult()> run;
};

const std::vector<CheckSuite>& check_suites();

/// Runs the standard suites, plus the extended ones if asked. A suite that
/// throws is reported as failed with the exception text.
std::vector<CheckResult> run_checks(bool extended, const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace seqlab
