#pragma once

#include <functional>
#include <string>
#include <vector>

namespace affq {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // failure description or summary counts
    double millis = 0;
};

struct CheckOptions {
    std::string filter;   // substring match on the check name; empty = all
    int max_length = -1;  // overrides the sweep depth of the invariant suites
};

// Replays the worked examples and the property suites; each acceptance
// criterion is one named check.  Deterministic order.
std::vector<CheckResult> run_paper_checks(const CheckOptions& opts = {});

}  // namespace affq
