#pragma once

#include <string>
#include <vector>

namespace qpd {

/// One verified identity: machine-readable row of a verification report.
struct CheckResult {
    std::string identity;
    bool pass = false;
    std::string residual; // first failing entry / counterexample, empty on pass
    std::string alpha;    // alpha vector used, when applicable
    double wall_time = 0.0;
};

using CheckList = std::vector<CheckResult>;

inline bool all_pass(const CheckList& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace qpd
