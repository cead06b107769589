#pragma once

#include <string>
#include <vector>

#include "matdist/enumerate.hpp"

namespace matdist {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;  // counterexample with full inputs, or observed stats
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Each suite runs the module's invariants exhaustively at desk scale and
// reports one line per property, with replayable counterexamples on failure.
SuiteReport verify_ff(std::uint64_t budget = kDefaultBudget);
SuiteReport verify_simclass(std::uint64_t budget = kDefaultBudget);
SuiteReport verify_quadform(std::uint64_t budget = kDefaultBudget);
SuiteReport verify_gauss(std::uint64_t budget = kDefaultBudget);
SuiteReport verify_spheres(std::uint64_t budget = kDefaultBudget);
SuiteReport verify_distance(std::uint64_t budget = kDefaultBudget);

std::vector<SuiteReport> verify_suites(const std::string& which,
                                       std::uint64_t budget = kDefaultBudget);

}  // namespace matdist
