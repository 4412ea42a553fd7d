#pragma once

#include "steenrod/cohomology.hpp"
#include "steenrod/reduced_powers.hpp"
#include "steenrod/spaces.hpp"

namespace steenrod {

struct CaseResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool ok() const {
        for (const CaseResult& c : cases)
            if (!c.pass) return false;
        return true;
    }
    int failed() const {
        int n = 0;
        for (const CaseResult& c : cases) n += !c.pass;
        return n;
    }
    std::string to_json() const;
    std::string to_text() const;
};

struct SuiteParams {
    int max_dim = -1;                // -1: suite default
    int max_n = -1;                  // index budget (n, i, or i+j); -1: suite default
    int p = -1;                      // product arity filter; -1: all defaults
    uint64_t seed = 1;               // randomized-cochain cases
    bool ring_z2 = false;            // run ring-parametric suites over Z2 instead of Z
    std::vector<std::string> spaces; // corpus override (builtin names or paths)
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

} // namespace steenrod
