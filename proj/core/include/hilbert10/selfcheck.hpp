#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace h10 {

struct SuiteResult {
    std::string name;
    unsigned checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Names of the registered property suites, in the order "all" runs them.
std::vector<std::string> suite_names();

// Seed for the randomized checks: the decimal value of HILBERT10_SEED
// when that variable is set, a fixed default otherwise.
std::uint64_t selfcheck_seed();

// Run the named suite ("all" fans out to every suite).  Unknown names
// signal a domain error.
std::vector<SuiteResult> run_suites(const std::string& name);

}  // namespace h10
