#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symdiff {

struct SuiteResult {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
    std::string detail;  // first failing check, empty when clean
};

// Registered suite names in execution order.
const std::vector<std::string>& suite_names();

// Runs one named property suite with a deterministic per-suite stream derived
// from seed. Throws validation_error for unknown names.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int workers);

// Runs the given suites ("all" expands to every registered suite).
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, std::uint64_t seed,
                                    int workers);

}  // namespace symdiff
