#pragma once

#include "dhm/adic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dhm {

struct SuiteOptions {
    // Corrupt one brute-force count in the first table before checking.
    // Exists for fault-injection tests of the reporting path.
    bool inject_fault = false;
};

struct IdentityFailure {
    std::uint64_t q = 0;
    std::string identity;
    std::string detail;
};

struct SuiteReport {
    std::uint64_t q_max = 0;
    std::vector<std::uint64_t> primes;
    std::size_t checks = 0;
    std::vector<IdentityFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Runs every exact identity suite for every prime q = 5 (mod 8) up to q_max:
// closed-form vs. brute-force cyclotomic counts, the Gauss-sum square, the
// period products (all shifts), the scaled product families, the difference
// squares, and the evaluation congruence for every condition-matched triple.
SuiteReport run_identity_suites(std::uint64_t q_max, const SuiteOptions& options = {});

}  // namespace dhm
