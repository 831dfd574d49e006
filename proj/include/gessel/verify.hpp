#pragma once

#include <string>
#include <vector>

namespace gessel {

struct CheckResult {
    enum class Status { Pass, Fail, KnownMismatch };
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

// Run the full identity battery at truncation N: ring and series axioms on
// random inputs, factorization properties, oracle agreement for every walk
// pipeline, the kernel cross-checks, and the two documented closed-form
// mismatches (reported as known mismatches, never as failures).
std::vector<CheckResult> run_verification(int N, unsigned seed = 12345);

// True iff no entry failed (known mismatches are expected and do not fail).
bool all_passed(const std::vector<CheckResult>& results);

} // namespace gessel
