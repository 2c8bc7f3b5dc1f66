#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pi1::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// The acceptance property suites. Each returns a single pass/fail result
// with a short account of what was checked; seeded suites are deterministic
// in the seed.
CheckResult catalog_pi1_values();
CheckResult ses_exactness(std::uint64_t seed);
CheckResult resolution_independence();
CheckResult duality_fuzz(std::uint64_t seed);
CheckResult fundamental_diagrams(std::uint64_t seed);
CheckResult gamma_cohomology(std::uint64_t seed);
CheckResult integer_oracles(std::uint64_t seed);
CheckResult functoriality(std::uint64_t seed);

std::vector<CheckResult> run_all(std::uint64_t seed);

}  // namespace pi1::verify
