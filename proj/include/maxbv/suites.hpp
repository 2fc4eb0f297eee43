#pragma once

// Seeded verification suites, one per checked property. Shared by
// `maxbv verify` and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

namespace maxbv {

struct SuiteConfig {
    std::uint64_t seed = 42;
    // A tenth of the cases, for smoke runs.
    bool quick = false;
    // Corrupts the values compared by the exact-equality suites (square,
    // sandwich) so their failure path can be exercised.
    bool inject_fault = false;
};

struct SuiteResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SuiteInfo {
    std::string id;
    std::string title;
};

// In acceptance order.
const std::vector<SuiteInfo>& suite_list();

// Throws std::invalid_argument for an unknown id.
SuiteResult run_suite(const std::string& id, const SuiteConfig& config);

}  // namespace maxbv
