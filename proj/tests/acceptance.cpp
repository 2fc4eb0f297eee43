// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
//   acceptance [--quick] [--seed N] [--only ID]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "maxbv/suites.hpp"

int main(int argc, char** argv) {
    maxbv::SuiteConfig config;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--quick") config.quick = true;
        else if (arg == "--seed" && i + 1 < argc) config.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (arg == "--only" && i + 1 < argc) only = argv[++i];
        else {
            std::fprintf(stderr, "usage: %s [--quick] [--seed N] [--only ID]\n", argv[0]);
            return 2;
        }
    }
    int failed = 0;
    int index = 0;
    for (const auto& suite : maxbv::suite_list()) {
        ++index;
        if (!only.empty() && suite.id != only) continue;
        const maxbv::SuiteResult r = maxbv::run_suite(suite.id, config);
        if (!r.passed) ++failed;
        std::printf("%s  %2d %-10s %s: %s (%.1f s)\n", r.passed ? "PASS" : "FAIL", index, r.id.c_str(),
                    r.title.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
    }
    std::printf("%s\n", failed == 0 ? "all criteria passed" : (std::to_string(failed) + " criteria failed").c_str());
    return failed == 0 ? 0 : 1;
}
