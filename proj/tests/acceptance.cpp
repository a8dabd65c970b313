// Acceptance gate: runs every criterion in order, printing one PASS or
// FAIL line per criterion as it completes. Exit code is the number of
// failing criteria. Pass --quick for the reduced sample sizes.

#include <cstring>
#include <iostream>

#include "diskpaths/verify.hpp"

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
    }
    auto results = diskpaths::run_acceptance(quick, &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    if (failed == 0)
        std::cout << "all " << results.size() << " criteria passed\n";
    else
        std::cout << failed << " of " << results.size() << " criteria failing\n";
    return failed;
}
