// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure.

#include <cstdio>

#include "petit/acceptance.hpp"

int main() {
    auto results = petit::acceptance::run_all();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s  %2d  %-38s  %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures, results.size());
    return failures == 0 ? 0 : 1;
}
