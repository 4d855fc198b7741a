// Acceptance suite: one line per criterion, nonzero exit on any hard failure.
#include <chrono>
#include <cstdio>
#include <string>

#include "irrec/verify.hpp"

int main(int argc, char** argv) {
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    irrec::verify::Options opt;
    auto t_all = std::chrono::steady_clock::now();
    auto results = irrec::verify::run_acceptance(opt);
    int failures = 0;
    for (auto& [num, report] : results) {
        auto t0 = std::chrono::steady_clock::now();
        (void)t0;
        int f = report.hard_failures();
        failures += f;
        std::printf("%-4s criterion %2d (%s): %d checks, %d failed\n", f == 0 ? "PASS" : "FAIL", num,
                    report.suite.c_str(), static_cast<int>(report.checks.size()), f);
        if (f > 0 || verbose) {
            for (const auto& c : report.checks) {
                if (c.status == "pass" && !verbose) continue;
                std::printf("     [%s] %s: %s  (%s vs %s)\n", c.status.c_str(), c.id.c_str(),
                            c.description.c_str(), c.lhs.c_str(), c.rhs.c_str());
            }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_all).count();
    std::printf("%s: %d hard failures (%.1fs)\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures, secs);
    return failures == 0 ? 0 : 1;
}
