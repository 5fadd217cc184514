// Verification suite runner: one line per criterion, nonzero exit on failure.
#include <cstdio>
#include <cstdlib>

#include "summa/suite.hpp"

int main() {
    summa::SuiteConfig cfg;
    if (const char* env = std::getenv("SUMMA_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);
    const summa::SuiteReport rep = summa::run_suite(cfg);
    bool ok = true;
    for (const auto& c : rep.criteria) {
        const bool line_ok = c.pass && c.time_ok;
        ok = ok && line_ok;
        std::printf("%-4s %-32s %7.2fs%s  %s\n", line_ok ? "PASS" : "FAIL", c.name.c_str(),
                    c.seconds, c.time_ok ? "" : " (over time budget)", c.detail.dump().c_str());
    }
    std::printf("%s (seed %llu)\n", ok ? "all criteria passed" : "FAILURES present",
                static_cast<unsigned long long>(cfg.seed));
    return ok ? 0 : 1;
}
