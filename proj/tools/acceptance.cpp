// Runs every acceptance suite; one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <exception>

#include "suites.hpp"

int main()
{
    using namespace numfun::suites;
    Options opt;
    int failed = 0;
    for (const auto& s : registry()) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = s.run(opt);
        } catch (const std::exception& e) {
            r.checks.push_back({"suite raised", false, e.what()});
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (const auto& c : r.checks)
            std::printf("    [%s] %s: %s\n", c.passed ? "ok" : "FAILED", c.name.c_str(), c.detail.c_str());
        std::printf("%s %2d %s (%.1fs)\n", r.passed() ? "PASS" : "FAIL", s.criterion, s.name.c_str(), secs);
        std::fflush(stdout);
        failed += !r.passed();
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(registry().size()) - failed, registry().size());
    return failed ? 1 : 0;
}
