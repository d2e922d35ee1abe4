// Runs the ten acceptance criteria at full size and prints one line per criterion.
#include <chrono>
#include <cstdio>

#include "superpoint/checks.hpp"

int main() {
    using namespace superpoint::checks;
    SuiteOptions opt;
    opt.variety.parallel = true;
    const auto all = criteria();
    bool ok = true;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const CheckResult r = all[i](opt);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu [%s]: %s (%.1fs)\n", r.ok ? "PASS" : "FAIL", i + 1, r.name.c_str(), r.detail.c_str(), secs);
        std::fflush(stdout);
        ok = ok && r.ok;
    }
    return ok ? 0 : 1;
}
