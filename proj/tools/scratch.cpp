// Throwaway probe used during development; not installed.
#include <chrono>
#include <cstdio>

#include "evl/oracle_checks.hpp"

using namespace evl;

static void report(const char* name, const MismatchStats& s, double secs) {
    std::printf("%-12s checked=%-8ld mismatched=%-6ld fat=%-6ld degen=%-8ld bounds=%ld (%.2fs)\n",
                name, s.checked, s.mismatched, s.fat_probes, s.degenerate_probes,
                s.bound_violations, secs);
    if (!s.first_fat.empty()) std::printf("  FIRST FAT: %s\n", s.first_fat.c_str());
}

int main() {
    auto timed = [](auto fn) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = fn();
        auto t1 = std::chrono::steady_clock::now();
        return std::pair(r, std::chrono::duration<double>(t1 - t0).count());
    };

    { auto [r, t] = timed([] { return check_trichotomy(3); }); report("trichotomy", r, t); }
    { auto [r, t] = timed([] { return check_normalize(4); }); report("normalize", r, t); }
    { auto [r, t] = timed([] { return check_complement(4); }); report("complement", r, t); }
    { auto [r, t] = timed([] { return check_intersect(4); }); report("intersect", r, t); }
    { auto [r, t] = timed([] { return check_d_maps(4); }); report("d_maps", r, t); }
    { auto [r, t] = timed([] { return check_span(4); }); report("span", r, t); }
    { auto [r, t] = timed([] { return check_i_maps(4); }); report("i_maps", r, t); }
    { auto [r, t] = timed([] { return check_evaluator(6, 200, 20260810); }); report("evaluator", r, t); }
    return 0;
}
