// Acceptance suite runner: one pass/fail line per criterion, nonzero exit
// on any failure.  `wdc verify` drives the same checks from the CLI.

#include <cstdio>
#include <cstring>

#include "wdc/verify.hpp"

int main(int argc, char** argv)
{
    wdc::verify::Options options;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0)
            options.slow = true;
        else if (std::strcmp(argv[i], "--no-perf") == 0)
            options.perf = false;
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            options.threads = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--slow] [--no-perf] [--threads N]\n", argv[0]);
            return 2;
        }
    }

    const auto results = wdc::verify::run_acceptance(options);
    for (const auto& r : results)
        std::printf("[%s] %2d: %s — %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds);
    return wdc::verify::all_passed(results) ? 0 : 1;
}
