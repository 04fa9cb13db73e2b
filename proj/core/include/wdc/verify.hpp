#pragma once

#include <string>
#include <vector>

namespace wdc::verify {

// The acceptance suite: every headline statement the library implements,
// rechecked end to end against the brute-force oracles at desk scale.
struct Options {
    bool slow = false; // include the n=5 cube in the closure comparison sweep
    bool perf = true;  // run the timing criterion
    int threads = 0;   // worker threads for the sweeps; 0 = hardware
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(const Options& options = {});
bool all_passed(const std::vector<CriterionResult>& results);

} // namespace wdc::verify
