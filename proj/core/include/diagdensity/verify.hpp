#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diagdensity::verify {

struct PropertyResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    std::string detail; // first counterexample, empty when clean
};

struct Options {
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

// Runs every library invariant check.  Results are deterministic for a fixed
// seed: randomized cases are drawn single-threaded up front and all parallel
// evaluation reduces in fixed order.
std::vector<PropertyResult> run_all(const Options& options);

} // namespace diagdensity::verify
