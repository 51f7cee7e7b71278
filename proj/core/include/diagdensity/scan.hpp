#pragma once

#include <diagdensity/local.hpp>
#include <diagdensity/rational.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace diagdensity::scan {

inline constexpr std::uint64_t kDefaultWorkBudget = 1'000'000'000;    // form evaluations
inline constexpr std::uint64_t kDefaultModulusBudget = 1'000'000'000; // product of sieve primes

struct ScanConfig {
    std::uint64_t N = 0;                     // window [1, N]
    std::uint64_t B = 0;                     // coordinate box |x_i| <= B
    std::vector<std::uint64_t> sieve_primes; // distinct primes for the residue sieve
    std::uint64_t work_budget = kDefaultWorkBudget;
    std::uint64_t modulus_budget = kDefaultModulusBudget;
    std::uint64_t value_set_cap = local::kDefaultValueSetCap;
    unsigned threads = 1;

    void validate() const;
};

// Two-sided finite-window density measurement.  Both numbers bound the
// density of the window [1, N] only; neither is a statement about the
// limsup density itself.
struct ScanReport {
    std::vector<std::uint64_t> represented; // ascending n in [1, N] hit by the box
    double lower_density = 0.0;             // |represented| / N
    std::uint64_t sieve_admissible_count = 0;
    Rational sieve_upper_density{1, 1};
    std::map<std::uint64_t, std::vector<std::int64_t>> witnesses; // n -> one solution
    bool window_aligned = false; // N is a multiple of the sieve modulus
    bool consistent = true;      // represented ⊆ admissible (theorem; false = bug)
    bool has_box = false;
    bool has_sieve = false;
};

// Exact integer F(x); throws overflow_error naming the offending term when a
// term or the running sum leaves the signed 128-bit range.
__int128 evaluate_form(const local::FormSpec& form, std::span<const std::int64_t> x);

// Lower-bound side: represented = {F(x) : x in [-B, B]^s} ∩ [1, N] with one
// witness per element.  Splits meet-in-the-middle for s >= 4.
ScanReport boxed_scan(const local::FormSpec& form, const ScanConfig& config);

// Upper-bound side: counts n in [1, N] passing every local residue test.
ScanReport sieve_upper(const local::FormSpec& form, const ScanConfig& config);

// Both sides plus the consistency and window-alignment flags.
ScanReport density_report(const local::FormSpec& form, const ScanConfig& config);

} // namespace diagdensity::scan
