#pragma once

#include <diagdensity/arith.hpp>
#include <diagdensity/local.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace diagdensity::global {

enum class BoundMode { exact, alpha };

struct GlobalBoundConfig {
    double R = 4.0;              // divisor in the prime cutoff Z = k^(1+1/(s-1)) / R
    bool apply_cutoff = true;    // false: keep every p ≡ 1 (mod k) up to prime_limit
    std::uint64_t prime_limit = 1000;
    BoundMode mode = BoundMode::alpha;

    void validate() const; // R >= 1, prime_limit >= 2
};

// One rigorous bound on the global density for a single exponent.
struct GlobalBoundReport {
    std::uint64_t k = 0;
    unsigned s = 0;
    double log_inv_density_lower = 0.0; // lower bound on log(1/density)
    double density_upper = 1.0;         // exp(-log_inv_density_lower)
    std::vector<std::pair<std::uint64_t, double>> contributing; // (p, term), all terms > 0
    double conditional_reference = 0.0; // k^(1/(s-1))/log k, NaN when k < 2
    bool exact_zero = false;            // reserved; never set by these finite bounds
};

// Z = k^(1 + 1/(s-1)) / R
double prime_cutoff(std::uint64_t k, unsigned s, double R);

// k^(1/(s-1)) / log k, k >= 3.
double conditional_reference(std::uint64_t k, unsigned s);

// Coefficient-independent bound: sum of log(1/min(alpha,1)) over primes
// p ≡ 1 (mod k) with p < min(Z, prime_limit) (all p ≡ 1 (mod k) <= prime_limit
// when the cutoff is disabled).  Terms with alpha >= 1 vanish and are omitted.
GlobalBoundReport bound_alpha(std::uint64_t k, unsigned s, const GlobalBoundConfig& config,
                              const arith::PrimeTable& primes);
GlobalBoundReport bound_alpha(std::uint64_t k, unsigned s, const GlobalBoundConfig& config);

// Coefficient-aware bound: sum of log(1/density(p)) over all primes
// p <= prime_limit whose exact local density is < 1.
GlobalBoundReport bound_exact(const local::FormSpec& form, const GlobalBoundConfig& config,
                              const arith::PrimeTable& primes,
                              std::uint64_t value_set_cap = local::kDefaultValueSetCap);
GlobalBoundReport bound_exact(const local::FormSpec& form, const GlobalBoundConfig& config);

} // namespace diagdensity::global
