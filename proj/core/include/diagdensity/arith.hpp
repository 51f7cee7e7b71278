#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace diagdensity::arith {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;   // hard memory budget
inline constexpr std::uint64_t kSegmentedThreshold = 10'000'000; // switch to segments above this
inline constexpr std::uint64_t kSpfTableCap = 10'000'000;        // SPF factoring below, trial division above

// Ascending list of all primes <= limit.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    // Sieve of Eratosthenes; segmented above kSegmentedThreshold.
    // Throws resource_error when limit exceeds cap.
    static PrimeTable build(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

    bool contains(std::uint64_t n) const;

    // Primes p with lo < p < hi, both strict.
    std::span<const std::uint64_t> range(double lo, double hi) const;
};

PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

// Primes p ≡ 1 (mod m) with lo < p < hi, both ends strict.
std::vector<std::uint64_t> primes_in_ap(std::uint64_t m, double lo, double hi);
std::vector<std::uint64_t> primes_in_ap(const PrimeTable& table, std::uint64_t m, double lo, double hi);

// Λ(n): log p when n = p^j, 0 otherwise.  Natural log.
double von_mangoldt(std::uint64_t n);

// |{1 <= j <= n : gcd(j, n) = 1}|
std::uint64_t euler_phi(std::uint64_t n);

// gcd with gcd(0,0) = 0; negative inputs take absolute values.
inline std::int64_t gcd(std::int64_t m, std::int64_t n) { return std::gcd(m, n); }

// Λ(n) for all n in [1, limit], backed by a smallest-prime-factor sieve.
struct LambdaTable {
    std::uint64_t limit = 0;
    std::vector<double> values; // values[n] = Λ(n), index 0 unused

    static LambdaTable build(std::uint64_t limit);

    double operator[](std::uint64_t n) const { return values[n]; }
};

// Smallest prime factor for every n in [2, limit]; shared by LambdaTable and
// the totient sieve.  limit must stay below kSpfTableCap.
std::vector<std::uint32_t> smallest_prime_factor_table(std::uint64_t limit);

// φ(n) for all n in [1, limit] via linear sieve.
std::vector<std::uint64_t> euler_phi_table(std::uint64_t limit);

bool is_prime(std::uint64_t n);

// x^e mod m, m >= 1.
std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m);

} // namespace diagdensity::arith
