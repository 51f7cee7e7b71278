#include <diagdensity/arith.hpp>
#include <diagdensity/errors.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diagdensity::arith {

namespace {

// Flat sieve for small limits.
std::vector<std::uint64_t> simple_sieve(std::uint64_t limit)
{
    std::vector<std::uint8_t> composite(limit + 1, 0);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = 1;
    }
    return primes;
}

// Segmented sieve for large limits; segments sized to stay cache resident.
std::vector<std::uint64_t> segmented_sieve(std::uint64_t limit)
{
    const std::uint64_t segment = 1u << 20;
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<std::uint64_t> small = simple_sieve(root);

    std::vector<std::uint64_t> primes;
    primes.reserve(static_cast<std::size_t>(
        static_cast<double>(limit) / std::log(static_cast<double>(limit)) * 1.15));

    std::vector<std::uint8_t> sieve(segment);
    for (std::uint64_t low = 2; low <= limit; low += segment) {
        std::uint64_t high = std::min(low + segment - 1, limit);
        std::fill(sieve.begin(), sieve.end(), 0);
        for (std::uint64_t p : small) {
            if (p * p > high) break;
            std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
            for (std::uint64_t j = start; j <= high; j += p)
                sieve[j - low] = 1;
        }
        for (std::uint64_t n = low; n <= high; ++n)
            if (!sieve[n - low]) primes.push_back(n);
    }
    return primes;
}

} // namespace

PrimeTable PrimeTable::build(std::uint64_t limit, std::uint64_t cap)
{
    if (limit < 2)
        throw std::invalid_argument("sieve_primes: limit must be >= 2");
    if (limit > cap)
        throw resource_error("sieve_primes: limit " + std::to_string(limit) +
                             " exceeds memory budget cap " + std::to_string(cap));
    PrimeTable t;
    t.limit = limit;
    t.primes = limit <= kSegmentedThreshold ? simple_sieve(limit) : segmented_sieve(limit);
    return t;
}

PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t cap)
{
    return PrimeTable::build(limit, cap);
}

bool PrimeTable::contains(std::uint64_t n) const
{
    return std::binary_search(primes.begin(), primes.end(), n);
}

std::span<const std::uint64_t> PrimeTable::range(double lo, double hi) const
{
    auto first = std::upper_bound(primes.begin(), primes.end(), lo,
                                  [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
    auto last = std::lower_bound(first, primes.end(), hi,
                                 [](std::uint64_t p, double v) { return static_cast<double>(p) < v; });
    return {first, last};
}

std::vector<std::uint64_t> primes_in_ap(const PrimeTable& table, std::uint64_t m, double lo, double hi)
{
    if (m < 1)
        throw std::invalid_argument("primes_in_ap: modulus must be >= 1");
    if (!(lo < hi))
        throw std::invalid_argument("primes_in_ap: need lo < hi");
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : table.range(lo, hi))
        if ((p - 1) % m == 0) out.push_back(p);
    return out;
}

std::vector<std::uint64_t> primes_in_ap(std::uint64_t m, double lo, double hi)
{
    if (!(lo < hi))
        throw std::invalid_argument("primes_in_ap: need lo < hi");
    if (hi <= 2.0) return {};
    // largest integer strictly below hi
    auto limit = static_cast<std::uint64_t>(std::ceil(hi)) - 1;
    if (limit < 2) return {};
    return primes_in_ap(PrimeTable::build(limit), m, lo, hi);
}

double von_mangoldt(std::uint64_t n)
{
    if (n <= 1) return 0.0;
    // find the smallest prime factor by trial division
    std::uint64_t p = 0;
    if (n % 2 == 0) {
        p = 2;
    } else {
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) { p = d; break; }
        }
        if (p == 0) return std::log(static_cast<double>(n)); // n prime
    }
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("euler_phi: n must be >= 1");
    std::uint64_t result = n;
    std::uint64_t rest = n;
    for (std::uint64_t d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
        if (rest % d != 0) continue;
        result -= result / d;
        while (rest % d == 0) rest /= d;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

std::vector<std::uint32_t> smallest_prime_factor_table(std::uint64_t limit)
{
    if (limit > kSpfTableCap)
        throw resource_error("smallest_prime_factor_table: limit " + std::to_string(limit) +
                             " exceeds SPF table cap " + std::to_string(kSpfTableCap));
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    return spf;
}

LambdaTable LambdaTable::build(std::uint64_t limit)
{
    if (limit < 1)
        throw std::invalid_argument("LambdaTable: limit must be >= 1");
    auto spf = smallest_prime_factor_table(limit);
    LambdaTable t;
    t.limit = limit;
    t.values.assign(limit + 1, 0.0);
    for (std::uint64_t n = 2; n <= limit; ++n) {
        std::uint64_t p = spf[n];
        std::uint64_t rest = n;
        while (rest % p == 0) rest /= p;
        if (rest == 1) t.values[n] = std::log(static_cast<double>(p));
    }
    return t;
}

std::vector<std::uint64_t> euler_phi_table(std::uint64_t limit)
{
    auto spf = smallest_prime_factor_table(limit);
    std::vector<std::uint64_t> phi(limit + 1, 0);
    if (limit >= 1) phi[1] = 1;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        std::uint64_t p = spf[n];
        std::uint64_t m = n / p;
        // phi is multiplicative; p | m decides the prime-power case
        phi[n] = m % p == 0 ? phi[m] * p : phi[m] * (p - 1);
    }
    return phi;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m)
{
    if (m == 1) return 0;
    unsigned __int128 result = 1;
    unsigned __int128 base = x % m;
    while (e > 0) {
        if (e & 1) result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

} // namespace diagdensity::arith
