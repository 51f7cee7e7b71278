#pragma once

#include <diagdensity/rational.hpp>

#include <cstdint>
#include <vector>

namespace diagdensity::local {

inline constexpr std::uint64_t kDefaultValueSetCap = 1'000'000; // bit-vector length budget

// The diagonal form a1*x1^k + ... + as*xs^k.
struct FormSpec {
    std::vector<std::int64_t> coefficients; // a1..as, s >= 2, not all zero
    std::uint64_t exponent = 1;             // k >= 1

    FormSpec() = default;
    FormSpec(std::vector<std::int64_t> coeffs, std::uint64_t k);

    std::size_t arity() const { return coefficients.size(); }

    // s >= 2, k >= 1, some coefficient nonzero; throws invalid_argument.
    void validate() const;
};

// Per-prime local data: the attained residue count, the exact density and the
// coset-index upper bound on it.
struct LocalDensityRecord {
    std::uint64_t prime = 0;
    std::uint64_t coset_index = 0;   // m = (p-1)/gcd(k, p-1), divides p-1
    std::uint64_t value_set_size = 0;
    Rational density;                // value_set_size / p, exact
    double alpha = 0.0;              // ((m+1)^s)/p, uncapped; may exceed 1
    double alpha_capped = 0.0;       // min(alpha, 1)
};

// {x^k mod p : x in F_p}, ascending.  Cardinality is (p-1)/gcd(k,p-1) + 1.
std::vector<std::uint32_t> power_residues(std::uint64_t p, std::uint64_t k);

// Exact value set {F(z) mod p : z in F_p^s}, ascending, computed as the
// iterated sumset of the coefficient-scaled power residues.
std::vector<std::uint32_t> value_set(const FormSpec& form, std::uint64_t p,
                                     std::uint64_t cap = kDefaultValueSetCap);

// Same sumset enumeration over Z/m for any modulus m >= 2.  No primality
// assumption; used for squarefree cross-checks of multiplicativity.
std::vector<std::uint32_t> value_set_mod(const FormSpec& form, std::uint64_t modulus,
                                         std::uint64_t cap = kDefaultValueSetCap);
std::uint64_t value_set_size_mod(const FormSpec& form, std::uint64_t modulus,
                                 std::uint64_t cap = kDefaultValueSetCap);

// Sumset from precomputed power residues, for sweeps that reuse {x^k mod m}
// across many coefficient vectors.
std::vector<std::uint32_t> value_set_from_powers(const std::vector<std::int64_t>& coefficients,
                                                 const std::vector<std::uint32_t>& powers,
                                                 std::uint64_t modulus);
std::uint64_t value_set_size_from_powers(const std::vector<std::int64_t>& coefficients,
                                         const std::vector<std::uint32_t>& powers,
                                         std::uint64_t modulus);

LocalDensityRecord local_density(const FormSpec& form, std::uint64_t p,
                                 std::uint64_t cap = kDefaultValueSetCap);

// ((p-1)/gcd(k,p-1) + 1)^s / p, uncapped.  < 1 exactly when the shifted
// subgroup size stays below p^(1/s).
double alpha_bound(std::uint64_t k, std::uint64_t p, unsigned s);

} // namespace diagdensity::local
