#include <diagdensity/global.hpp>

#include <diagdensity/parallel.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace diagdensity::global {

namespace {

// (m+1)^s < p checked in integers; (m+1)^s never equals a prime for s >= 2.
bool shifted_power_below(std::uint64_t m_plus_1, unsigned s, std::uint64_t p)
{
    unsigned __int128 v = 1;
    for (unsigned i = 0; i < s; ++i) {
        v *= m_plus_1;
        if (v >= p) return false;
    }
    return true;
}

double reference_or_nan(std::uint64_t k, unsigned s)
{
    if (k < 2) return std::numeric_limits<double>::quiet_NaN();
    return std::pow(static_cast<double>(k), 1.0 / static_cast<double>(s - 1)) /
           std::log(static_cast<double>(k));
}

GlobalBoundReport finalize(std::uint64_t k, unsigned s,
                           std::vector<std::pair<std::uint64_t, double>> contributing)
{
    GlobalBoundReport rep;
    rep.k = k;
    rep.s = s;
    rep.contributing = std::move(contributing);
    KahanSum sum; // contributions arrive in ascending prime order
    for (const auto& [p, term] : rep.contributing) sum.add(term);
    rep.log_inv_density_lower = sum.value();
    rep.density_upper = std::exp(-rep.log_inv_density_lower);
    rep.conditional_reference = reference_or_nan(k, s);
    return rep;
}

} // namespace

void GlobalBoundConfig::validate() const
{
    if (R < 1.0)
        throw std::invalid_argument("GlobalBoundConfig: R must be >= 1");
    if (prime_limit < 2)
        throw std::invalid_argument("GlobalBoundConfig: prime_limit must be >= 2");
}

double prime_cutoff(std::uint64_t k, unsigned s, double R)
{
    if (k < 1 || s < 2 || R < 1.0)
        throw std::invalid_argument("prime_cutoff: need k >= 1, s >= 2, R >= 1");
    double exponent = 1.0 + 1.0 / static_cast<double>(s - 1);
    return std::pow(static_cast<double>(k), exponent) / R;
}

double conditional_reference(std::uint64_t k, unsigned s)
{
    if (k < 3)
        throw std::invalid_argument("conditional_reference: k must be >= 3");
    if (s < 2)
        throw std::invalid_argument("conditional_reference: s must be >= 2");
    return reference_or_nan(k, s);
}

GlobalBoundReport bound_alpha(std::uint64_t k, unsigned s, const GlobalBoundConfig& config,
                              const arith::PrimeTable& primes)
{
    config.validate();
    if (k < 1 || s < 2)
        throw std::invalid_argument("bound_alpha: need k >= 1 and s >= 2");

    double upper = static_cast<double>(config.prime_limit) + 0.5; // p <= prime_limit
    if (config.apply_cutoff)
        upper = std::min(upper, prime_cutoff(k, s, config.R)); // strict p < Z
    if (static_cast<double>(primes.limit) + 1.0 < upper)
        throw std::invalid_argument("bound_alpha: prime table limit below requested range");

    std::vector<std::pair<std::uint64_t, double>> contributing;
    for (std::uint64_t p : primes.range(1.0, upper)) {
        if ((p - 1) % k != 0) continue;
        std::uint64_t m = (p - 1) / k; // p ≡ 1 (mod k) makes gcd(k, p-1) = k
        if (!shifted_power_below(m + 1, s, p)) continue; // alpha >= 1 contributes nothing
        double term = std::log(static_cast<double>(p)) -
                      static_cast<double>(s) * std::log(static_cast<double>(m + 1));
        contributing.emplace_back(p, term);
    }
    return finalize(k, s, std::move(contributing));
}

GlobalBoundReport bound_alpha(std::uint64_t k, unsigned s, const GlobalBoundConfig& config)
{
    config.validate();
    return bound_alpha(k, s, config, arith::PrimeTable::build(config.prime_limit));
}

GlobalBoundReport bound_exact(const local::FormSpec& form, const GlobalBoundConfig& config,
                              const arith::PrimeTable& primes, std::uint64_t value_set_cap)
{
    config.validate();
    form.validate();
    if (primes.limit < config.prime_limit)
        throw std::invalid_argument("bound_exact: prime table limit below prime_limit");

    std::vector<std::pair<std::uint64_t, double>> contributing;
    for (std::uint64_t p : primes.primes) {
        if (p > config.prime_limit) break;
        auto rec = local::local_density(form, p, value_set_cap);
        if (rec.value_set_size >= p) continue; // density 1, no information
        double term = std::log(static_cast<double>(p)) -
                      std::log(static_cast<double>(rec.value_set_size));
        contributing.emplace_back(p, term);
    }
    return finalize(form.exponent, static_cast<unsigned>(form.arity()), std::move(contributing));
}

GlobalBoundReport bound_exact(const local::FormSpec& form, const GlobalBoundConfig& config)
{
    config.validate();
    return bound_exact(form, config, arith::PrimeTable::build(config.prime_limit));
}

} // namespace diagdensity::global
