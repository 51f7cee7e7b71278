#pragma once

#include <diagdensity/arith.hpp>
#include <diagdensity/global.hpp>
#include <diagdensity/local.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace diagdensity::avg {

// Λ values up to a limit together with their running sum and the prime list,
// enough to answer psi(X; q, a) queries and walk progression jump points.
struct PsiTable {
    std::uint64_t limit = 0;
    std::vector<double> lambda;     // lambda[n] = Λ(n)
    std::vector<double> cumulative; // cumulative[n] = Σ_{j<=n} Λ(j)
    std::vector<std::uint64_t> primes;

    static PsiTable build(std::uint64_t limit);

    // Σ_{n < X, n ≡ a (mod q)} Λ(n); X strict, X <= limit required.
    double psi(double X, std::uint64_t q, std::int64_t a) const;
};

// ζ(2)ζ(3)/ζ(6) and friends.  The zeta values are summed directly with an
// Euler-Maclaurin tail so the constants themselves are testable.
struct LandauConstants {
    double zeta2 = 0.0;
    double zeta3 = 0.0;
    double zeta6 = 0.0;
    double C_L = 0.0;              // zeta2*zeta3/zeta6
    double c3 = 0.0;               // C_L * log 2
    double gamma = 0.0;            // Euler-Mascheroni
    double prime_correction = 0.0; // Σ_p log p/(p^2-p+1), truncated
    std::uint64_t correction_prime_bound = 0;

    static LandauConstants compute(std::uint64_t correction_prime_bound = 1'000'000);
};

// Σ_{1 <= m < Y} psi(mX; m, 1)
double lemma3_lhs(const PsiTable& table, double X, double Y);

// c3 * X * Y
double lemma3_main_term(const LandauConstants& constants, double X, double Y);

// E_m = ∫_{(m+1)^s}^{mX} psi(t; m, 1) / (t log^2 t) dt, evaluated exactly from
// the step structure of psi; empty intervals contribute 0.
double error_integral_term(const PsiTable& table, std::uint64_t m, double X, unsigned s);

// Σ_{1 <= m < Y} E_m
double lemma3_error_integral(const PsiTable& table, double X, double Y, unsigned s);

struct LandauComparison {
    std::uint64_t x = 0;
    double partial_sum = 0.0;         // Σ_{n <= x} 1/phi(n), exact summation
    double prediction = 0.0;          // C_L * (log x + gamma - prime_correction)
    double residual_vs_cl_logx = 0.0; // partial_sum - C_L * log x
};

LandauComparison landau_sum(std::uint64_t x, const LandauConstants& constants);

// Σ_{1 <= m < Y} Σ_{p ≡ 1 (mod m), (m+1)^s < p < mX} (log p - s log(m+1));
// every included term is positive.
double theorem1_double_sum(const PsiTable& table, double X, unsigned s, double Y);

// Σ_{1 <= m < Y} [ psi(mX; m, 1)(1 - s log(m+1)/log(mX)) - s log(m+1) E_m ].
// May be negative for tiny X.
double s1_partial_summation_bound(const PsiTable& table, double X, unsigned s, double Y);

struct AverageReport {
    std::uint64_t X = 0;
    unsigned s = 0;
    double average = 0.0;   // (1/X) Σ_{1 <= k < X} per-k lower bound
    double reference = 0.0; // X^(1/(s-1)) / log X
    std::vector<std::pair<std::uint64_t, double>> per_k;
};

// Averages the per-k global bound over 1 <= k < X.  Alpha mode ignores
// base_form; exact mode applies its coefficients at every k.
AverageReport average_log_inv_density(std::uint64_t X, unsigned s,
                                      const global::GlobalBoundConfig& config,
                                      const std::optional<local::FormSpec>& base_form = {},
                                      unsigned threads = 1);

// Window parameters for the averaged diagnostics.  When eta is set,
// Y = X^(1/(s-1+eta)); the window condition (Y+1)^s < XY is enforced.
struct AverageConfig {
    double X = 0.0;
    unsigned s = 3;
    std::optional<double> Y;
    std::optional<double> eta; // must lie in (0, 1/2)

    double resolve_Y() const;
    void validate() const;
};

} // namespace diagdensity::avg
