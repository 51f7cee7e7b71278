#include <diagdensity/avg.hpp>

#include <diagdensity/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diagdensity::avg {

namespace {

// largest integer n with n < X
std::int64_t last_below(double X)
{
    return static_cast<std::int64_t>(std::ceil(X)) - 1;
}

// ζ(s) by direct series over n <= N plus the Euler-Maclaurin tail
//   N^(1-s)/(s-1) - N^(-s)/2 + s N^(-s-1)/12 - s(s+1)(s+2) N^(-s-3)/720,
// good to well below 1e-12 for N = 1000 and s >= 2.
double zeta(double s)
{
    const int N = 1000;
    KahanSum sum;
    for (int n = 1; n <= N; ++n)
        sum.add(std::pow(static_cast<double>(n), -s));
    double Nd = N;
    double tail = std::pow(Nd, 1.0 - s) / (s - 1.0)
                - 0.5 * std::pow(Nd, -s)
                + s / 12.0 * std::pow(Nd, -s - 1.0)
                - s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(Nd, -s - 3.0);
    return sum.value() + tail;
}

void check_window(const PsiTable& table, double upper, const char* who)
{
    if (upper > static_cast<double>(table.limit))
        throw std::out_of_range(std::string(who) + ": query at " + std::to_string(upper) +
                                " exceeds table limit " + std::to_string(table.limit));
}

} // namespace

PsiTable PsiTable::build(std::uint64_t limit)
{
    auto lambda = arith::LambdaTable::build(limit);
    PsiTable t;
    t.limit = limit;
    t.lambda = std::move(lambda.values);
    t.cumulative.assign(limit + 1, 0.0);
    KahanSum running;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        running.add(t.lambda[n]);
        t.cumulative[n] = running.value();
    }
    if (limit >= 2)
        t.primes = arith::PrimeTable::build(limit).primes;
    return t;
}

double PsiTable::psi(double X, std::uint64_t q, std::int64_t a) const
{
    if (q < 1)
        throw std::invalid_argument("psi: modulus must be >= 1");
    if (X > static_cast<double>(limit))
        throw std::out_of_range("psi: X = " + std::to_string(X) + " exceeds table limit " +
                                std::to_string(limit));
    std::int64_t hi = last_below(X);
    if (hi < 1) return 0.0;
    if (hi > static_cast<std::int64_t>(limit))
        throw std::out_of_range("psi: X exceeds table limit");
    if (q == 1) return cumulative[static_cast<std::uint64_t>(hi)];

    std::int64_t r = a % static_cast<std::int64_t>(q);
    if (r < 0) r += static_cast<std::int64_t>(q);
    std::uint64_t start = r == 0 ? q : static_cast<std::uint64_t>(r);
    KahanSum sum;
    for (std::uint64_t n = start; n <= static_cast<std::uint64_t>(hi); n += q)
        sum.add(lambda[n]);
    return sum.value();
}

LandauConstants LandauConstants::compute(std::uint64_t correction_prime_bound)
{
    LandauConstants c;
    c.zeta2 = zeta(2.0);
    c.zeta3 = zeta(3.0);
    c.zeta6 = zeta(6.0);
    c.C_L = c.zeta2 * c.zeta3 / c.zeta6;
    c.c3 = c.C_L * std::log(2.0);
    c.gamma = 0.57721566490153286;
    c.correction_prime_bound = correction_prime_bound;

    auto primes = arith::PrimeTable::build(correction_prime_bound);
    KahanSum corr;
    for (std::uint64_t p : primes.primes) {
        double pd = static_cast<double>(p);
        corr.add(std::log(pd) / (pd * pd - pd + 1.0));
    }
    c.prime_correction = corr.value();
    return c;
}

double lemma3_lhs(const PsiTable& table, double X, double Y)
{
    if (Y > std::sqrt(X))
        throw std::invalid_argument("lemma3_lhs: requires Y <= sqrt(X)");
    KahanSum sum;
    for (std::uint64_t m = 1; static_cast<double>(m) < Y; ++m) {
        double upper = static_cast<double>(m) * X;
        check_window(table, upper, "lemma3_lhs");
        sum.add(table.psi(upper, m, 1));
    }
    return sum.value();
}

double lemma3_main_term(const LandauConstants& constants, double X, double Y)
{
    return constants.c3 * X * Y;
}

double error_integral_term(const PsiTable& table, std::uint64_t m, double X, unsigned s)
{
    if (s < 2)
        throw std::invalid_argument("error_integral_term: s must be >= 2");
    double B = static_cast<double>(m) * X;
    double A = std::pow(static_cast<double>(m + 1), static_cast<double>(s));
    if (A >= B) return 0.0; // empty interval
    check_window(table, B, "error_integral_term");

    // psi(t; m, 1) is a step function jumping by Λ(n) at each n ≡ 1 (mod m);
    // with antiderivative -1/log t each jump below B contributes
    // Λ(n) (1/log max(A, n) - 1/log B) over the sub-interval where n < t.
    double inv_logB = 1.0 / std::log(B);
    double inv_logA = 1.0 / std::log(A);
    std::int64_t hi = last_below(B);

    KahanSum sum;
    std::uint64_t start = m == 1 ? 1 : m + 1; // n ≡ 1 (mod m), n >= 1
    for (std::uint64_t n = start; n <= static_cast<std::uint64_t>(hi); n += m) {
        double ln = table.lambda[n];
        if (ln == 0.0) continue;
        double inv_lo = static_cast<double>(n) <= A
                            ? inv_logA
                            : 1.0 / std::log(static_cast<double>(n));
        sum.add(ln * (inv_lo - inv_logB));
    }
    return sum.value();
}

double lemma3_error_integral(const PsiTable& table, double X, double Y, unsigned s)
{
    KahanSum sum;
    for (std::uint64_t m = 1; static_cast<double>(m) < Y; ++m)
        sum.add(error_integral_term(table, m, X, s));
    return sum.value();
}

LandauComparison landau_sum(std::uint64_t x, const LandauConstants& constants)
{
    if (x < 1)
        throw std::invalid_argument("landau_sum: x must be >= 1");
    auto phi = arith::euler_phi_table(x);
    KahanSum sum;
    for (std::uint64_t n = 1; n <= x; ++n) // n <= x inclusive here
        sum.add(1.0 / static_cast<double>(phi[n]));

    LandauComparison cmp;
    cmp.x = x;
    cmp.partial_sum = sum.value();
    double logx = std::log(static_cast<double>(x));
    cmp.prediction = constants.C_L * (logx + constants.gamma - constants.prime_correction);
    cmp.residual_vs_cl_logx = cmp.partial_sum - constants.C_L * logx;
    return cmp;
}

double theorem1_double_sum(const PsiTable& table, double X, unsigned s, double Y)
{
    if (s < 2)
        throw std::invalid_argument("theorem1_double_sum: s must be >= 2");
    KahanSum sum;
    for (std::uint64_t m = 1; static_cast<double>(m) < Y; ++m) {
        double B = static_cast<double>(m) * X;
        double A = std::pow(static_cast<double>(m + 1), static_cast<double>(s));
        if (A >= B) continue;
        check_window(table, B, "theorem1_double_sum");
        double s_log_m1 = static_cast<double>(s) * std::log(static_cast<double>(m + 1));
        auto first = std::upper_bound(table.primes.begin(), table.primes.end(), A,
                                      [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
        for (auto it = first; it != table.primes.end() && static_cast<double>(*it) < B; ++it) {
            if ((*it - 1) % m != 0) continue;
            sum.add(std::log(static_cast<double>(*it)) - s_log_m1); // positive: p > (m+1)^s
        }
    }
    return sum.value();
}

double s1_partial_summation_bound(const PsiTable& table, double X, unsigned s, double Y)
{
    if (s < 2)
        throw std::invalid_argument("s1_partial_summation_bound: s must be >= 2");
    KahanSum sum;
    for (std::uint64_t m = 1; static_cast<double>(m) < Y; ++m) {
        double B = static_cast<double>(m) * X;
        check_window(table, B, "s1_partial_summation_bound");
        double s_log_m1 = static_cast<double>(s) * std::log(static_cast<double>(m + 1));
        double weight = 1.0 - s_log_m1 / std::log(B); // log(mX) at the right endpoint, as printed
        double term = table.psi(B, m, 1) * weight -
                      s_log_m1 * error_integral_term(table, m, X, s);
        sum.add(term);
    }
    return sum.value();
}

AverageReport average_log_inv_density(std::uint64_t X, unsigned s,
                                      const global::GlobalBoundConfig& config,
                                      const std::optional<local::FormSpec>& base_form,
                                      unsigned threads)
{
    if (X < 2)
        throw std::invalid_argument("average_log_inv_density: X must be >= 2");
    config.validate();
    if (config.mode == global::BoundMode::exact && !base_form)
        throw std::invalid_argument("average_log_inv_density: exact mode needs a coefficient vector");

    auto primes = arith::PrimeTable::build(config.prime_limit);

    AverageReport rep;
    rep.X = X;
    rep.s = s;
    rep.reference = std::pow(static_cast<double>(X), 1.0 / static_cast<double>(s - 1)) /
                    std::log(static_cast<double>(X));

    std::vector<double> per_k(X, 0.0); // slot i holds the value for k = i + 1
    parallel_for(X - 1, threads, [&](std::size_t i) {
        std::uint64_t k = static_cast<std::uint64_t>(i) + 1;
        if (config.mode == global::BoundMode::alpha) {
            per_k[i] = global::bound_alpha(k, s, config, primes).log_inv_density_lower;
        } else {
            local::FormSpec form(base_form->coefficients, k);
            per_k[i] = global::bound_exact(form, config, primes).log_inv_density_lower;
        }
    });

    KahanSum sum; // ascending k
    rep.per_k.reserve(X - 1);
    for (std::uint64_t k = 1; k < X; ++k) {
        rep.per_k.emplace_back(k, per_k[k - 1]);
        sum.add(per_k[k - 1]);
    }
    rep.average = sum.value() / static_cast<double>(X);
    return rep;
}

double AverageConfig::resolve_Y() const
{
    if (eta) {
        if (!(*eta > 0.0 && *eta < 0.5))
            throw std::invalid_argument("AverageConfig: eta must lie in (0, 1/2)");
        return std::pow(X, 1.0 / (static_cast<double>(s) - 1.0 + *eta));
    }
    if (Y) return *Y;
    throw std::invalid_argument("AverageConfig: set either Y or eta");
}

void AverageConfig::validate() const
{
    if (X < 2.0)
        throw std::invalid_argument("AverageConfig: X must be >= 2");
    if (s < 2)
        throw std::invalid_argument("AverageConfig: s must be >= 2");
    double y = resolve_Y();
    if (!(std::pow(y + 1.0, static_cast<double>(s)) < X * y))
        throw std::invalid_argument("AverageConfig: window condition (Y+1)^s < XY violated");
}

} // namespace diagdensity::avg
