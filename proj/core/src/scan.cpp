#include <diagdensity/scan.hpp>

#include <diagdensity/arith.hpp>
#include <diagdensity/errors.hpp>
#include <diagdensity/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace diagdensity::scan {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::uint64_t kWindowCap = 1'000'000'000;

std::string i128_str(i128 v)
{
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
    std::string s;
    while (x > 0) {
        s += static_cast<char>('0' + static_cast<int>(x % 10));
        x /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

// |x|^k with overflow detection; returns false when the power leaves i128.
bool checked_pow_abs(std::uint64_t base, std::uint64_t k, u128& out)
{
    if (base <= 1) { // 0^k, 1^k: constant for every k >= 1
        out = base;
        return true;
    }
    u128 acc = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (acc > static_cast<u128>(-1) / base) return false;
        acc *= base;
    }
    out = acc;
    return true;
}

// One term a * x^k, checked.  index is 1-based for error messages.
i128 checked_term(std::int64_t a, std::int64_t x, std::uint64_t k, std::size_t index)
{
    u128 mag;
    std::uint64_t ax = static_cast<std::uint64_t>(x < 0 ? -x : x);
    if (!checked_pow_abs(ax, k, mag))
        throw std::overflow_error("evaluate_form: term " + std::to_string(index) + " (x = " +
                                  std::to_string(x) + ")^" + std::to_string(k) +
                                  " overflows 128-bit range");
    std::uint64_t aa = static_cast<std::uint64_t>(a < 0 ? -a : a);
    if (aa != 0 && mag > static_cast<u128>(-1) / aa)
        throw std::overflow_error("evaluate_form: term " + std::to_string(index) +
                                  " coefficient product overflows 128-bit range");
    u128 abs_term = mag * aa;
    bool neg = (a < 0) != (x < 0 && k % 2 == 1);
    constexpr u128 i128_max = (static_cast<u128>(1) << 127) - 1;
    if (abs_term > i128_max + (neg ? 1 : 0))
        throw std::overflow_error("evaluate_form: term " + std::to_string(index) +
                                  " overflows 128-bit range");
    return neg ? -static_cast<i128>(abs_term) : static_cast<i128>(abs_term);
}

// small fixed bitset over [1, N]
class WindowBits {
public:
    explicit WindowBits(std::uint64_t n) : n_(n), words_((n + 64) / 64, 0) {}

    bool set(std::uint64_t v) // returns true when newly set
    {
        std::uint64_t mask = std::uint64_t{1} << (v & 63);
        std::uint64_t& w = words_[v >> 6];
        if (w & mask) return false;
        w |= mask;
        ++count_;
        return true;
    }

    bool test(std::uint64_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    std::uint64_t count() const { return count_; }
    std::uint64_t window() const { return n_; }

    void merge(const WindowBits& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t fresh = other.words_[i] & ~words_[i];
            words_[i] |= other.words_[i];
            count_ += static_cast<std::uint64_t>(__builtin_popcountll(fresh));
        }
    }

    std::vector<std::uint64_t> to_sorted() const
    {
        std::vector<std::uint64_t> out;
        out.reserve(count_);
        for (std::uint64_t v = 1; v <= n_; ++v)
            if (test(v)) out.push_back(v);
        return out;
    }

private:
    std::uint64_t n_;
    std::vector<std::uint64_t> words_;
    std::uint64_t count_ = 0;
};

struct ChunkHits {
    WindowBits bits;
    std::vector<std::pair<std::uint64_t, std::vector<std::int64_t>>> witnesses; // insertion order

    explicit ChunkHits(std::uint64_t n) : bits(n) {}
};

// Enumerates coordinates [depth, s) in lexicographic order given the partial
// sum of the earlier coordinates; records first witnesses per chunk.
void enumerate_tail(const std::vector<std::vector<i128>>& term_by_coord, std::int64_t B,
                    std::size_t depth, i128 partial, std::vector<std::int64_t>& x,
                    std::uint64_t N, ChunkHits& out)
{
    const std::size_t s = term_by_coord.size();
    if (depth == s) {
        if (partial >= 1 && partial <= static_cast<i128>(N)) {
            auto n = static_cast<std::uint64_t>(partial);
            if (out.bits.set(n)) out.witnesses.emplace_back(n, x);
        }
        return;
    }
    const auto& terms = term_by_coord[depth];
    for (std::int64_t v = -B; v <= B; ++v) {
        x[depth] = v;
        enumerate_tail(term_by_coord, B, depth + 1,
                       partial + terms[static_cast<std::size_t>(v + B)], x, N, out);
    }
}

// value -> lexicographically-first witness for one coordinate half
std::vector<std::pair<i128, std::vector<std::int64_t>>>
enumerate_half(const std::vector<std::vector<i128>>& term_by_coord, std::int64_t B)
{
    std::vector<std::pair<i128, std::vector<std::int64_t>>> out;
    const std::size_t s = term_by_coord.size();
    std::vector<std::int64_t> x(s, 0);
    std::vector<std::size_t> idx(s, 0);

    // odometer over [-B, B]^s in lexicographic order
    const std::size_t width = static_cast<std::size_t>(2 * B + 1);
    for (;;) {
        i128 sum = 0;
        for (std::size_t i = 0; i < s; ++i) sum += term_by_coord[i][idx[i]];
        for (std::size_t i = 0; i < s; ++i) x[i] = static_cast<std::int64_t>(idx[i]) - B;
        out.emplace_back(sum, x);

        std::size_t d = s;
        while (d > 0) {
            if (++idx[d - 1] < width) break;
            idx[d - 1] = 0;
            --d;
        }
        if (d == 0) break;
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    // keep the first (lexicographically smallest) witness per value
    std::vector<std::pair<i128, std::vector<std::int64_t>>> dedup;
    dedup.reserve(out.size());
    for (auto& e : out) {
        if (dedup.empty() || dedup.back().first != e.first) dedup.push_back(std::move(e));
    }
    return dedup;
}

std::vector<std::vector<i128>> coordinate_terms(const local::FormSpec& form, std::int64_t B,
                                                std::size_t first, std::size_t count)
{
    std::vector<std::vector<i128>> terms(count);
    for (std::size_t i = 0; i < count; ++i) {
        terms[i].resize(static_cast<std::size_t>(2 * B + 1));
        for (std::int64_t v = -B; v <= B; ++v)
            terms[i][static_cast<std::size_t>(v + B)] =
                checked_term(form.coefficients[first + i], v, form.exponent, first + i + 1);
    }
    return terms;
}

double box_cost(std::uint64_t B, std::size_t s)
{
    return std::pow(2.0 * static_cast<double>(B) + 1.0, static_cast<double>(s));
}

// per-prime admissibility table: admissible[p][r] != 0 iff residue r is attained
std::vector<std::vector<std::uint8_t>> residue_tables(const local::FormSpec& form,
                                                      const ScanConfig& config)
{
    std::vector<std::vector<std::uint8_t>> tables;
    tables.reserve(config.sieve_primes.size());
    for (std::uint64_t p : config.sieve_primes) {
        std::vector<std::uint8_t> table(p, 0);
        for (std::uint32_t r : local::value_set(form, p, config.value_set_cap))
            table[r] = 1;
        tables.push_back(std::move(table));
    }
    return tables;
}

bool passes_all(std::uint64_t n, const std::vector<std::uint64_t>& primes,
                const std::vector<std::vector<std::uint8_t>>& tables)
{
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (!tables[i][n % primes[i]]) return false;
    return true;
}

} // namespace

void ScanConfig::validate() const
{
    if (N < 1)
        throw std::invalid_argument("ScanConfig: N must be >= 1");
    if (N > kWindowCap)
        throw resource_error("ScanConfig: window N = " + std::to_string(N) +
                             " exceeds window budget " + std::to_string(kWindowCap));
    for (std::size_t i = 0; i < sieve_primes.size(); ++i) {
        if (!arith::is_prime(sieve_primes[i]))
            throw std::invalid_argument("ScanConfig: sieve modulus " +
                                        std::to_string(sieve_primes[i]) + " is not prime");
        for (std::size_t j = i + 1; j < sieve_primes.size(); ++j)
            if (sieve_primes[i] == sieve_primes[j])
                throw std::invalid_argument("ScanConfig: sieve primes must be distinct");
    }
}

__int128 evaluate_form(const local::FormSpec& form, std::span<const std::int64_t> x)
{
    form.validate();
    if (x.size() != form.arity())
        throw std::invalid_argument("evaluate_form: expected " + std::to_string(form.arity()) +
                                    " coordinates, got " + std::to_string(x.size()));
    i128 sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        i128 term = checked_term(form.coefficients[i], x[i], form.exponent, i + 1);
        i128 next = sum + term;
        // signed overflow check: adding same-signed values must not flip sign
        if ((sum > 0 && term > 0 && next < 0) || (sum < 0 && term < 0 && next >= 0))
            throw std::overflow_error("evaluate_form: running sum overflows 128-bit range at term " +
                                      std::to_string(i + 1) + " (partial sum " + i128_str(sum) + ")");
        sum = next;
    }
    return sum;
}

ScanReport boxed_scan(const local::FormSpec& form, const ScanConfig& config)
{
    form.validate();
    config.validate();
    const std::size_t s = form.arity();
    const auto B = static_cast<std::int64_t>(config.B);
    const std::uint64_t N = config.N;

    ScanReport rep;
    rep.has_box = true;

    const double budget = static_cast<double>(config.work_budget);
    const bool split = s >= 4;
    if (!split && box_cost(config.B, s) > budget)
        throw resource_error("boxed_scan: (2B+1)^s = " +
                             std::to_string(box_cost(config.B, s)) + " exceeds work budget " +
                             std::to_string(config.work_budget) + "; reduce B");
    // the halves are materialized with witnesses, so they get a memory cap too
    constexpr double kHalfEntryCap = 50'000'000.0;
    if (split && 2.0 * box_cost(config.B, (s + 1) / 2) > std::min(budget, kHalfEntryCap))
        throw resource_error("boxed_scan: meet-in-the-middle halves exceed work budget " +
                             std::to_string(config.work_budget) + "; reduce B");

    WindowBits merged(N);
    std::map<std::uint64_t, std::vector<std::int64_t>> witnesses;

    if (!split) {
        // direct enumeration; the outermost coordinate is partitioned into
        // contiguous chunks, merged back in ascending order so the result is
        // independent of the thread count
        auto terms = coordinate_terms(form, B, 0, s);
        const std::uint64_t width = 2 * config.B + 1;
        unsigned workers = std::max(1u, config.threads);
        std::uint64_t nchunks = std::min<std::uint64_t>(width, workers);
        std::uint64_t chunk_len = (width + nchunks - 1) / nchunks;

        std::vector<ChunkHits> chunks;
        chunks.reserve(nchunks);
        for (std::uint64_t c = 0; c < nchunks; ++c) chunks.emplace_back(N);

        parallel_for(nchunks, config.threads, [&](std::size_t c) {
            std::uint64_t begin = c * chunk_len;
            std::uint64_t end = std::min(width, begin + chunk_len);
            std::vector<std::int64_t> x(s, 0);
            for (std::uint64_t i = begin; i < end; ++i) {
                std::int64_t v = static_cast<std::int64_t>(i) - B;
                x[0] = v;
                enumerate_tail(terms, B, 1, terms[0][i], x, N, chunks[c]);
            }
        });

        for (const auto& chunk : chunks) {
            for (const auto& [n, w] : chunk.witnesses)
                if (!merged.test(n)) witnesses.emplace(n, w);
            merged.merge(chunk.bits);
        }
    } else {
        // meet in the middle: values of each half, then a sorted join over the
        // window [1 - vA, N - vA]
        const std::size_t half = (s + 1) / 2;
        auto left = enumerate_half(coordinate_terms(form, B, 0, half), B);
        auto right = enumerate_half(coordinate_terms(form, B, half, s - half), B);

        std::uint64_t work = 0;
        for (const auto& [va, wa] : left) {
            if (merged.count() == N) break;
            i128 lo = 1 - va;
            i128 hi = static_cast<i128>(N) - va;
            auto first = std::lower_bound(right.begin(), right.end(), lo,
                                          [](const auto& e, i128 v) { return e.first < v; });
            for (auto it = first; it != right.end() && it->first <= hi; ++it) {
                if (++work > config.work_budget)
                    throw resource_error("boxed_scan: meet-in-the-middle join exceeded work budget " +
                                         std::to_string(config.work_budget) + "; reduce B");
                auto n = static_cast<std::uint64_t>(va + it->first);
                if (merged.set(n)) {
                    std::vector<std::int64_t> w = wa;
                    w.insert(w.end(), it->second.begin(), it->second.end());
                    witnesses.emplace(n, std::move(w));
                }
            }
        }
    }

    rep.represented = merged.to_sorted();
    rep.lower_density = static_cast<double>(rep.represented.size()) / static_cast<double>(N);
    rep.witnesses = std::move(witnesses);
    rep.window_aligned = config.sieve_primes.empty();
    return rep;
}

ScanReport sieve_upper(const local::FormSpec& form, const ScanConfig& config)
{
    form.validate();
    config.validate();

    u128 modulus = 1;
    for (std::uint64_t p : config.sieve_primes) {
        modulus *= p;
        if (modulus > config.modulus_budget)
            throw resource_error("sieve_upper: sieve modulus product exceeds budget " +
                                 std::to_string(config.modulus_budget));
    }

    ScanReport rep;
    rep.has_sieve = true;

    auto tables = residue_tables(form, config);
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= config.N; ++n)
        if (passes_all(n, config.sieve_primes, tables)) ++count;

    rep.sieve_admissible_count = count;
    rep.sieve_upper_density = Rational(count, config.N);
    rep.window_aligned = config.N % static_cast<std::uint64_t>(modulus) == 0;
    return rep;
}

ScanReport density_report(const local::FormSpec& form, const ScanConfig& config)
{
    ScanReport box = boxed_scan(form, config);
    ScanReport sieve = sieve_upper(form, config);

    ScanReport rep = std::move(box);
    rep.has_sieve = true;
    rep.sieve_admissible_count = sieve.sieve_admissible_count;
    rep.sieve_upper_density = sieve.sieve_upper_density;
    rep.window_aligned = sieve.window_aligned;

    auto tables = residue_tables(form, config);
    rep.consistent = true;
    for (std::uint64_t n : rep.represented) {
        if (!passes_all(n, config.sieve_primes, tables)) {
            rep.consistent = false; // cannot happen unless the sieve is wrong
            break;
        }
    }
    return rep;
}

} // namespace diagdensity::scan
