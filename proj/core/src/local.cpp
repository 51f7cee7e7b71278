#include <diagdensity/local.hpp>

#include <diagdensity/arith.hpp>
#include <diagdensity/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace diagdensity::local {

namespace {

// ORs `len` bits of src starting at bit src_begin into dst starting at bit
// dst_begin.  Plain bitmap blit; both buffers must be long enough.
void blit_or(const std::uint64_t* src, std::uint64_t src_begin, std::uint64_t len,
             std::uint64_t* dst, std::uint64_t dst_begin)
{
    while (len > 0) {
        std::uint64_t sw = src_begin >> 6;
        unsigned sb = static_cast<unsigned>(src_begin & 63);
        std::uint64_t take = std::min<std::uint64_t>(len, 64 - sb);

        std::uint64_t bits = src[sw] >> sb;
        if (take < 64) bits &= (std::uint64_t{1} << take) - 1;

        std::uint64_t dw = dst_begin >> 6;
        unsigned db = static_cast<unsigned>(dst_begin & 63);
        dst[dw] |= bits << db;
        if (db != 0 && db + take > 64)
            dst[dw + 1] |= bits >> (64 - db);

        src_begin += take;
        dst_begin += take;
        len -= take;
    }
}

// Fixed-length bit vector over Z/m with a cyclic shifted-OR, the workhorse of
// the sumset computation: A+B = OR over b in B of rot(A, b).  Rotating the
// accumulated set by each element of the (usually small) summand costs
// O(|B| * m / 64) words.
class ResidueBits {
public:
    explicit ResidueBits(std::uint64_t m)
        : bits_(m), words_((m + 63) / 64, 0) {}

    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::uint64_t count() const
    {
        std::uint64_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(__builtin_popcountll(w));
        return n;
    }

    // dst |= rot(this, shift), rot moving bit i to bit (i + shift) mod m.
    void or_rotated_into(ResidueBits& dst, std::uint64_t shift) const
    {
        shift %= bits_;
        if (shift == 0) {
            for (std::size_t w = 0; w < words_.size(); ++w) dst.words_[w] |= words_[w];
            return;
        }
        // low bits [0, m-shift) land at [shift, m); the rest wraps to [0, shift)
        blit_or(words_.data(), 0, bits_ - shift, dst.words_.data(), shift);
        blit_or(words_.data(), bits_ - shift, shift, dst.words_.data(), 0);
    }

    std::vector<std::uint32_t> to_sorted() const
    {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::uint64_t base = 0; base < bits_; base += 64) {
            std::uint64_t w = words_[base >> 6];
            while (w != 0) {
                auto b = static_cast<std::uint64_t>(__builtin_ctzll(w));
                w &= w - 1;
                out.push_back(static_cast<std::uint32_t>(base + b));
            }
        }
        return out;
    }

private:
    std::uint64_t bits_;
    std::vector<std::uint64_t> words_;
};

ResidueBits scaled_residue_set(const std::vector<std::uint32_t>& residues,
                               std::int64_t coeff, std::uint64_t m)
{
    ResidueBits out(m);
    std::int64_t c = coeff % static_cast<std::int64_t>(m);
    if (c < 0) c += static_cast<std::int64_t>(m);
    auto cu = static_cast<std::uint64_t>(c);
    if (cu == 0) {
        out.set(0); // a_i ≡ 0: the coordinate contributes only the 0 class
        return out;
    }
    for (std::uint32_t r : residues)
        out.set(cu * r % m);
    return out;
}

std::vector<std::uint32_t> power_residues_mod(std::uint64_t m, std::uint64_t k)
{
    ResidueBits present(m);
    for (std::uint64_t x = 0; x < m; ++x)
        present.set(arith::pow_mod(x, k, m));
    return present.to_sorted();
}

} // namespace

FormSpec::FormSpec(std::vector<std::int64_t> coeffs, std::uint64_t k)
    : coefficients(std::move(coeffs)), exponent(k)
{
    validate();
}

void FormSpec::validate() const
{
    if (coefficients.size() < 2)
        throw std::invalid_argument("FormSpec: need at least 2 coefficients");
    if (exponent < 1)
        throw std::invalid_argument("FormSpec: exponent must be >= 1");
    bool any = false;
    for (std::int64_t a : coefficients)
        if (a != 0) { any = true; break; }
    if (!any)
        throw std::invalid_argument("FormSpec: all coefficients are zero");
}

std::vector<std::uint32_t> power_residues(std::uint64_t p, std::uint64_t k)
{
    if (!arith::is_prime(p))
        throw std::invalid_argument("power_residues: " + std::to_string(p) + " is not prime");
    if (k < 1)
        throw std::invalid_argument("power_residues: exponent must be >= 1");
    return power_residues_mod(p, k);
}

std::vector<std::uint32_t> value_set_from_powers(const std::vector<std::int64_t>& coefficients,
                                                 const std::vector<std::uint32_t>& powers,
                                                 std::uint64_t modulus)
{
    ResidueBits acc = scaled_residue_set(powers, coefficients[0], modulus);
    for (std::size_t i = 1; i < coefficients.size(); ++i) {
        ResidueBits summand = scaled_residue_set(powers, coefficients[i], modulus);
        ResidueBits next(modulus);
        for (std::uint32_t b : summand.to_sorted())
            acc.or_rotated_into(next, b);
        acc = std::move(next);
    }
    return acc.to_sorted();
}

std::uint64_t value_set_size_from_powers(const std::vector<std::int64_t>& coefficients,
                                         const std::vector<std::uint32_t>& powers,
                                         std::uint64_t modulus)
{
    return static_cast<std::uint64_t>(value_set_from_powers(coefficients, powers, modulus).size());
}

std::vector<std::uint32_t> value_set_mod(const FormSpec& form, std::uint64_t modulus,
                                         std::uint64_t cap)
{
    form.validate();
    if (modulus < 2)
        throw std::invalid_argument("value_set_mod: modulus must be >= 2");
    if (modulus > cap)
        throw resource_error("value_set: modulus " + std::to_string(modulus) +
                             " exceeds bit-vector cap " + std::to_string(cap));

    std::vector<std::uint32_t> powers = power_residues_mod(modulus, form.exponent);
    return value_set_from_powers(form.coefficients, powers, modulus);
}

std::uint64_t value_set_size_mod(const FormSpec& form, std::uint64_t modulus, std::uint64_t cap)
{
    return static_cast<std::uint64_t>(value_set_mod(form, modulus, cap).size());
}

std::vector<std::uint32_t> value_set(const FormSpec& form, std::uint64_t p, std::uint64_t cap)
{
    if (!arith::is_prime(p))
        throw std::invalid_argument("value_set: " + std::to_string(p) + " is not prime");
    return value_set_mod(form, p, cap);
}

double alpha_bound(std::uint64_t k, std::uint64_t p, unsigned s)
{
    if (!arith::is_prime(p))
        throw std::invalid_argument("alpha_bound: " + std::to_string(p) + " is not prime");
    if (k < 1 || s < 2)
        throw std::invalid_argument("alpha_bound: need k >= 1 and s >= 2");
    std::uint64_t m = (p - 1) / std::gcd(k, p - 1);
    return std::pow(static_cast<double>(m + 1), static_cast<double>(s)) / static_cast<double>(p);
}

LocalDensityRecord local_density(const FormSpec& form, std::uint64_t p, std::uint64_t cap)
{
    auto values = value_set(form, p, cap);
    LocalDensityRecord rec;
    rec.prime = p;
    rec.coset_index = (p - 1) / std::gcd(form.exponent, p - 1);
    rec.value_set_size = static_cast<std::uint64_t>(values.size());
    rec.density = Rational(rec.value_set_size, p);
    rec.alpha = alpha_bound(form.exponent, p, static_cast<unsigned>(form.arity()));
    rec.alpha_capped = std::min(rec.alpha, 1.0);
    return rec;
}

} // namespace diagdensity::local
