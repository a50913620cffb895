#ifndef ZML_PRIMES_HPP
#define ZML_PRIMES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zml/compensated_sum.hpp"
#include "zml/errors.hpp"

namespace zml {

// Limits above this use a segmented sieve and keep smallest factors only up
// to the square root of the limit.
inline constexpr std::uint64_t flat_sieve_limit = 100'000'000;
inline constexpr std::uint64_t default_sieve_memory_budget = std::uint64_t{1} << 31;

struct prime_power {
    std::uint64_t prime;
    unsigned exponent;
};

class prime_table {
public:
    prime_table() = default;

    std::uint64_t limit() const noexcept { return limit_; }
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }
    std::span<const std::uint32_t> smallest_factor() const noexcept { return smallest_factor_; }

    bool is_prime(std::uint64_t n) const
    {
        if (n < 2) {
            return false;
        }
        if (n < smallest_factor_.size()) {
            return smallest_factor_[n] == n;
        }
        if (n <= limit_) {
            return std::binary_search(primes_.begin(), primes_.end(), n);
        }
        return smallest_prime_factor(n) == n;
    }

    // Smallest prime factor of n >= 2; falls back to trial division by the
    // stored primes above the flat-sieve range.
    std::uint64_t smallest_prime_factor(std::uint64_t n) const
    {
        if (n < 2) {
            throw domain_error("smallest_prime_factor: n must be >= 2");
        }
        if (n < smallest_factor_.size()) {
            return smallest_factor_[n];
        }
        for (std::uint64_t p : primes_) {
            if (p * p > n) {
                return n;
            }
            if (n % p == 0) {
                return p;
            }
        }
        if (limit_ * limit_ < n) {
            throw range_error("smallest_prime_factor: n exceeds the square of the table limit");
        }
        return n;
    }

    std::vector<prime_power> factorize(std::uint64_t n) const
    {
        std::vector<prime_power> out;
        while (n > 1) {
            const std::uint64_t p = smallest_prime_factor(n);
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.push_back({p, e});
        }
        return out;
    }

    // Primes in the half-open range (a, b].
    std::span<const std::uint64_t> primes_in(double a, double b) const
    {
        auto lo = std::upper_bound(primes_.begin(), primes_.end(), a,
            [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
        auto hi = std::upper_bound(primes_.begin(), primes_.end(), b,
            [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
        if (hi < lo) {
            hi = lo;
        }
        return {lo, hi};
    }

    std::size_t prime_count(double x) const { return primes_in(0.0, x).size(); }

private:
    friend prime_table sieve_primes(std::uint64_t, std::uint64_t);

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
    std::vector<std::uint32_t> smallest_factor_;
};

inline prime_table sieve_primes(std::uint64_t limit,
                                std::uint64_t memory_budget = default_sieve_memory_budget)
{
    if (limit < 1) {
        throw domain_error("sieve_primes: limit must be >= 1");
    }
    const bool flat = limit <= flat_sieve_limit;
    const double density = 1.0 / std::max(1.0, std::log(static_cast<double>(limit)) - 1.1);
    const double est_primes = 1.3 * static_cast<double>(limit) * density + 16;
    const double est_bytes = (flat ? 4.0 * static_cast<double>(limit + 1) : 1.0 * (1 << 20)) +
                             8.0 * est_primes;
    if (est_bytes > static_cast<double>(memory_budget)) {
        throw capacity_error("sieve_primes: limit " + std::to_string(limit) +
                             " exceeds the configured memory budget");
    }

    prime_table table;
    table.limit_ = limit;
    const std::uint64_t spf_limit =
        flat ? limit : static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;

    // Linear sieve for smallest prime factors.
    std::vector<std::uint32_t>& spf = table.smallest_factor_;
    spf.assign(spf_limit + 1, 0);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= spf_limit; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            base.push_back(i);
        }
        for (std::uint64_t p : base) {
            if (p > spf[i] || i * p > spf_limit) {
                break;
            }
            spf[i * p] = static_cast<std::uint32_t>(p);
        }
    }

    if (flat) {
        table.primes_ = std::move(base);
        return table;
    }

    // Segmented sieve for (spf_limit, limit].
    table.primes_ = base;
    constexpr std::uint64_t segment = 1 << 20;
    std::vector<char> composite(segment);
    for (std::uint64_t lo = spf_limit + 1; lo <= limit; lo += segment) {
        const std::uint64_t hi = std::min(limit, lo + segment - 1);
        std::fill(composite.begin(), composite.end(), 0);
        for (std::uint64_t p : base) {
            if (p * p > hi) {
                break;
            }
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t m = start; m <= hi; m += p) {
                composite[m - lo] = 1;
            }
        }
        for (std::uint64_t n = lo; n <= hi; ++n) {
            if (!composite[n - lo]) {
                table.primes_.push_back(n);
            }
        }
    }
    return table;
}

namespace detail {

inline std::optional<prime_power> prime_power_of(std::uint64_t n)
{
    if (n < 2) {
        return std::nullopt;
    }
    std::uint64_t p = n;
    if (n % 2 == 0) {
        p = 2;
    } else {
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) {
                p = d;
                break;
            }
        }
    }
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) {
        return std::nullopt;
    }
    return prime_power{p, e};
}

inline std::optional<prime_power> prime_power_of(std::uint64_t n, const prime_table& table)
{
    if (n < 2) {
        return std::nullopt;
    }
    const std::uint64_t p = table.smallest_prime_factor(n);
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) {
        return std::nullopt;
    }
    return prime_power{p, e};
}

inline double von_mangoldt_of(const std::optional<prime_power>& pp)
{
    return pp ? std::log(static_cast<double>(pp->prime)) : 0.0;
}

// Natural number nearest to x when x is integral within a relative 1e-12.
inline std::optional<std::uint64_t> as_natural(double x)
{
    if (!(x >= 0.5) || x > 9.0e15) {
        return std::nullopt;
    }
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-12 * r) {
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace detail

// Λ(x): log p when x = p^h, zero otherwise (including non-integral x).
inline double von_mangoldt(double x)
{
    if (!(x > 0)) {
        throw domain_error("von_mangoldt: argument must be positive");
    }
    const auto n = detail::as_natural(x);
    if (!n) {
        return 0.0;
    }
    return detail::von_mangoldt_of(detail::prime_power_of(*n));
}

inline double von_mangoldt(std::uint64_t n, const prime_table& table)
{
    if (n == 0) {
        throw domain_error("von_mangoldt: argument must be positive");
    }
    return detail::von_mangoldt_of(detail::prime_power_of(n, table));
}

// Λ(a/b) for naturals, exact: non-zero only when b divides a.
inline double von_mangoldt_ratio(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0) {
        throw domain_error("von_mangoldt_ratio: arguments must be positive");
    }
    if (a % b != 0) {
        return 0.0;
    }
    return detail::von_mangoldt_of(detail::prime_power_of(a / b));
}

// Restriction of Λ to primes and to squares p^2 of primes p <= L.
inline double von_mangoldt_L(std::uint64_t n, double L)
{
    if (n == 0 || !(L > 0)) {
        throw domain_error("von_mangoldt_L: need n >= 1 and L > 0");
    }
    const auto pp = detail::prime_power_of(n);
    if (!pp) {
        return 0.0;
    }
    if (pp->exponent == 1 || (pp->exponent == 2 && static_cast<double>(pp->prime) <= L)) {
        return std::log(static_cast<double>(pp->prime));
    }
    return 0.0;
}

inline double von_mangoldt_L(std::uint64_t n, double L, const prime_table& table)
{
    if (n == 0 || !(L > 0)) {
        throw domain_error("von_mangoldt_L: need n >= 1 and L > 0");
    }
    const auto pp = detail::prime_power_of(n, table);
    if (!pp) {
        return 0.0;
    }
    if (pp->exponent == 1 || (pp->exponent == 2 && static_cast<double>(pp->prime) <= L)) {
        return std::log(static_cast<double>(pp->prime));
    }
    return 0.0;
}

// Σ_{a < p <= b} 1/p.
inline double prime_reciprocal_sum(double a, double b, const prime_table& table)
{
    if (!(a >= 0) || !(a < b)) {
        throw domain_error("prime_reciprocal_sum: need 0 <= a < b");
    }
    if (b > static_cast<double>(table.limit())) {
        throw range_error("prime_reciprocal_sum: upper end " + std::to_string(b) +
                          " exceeds table limit " + std::to_string(table.limit()));
    }
    compensated_sum<double> acc;
    for (std::uint64_t p : table.primes_in(a, b)) {
        acc.add(1.0 / static_cast<double>(p));
    }
    return acc.value();
}

// Σ_{a < p <= b} p^{-s}, used for prime-zeta tails.
inline double prime_power_sum(double a, double b, double s, const prime_table& table)
{
    compensated_sum<double> acc;
    for (std::uint64_t p : table.primes_in(a, std::min(b, static_cast<double>(table.limit())))) {
        acc.add(std::pow(static_cast<double>(p), -s));
    }
    return acc.value();
}

} // namespace zml

#endif // ZML_PRIMES_HPP
