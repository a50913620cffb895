#ifndef ZML_CONJECTURE_HPP
#define ZML_CONJECTURE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "zml/compensated_sum.hpp"
#include "zml/errors.hpp"
#include "zml/primes.hpp"
#include "zml/zeta.hpp"

namespace zml {

inline constexpr double euler_gamma = 0.57721566490153286061;

namespace detail {

// ζ(n) for n = 2..count, used by the Barnes G base series.
inline const std::vector<double>& zeta_integers()
{
    static const std::vector<double> table = [] {
        constexpr int count = 80;
        eval_config cfg;
        cfg.target_abs_error = 1e-16;
        std::vector<double> out(count + 1, 0.0);
        for (int n = 2; n <= count; ++n) {
            out[n] = zeta(complex{static_cast<double>(n), 0.0}, cfg).real();
        }
        return out;
    }();
    return table;
}

// log G(1 + u) for |u| <= 1/2 from the Taylor series at 1.
inline double log_barnes_g_base(double u)
{
    const auto& z = zeta_integers();
    double sum = 0.5 * u * std::log(two_pi) - 0.5 * (u + (1.0 + euler_gamma) * u * u);
    double pw = u * u * u;
    for (std::size_t k = 2; k < z.size(); ++k) {
        const double term = ((k % 2 == 0) ? 1.0 : -1.0) * z[k] * pw / static_cast<double>(k + 1);
        sum += term;
        if (std::abs(term) < 1e-18) {
            break;
        }
        pw *= u;
    }
    return sum;
}

} // namespace detail

// log G(z) for z > 0, shifting with G(z + 1) = Γ(z) G(z) into [1/2, 3/2].
inline double log_barnes_g(double z)
{
    if (!(z > 0)) {
        throw domain_error("barnes_g: need z > 0");
    }
    compensated_sum<double> shift;
    while (z > 1.5) {
        z -= 1.0;
        shift.add(std::lgamma(z));
    }
    while (z < 0.5) {
        shift.add(-std::lgamma(z));
        z += 1.0;
    }
    return detail::log_barnes_g_base(z - 1.0) + shift.value();
}

inline double barnes_g(double z) { return std::exp(log_barnes_g(z)); }

namespace detail {

// log of (1 - 1/p)^{k²} Σ_m (Γ(m+k)/(m! Γ(k)))² p^{-m}.
inline double log_euler_factor(double k, double p)
{
    const double inv_p = 1.0 / p;
    double term = 1.0;
    compensated_sum<double> tail; // Σ_{m >= 1}
    for (int m = 0;; ++m) {
        if (m > 10000) {
            throw numeric_error("euler_factor: series did not converge");
        }
        const double r = (m + k) / (m + 1.0);
        term *= r * r * inv_p;
        tail.add(term);
        if (term <= 1e-17 * (1.0 + tail.value())) {
            break;
        }
    }
    return k * k * std::log1p(-inv_p) + std::log1p(tail.value());
}

} // namespace detail

inline double euler_factor(double k, std::uint64_t p)
{
    if (!(k > 0) || p < 2) {
        throw domain_error("euler_factor: need k > 0 and a prime p");
    }
    return std::exp(detail::log_euler_factor(k, static_cast<double>(p)));
}

struct conjecture_constant {
    double k = 0.0;
    double barnes_ratio = 1.0;    // G(k+2)² / G(2k+3)
    double euler_product = 1.0;   // truncated product times the tail correction
    std::uint64_t prime_cutoff = 0;
    double tail = 0.0;            // log of the tail correction
    double tail_bound = 0.0;
    double value = 1.0;
};

// Coefficients of p^{-2} and p^{-3} in log euler_factor(k, p).
inline double euler_tail_c2(double k) { return -k * k * (k - 1.0) * (k - 1.0) / 4.0; }

inline double euler_tail_c3(double k)
{
    const double a1 = k * k;
    const double a2 = std::pow(k * (k + 1.0) / 2.0, 2);
    const double a3 = std::pow(k * (k + 1.0) * (k + 2.0) / 6.0, 2);
    return a3 - a1 * a2 + a1 * a1 * a1 / 3.0 - k * k / 3.0;
}

// Σ_{p > cutoff} p^{-s}: table primes up to its limit L, then the prime-density
// integral ∫_L^∞ dt / (t^s log t) = E_1((s-1) log L).
inline double prime_zeta_tail(double s, std::uint64_t cutoff, const prime_table& table)
{
    const double L = static_cast<double>(table.limit());
    const double beyond = -std::expint(-(s - 1.0) * std::log(L));
    return prime_power_sum(static_cast<double>(cutoff), L, s, table) + beyond;
}

inline conjecture_constant c_k(double k, std::uint64_t prime_cutoff, const prime_table& table)
{
    if (!(k > 0)) {
        throw domain_error("c_k: need k > 0");
    }
    if (prime_cutoff < 100) {
        throw domain_error("c_k: need prime_cutoff >= 100");
    }
    if (prime_cutoff > table.limit()) {
        throw capacity_error("c_k: prime cutoff " + std::to_string(prime_cutoff) +
                             " exceeds the table limit " + std::to_string(table.limit()));
    }
    conjecture_constant c;
    c.k = k;
    c.prime_cutoff = prime_cutoff;
    c.barnes_ratio = std::exp(2.0 * log_barnes_g(k + 2.0) - log_barnes_g(2.0 * k + 3.0));

    compensated_sum<double> log_prod;
    const auto primes = table.primes_in(0.0, static_cast<double>(prime_cutoff));
    for (std::uint64_t p : primes) {
        log_prod.add(detail::log_euler_factor(k, static_cast<double>(p)));
    }
    const double p2 = prime_zeta_tail(2.0, prime_cutoff, table);
    const double p3 = prime_zeta_tail(3.0, prime_cutoff, table);
    c.tail = euler_tail_c2(k) * p2;
    log_prod.add(c.tail);
    c.euler_product = std::exp(log_prod.value());
    c.value = c.barnes_ratio * c.euler_product;
    const double rounding =
        4.0 * std::numeric_limits<double>::epsilon() * (static_cast<double>(primes.size()) + 16.0);
    // The density integral beyond the table carries a relative error well below 1%.
    const double density = 0.01 * std::abs(euler_tail_c2(k)) *
                           -std::expint(-std::log(static_cast<double>(table.limit())));
    c.tail_bound = c.value * (std::abs(c.tail) + 2.0 * std::abs(euler_tail_c3(k)) * p3 +
                              density + rounding);
    return c;
}

// C_k (log T)^{k(k+2)}; C_0 = 1 by convention.
inline double predicted_jk(double k, double T, const conjecture_constant& c)
{
    if (!(T >= 10.0)) {
        throw domain_error("predicted_jk: need T >= 10");
    }
    if (k == 0.0) {
        return 1.0;
    }
    return c.value * std::pow(std::log(T), k * (k + 2.0));
}

inline double jk_exponent(double k) { return k * (k + 2.0); }

} // namespace zml

#endif // ZML_CONJECTURE_HPP
