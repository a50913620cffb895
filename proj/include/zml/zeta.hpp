#ifndef ZML_ZETA_HPP
#define ZML_ZETA_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "zml/compensated_sum.hpp"
#include "zml/detail/rs_coefficients.hpp"
#include "zml/errors.hpp"
#include "zml/gamma.hpp"

namespace zml {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct eval_config {
    unsigned rs_correction_terms = 4; // number of Riemann-Siegel terms C0..C_{n-1}
    unsigned em_terms = 60;           // maximum Euler-Maclaurin correction terms
    unsigned em_cutoff = 10;          // minimum partial-sum length
    double target_abs_error = 1e-10;
    double rs_min_t = 50.0; // never use Riemann-Siegel below this height

    void validate() const
    {
        if (rs_correction_terms < 1 || rs_correction_terms > 4) {
            throw domain_error("eval_config: rs_correction_terms must lie in [1, 4]");
        }
        if (!(target_abs_error > 0)) {
            throw domain_error("eval_config: target_abs_error must be positive");
        }
        if (em_terms < 1 || em_cutoff < 1) {
            throw domain_error("eval_config: em_terms and em_cutoff must be positive");
        }
    }

    // Height above which the Riemann-Siegel truncation error bound
    // max|C_n| * a^{-(n + 1/2)}, a = sqrt(t / 2π), drops below the target.
    double rs_crossover() const
    {
        const unsigned n = rs_correction_terms;
        const double a = std::pow(detail::rs_c_max[n] / target_abs_error, 1.0 / (n + 0.5));
        return std::max(rs_min_t, two_pi * a * a);
    }

    // FNV-1a over the configuration fields.
    std::uint64_t hash() const
    {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](std::uint64_t v) {
            for (int i = 0; i < 8; ++i) {
                h ^= (v >> (8 * i)) & 0xffU;
                h *= 1099511628211ULL;
            }
        };
        mix(rs_correction_terms);
        mix(em_terms);
        mix(em_cutoff);
        mix(std::bit_cast<std::uint64_t>(target_abs_error));
        mix(std::bit_cast<std::uint64_t>(rs_min_t));
        return h;
    }
};

// θ(t) = Im log Γ(1/4 + it/2) - (t/2) log π.
inline double rs_theta(double t)
{
    if (t < 0) {
        throw domain_error("rs_theta: t must be non-negative");
    }
    if (t >= 20.0) {
        const double inv = 1.0 / t;
        const double inv2 = inv * inv;
        const double series =
            inv * (1.0 / 48.0 +
                   inv2 * (7.0 / 5760.0 +
                           inv2 * (31.0 / 80640.0 +
                                   inv2 * (381.0 / 1290240.0 + inv2 * (5563.0 / 6758400.0)))));
        return 0.5 * t * std::log(t / two_pi) - 0.5 * t - std::numbers::pi / 8.0 + series;
    }
    return log_gamma(complex{0.25, 0.5 * t}).imag() - 0.5 * t * std::log(std::numbers::pi);
}

inline double rs_theta_prime(double t)
{
    if (t < 0) {
        throw domain_error("rs_theta_prime: t must be non-negative");
    }
    if (t >= 20.0) {
        const double inv2 = 1.0 / (t * t);
        const double series =
            inv2 * (1.0 / 48.0 +
                    inv2 * (21.0 / 5760.0 +
                            inv2 * (155.0 / 80640.0 +
                                    inv2 * (2667.0 / 1290240.0 + inv2 * (50067.0 / 6758400.0)))));
        return 0.5 * std::log(t / two_pi) - series;
    }
    return 0.5 * digamma(complex{0.25, 0.5 * t}).real() - 0.5 * std::log(std::numbers::pi);
}

namespace detail {

template <std::size_t N>
double horner(const std::array<double, N>& c, double u)
{
    double acc = 0.0;
    for (std::size_t i = N; i-- > 0;) {
        acc = acc * u + c[i];
    }
    return acc;
}

template <std::size_t N>
double horner_deriv(const std::array<double, N>& c, double u)
{
    double acc = 0.0;
    for (std::size_t i = N; i-- > 1;) {
        acc = acc * u + static_cast<double>(i) * c[i];
    }
    return acc;
}

inline double rs_correction(unsigned k, double u)
{
    switch (k) {
    case 0: return horner(rs_c0_taylor, u);
    case 1: return horner(rs_c1_taylor, u);
    case 2: return horner(rs_c2_taylor, u);
    case 3: return horner(rs_c3_taylor, u);
    default: return horner(rs_c4_taylor, u);
    }
}

inline double rs_correction_deriv(unsigned k, double u)
{
    switch (k) {
    case 0: return horner_deriv(rs_c0_taylor, u);
    case 1: return horner_deriv(rs_c1_taylor, u);
    case 2: return horner_deriv(rs_c2_taylor, u);
    case 3: return horner_deriv(rs_c3_taylor, u);
    default: return horner_deriv(rs_c4_taylor, u);
    }
}

// B_{2j} / (2j)! for j = 1..count, from B_{2j} = (-1)^{j+1} 2 (2j)! ζ(2j) / (2π)^{2j}.
inline const std::vector<double>& bernoulli_over_factorial()
{
    static const std::vector<double> table = [] {
        constexpr int count = 80;
        std::vector<double> out(count + 1, 0.0);
        out[1] = 1.0 / 12.0;
        out[2] = -1.0 / 720.0;
        out[3] = 1.0 / 30240.0;
        out[4] = -1.0 / 1209600.0;
        for (int j = 5; j <= count; ++j) {
            double z = 0.0;
            for (int n = 100; n >= 1; --n) {
                z += std::pow(static_cast<double>(n), -2.0 * j);
            }
            const double sign = (j % 2 == 1) ? 1.0 : -1.0;
            out[j] = sign * 2.0 * z * std::pow(two_pi, -2.0 * j);
        }
        return out;
    }();
    return table;
}

// Truncated Taylor series in δ (coefficients f^{(r)}/r!).
class jet {
public:
    explicit jet(std::size_t order) : c_(order + 1, complex{0.0, 0.0}) {}

    static jet variable(complex s0, std::size_t order)
    {
        jet j(order);
        j.c_[0] = s0;
        if (order >= 1) {
            j.c_[1] = 1.0;
        }
        return j;
    }

    // exp(-(s0 + δ) * log_base) for a real positive base.
    static jet power_neg(double log_base, complex s0, std::size_t order)
    {
        jet j(order);
        complex v = std::exp(-s0 * log_base);
        for (std::size_t r = 0; r <= order; ++r) {
            j.c_[r] = v;
            v *= -log_base / static_cast<double>(r + 1);
        }
        return j;
    }

    std::size_t order() const { return c_.size() - 1; }
    complex& operator[](std::size_t r) { return c_[r]; }
    const complex& operator[](std::size_t r) const { return c_[r]; }

    jet operator*(const jet& o) const
    {
        jet out(order());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            for (std::size_t j = 0; i + j < c_.size(); ++j) {
                out.c_[i + j] += c_[i] * o.c_[j];
            }
        }
        return out;
    }

    jet operator*(complex a) const
    {
        jet out = *this;
        for (auto& v : out.c_) {
            v *= a;
        }
        return out;
    }

    jet shifted(complex a) const
    {
        jet out = *this;
        out.c_[0] += a;
        return out;
    }

    double max_abs() const
    {
        double m = 0.0;
        for (const auto& v : c_) {
            m = std::max(m, std::abs(v));
        }
        return m;
    }

private:
    std::vector<complex> c_;
};

// Taylor coefficients of ζ at s up to the given order, by Euler-Maclaurin
// summation differentiated term by term.
inline std::vector<complex> em_zeta_taylor(complex s, std::size_t order, const eval_config& cfg)
{
    if (s == complex{1.0, 0.0}) {
        throw pole_error("zeta: pole at s = 1");
    }
    const std::size_t N =
        cfg.em_cutoff + static_cast<std::size_t>(std::ceil(1.5 * std::abs(s) / two_pi));

    std::vector<compensated_sum<complex>> acc(order + 1);
    const double sigma = s.real();
    const double t = s.imag();
    for (std::size_t n = 1; n < N; ++n) {
        const double ln = std::log(static_cast<double>(n));
        const double mag = std::exp(-sigma * ln);
        const double ph = t * ln;
        complex v{mag * std::cos(ph), -mag * std::sin(ph)};
        for (std::size_t r = 0; r <= order; ++r) {
            acc[r].add(v);
            v *= -ln / static_cast<double>(r + 1);
        }
    }

    const double log_n = std::log(static_cast<double>(N));
    const jet n_pow = jet::power_neg(log_n, s, order); // N^{-s}

    // N^{1-s} / (s - 1)
    jet inv_sm1(order);
    {
        const complex base = 1.0 / (s - 1.0);
        complex v = base;
        for (std::size_t r = 0; r <= order; ++r) {
            inv_sm1[r] = v;
            v *= -base;
        }
    }
    const jet tail = (n_pow * inv_sm1) * complex{static_cast<double>(N), 0.0};
    const jet half = n_pow * complex{0.5, 0.0};
    for (std::size_t r = 0; r <= order; ++r) {
        acc[r].add(tail[r]);
        acc[r].add(half[r]);
    }

    const auto& bern = bernoulli_over_factorial();
    const double inv_n = 1.0 / static_cast<double>(N);
    jet rising = jet::variable(s, order); // s (s+1) ... (s+2j-2)
    double n_scale = inv_n;               // N^{-(2j-1)}
    bool converged = false;
    const std::size_t max_terms = std::min<std::size_t>(cfg.em_terms, bern.size() - 1);
    for (std::size_t j = 1; j <= max_terms; ++j) {
        const jet term = (rising * n_pow) * complex{bern[j] * n_scale, 0.0};
        for (std::size_t r = 0; r <= order; ++r) {
            acc[r].add(term[r]);
        }
        if (term.max_abs() < 1e-3 * cfg.target_abs_error) {
            converged = true;
            break;
        }
        const double a = static_cast<double>(2 * j - 1);
        rising = rising * jet::variable(s, order).shifted(a);
        rising = rising * jet::variable(s, order).shifted(a + 1.0);
        n_scale *= inv_n * inv_n;
    }
    if (!converged) {
        throw numeric_error("zeta: Euler-Maclaurin series did not converge");
    }

    std::vector<complex> out(order + 1);
    for (std::size_t r = 0; r <= order; ++r) {
        out[r] = acc[r].value();
    }
    return out;
}

} // namespace detail

inline complex zeta(complex s, const eval_config& cfg = {})
{
    return detail::em_zeta_taylor(s, 0, cfg)[0];
}

// ζ(s), ζ'(s), ..., ζ^{(order)}(s).
inline std::vector<complex> zeta_derivatives(complex s, std::size_t order,
                                             const eval_config& cfg = {})
{
    auto c = detail::em_zeta_taylor(s, order, cfg);
    double fact = 1.0;
    for (std::size_t r = 1; r <= order; ++r) {
        fact *= static_cast<double>(r);
        c[r] *= fact;
    }
    return c;
}

inline complex zeta_deriv(complex s, unsigned nu, const eval_config& cfg = {})
{
    if (nu < 1) {
        throw domain_error("zeta_deriv: order must be >= 1");
    }
    return zeta_derivatives(s, nu, cfg)[nu];
}

// Z(t) from the Riemann-Siegel main sum plus correction terms C0..C_{n-1}.
inline double hardy_z_rs(double t, unsigned correction_terms = 4)
{
    if (t < two_pi) {
        throw domain_error("hardy_z_rs: requires t >= 2π");
    }
    const double a = std::sqrt(t / two_pi);
    const auto N = static_cast<std::uint64_t>(a);
    const double u = (a - static_cast<double>(N)) - 0.5;
    const double theta = rs_theta(t);

    compensated_sum<double> main;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double ln = std::log(static_cast<double>(n));
        main.add(std::cos(theta - t * ln) / std::sqrt(static_cast<double>(n)));
    }

    double rem = 0.0;
    double a_pow = 1.0;
    for (unsigned k = 0; k < std::min(correction_terms, 5U); ++k) {
        rem += detail::rs_correction(k, u) * a_pow;
        a_pow /= a;
    }
    const double sign = (N % 2 == 1) ? 1.0 : -1.0; // (-1)^{N-1}
    return 2.0 * main.value() + sign * rem / std::sqrt(a);
}

inline double hardy_z_rs_deriv(double t, unsigned correction_terms = 4)
{
    if (t < two_pi) {
        throw domain_error("hardy_z_rs_deriv: requires t >= 2π");
    }
    const double a = std::sqrt(t / two_pi);
    const auto N = static_cast<std::uint64_t>(a);
    const double u = (a - static_cast<double>(N)) - 0.5;
    const double theta = rs_theta(t);
    const double dtheta = rs_theta_prime(t);

    compensated_sum<double> main;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double ln = std::log(static_cast<double>(n));
        main.add(-std::sin(theta - t * ln) * (dtheta - ln) / std::sqrt(static_cast<double>(n)));
    }

    // R(t) = (-1)^{N-1} Σ C_k(p) a^{-k-1/2}, with da/dt = dp/dt = 1 / (4π a).
    const double da = 1.0 / (2.0 * two_pi * a);
    double drem = 0.0;
    for (unsigned k = 0; k < std::min(correction_terms, 5U); ++k) {
        const double e = static_cast<double>(k) + 0.5;
        drem += detail::rs_correction_deriv(k, u) * da * std::pow(a, -e) -
                detail::rs_correction(k, u) * e * std::pow(a, -e - 1.0) * da;
    }
    const double sign = (N % 2 == 1) ? 1.0 : -1.0;
    return 2.0 * main.value() + sign * drem;
}

inline double hardy_z_em(double t, const eval_config& cfg = {})
{
    const complex z = zeta(complex{0.5, t}, cfg);
    const double th = rs_theta(std::abs(t));
    return (std::polar(1.0, t >= 0 ? th : -th) * z).real();
}

inline double hardy_z_em_deriv(double t, const eval_config& cfg = {})
{
    const auto d = zeta_derivatives(complex{0.5, t}, 1, cfg);
    const double th = rs_theta(t);
    const double dth = rs_theta_prime(t);
    const complex i{0.0, 1.0};
    return (i * std::polar(1.0, th) * (dth * d[0] + d[1])).real();
}

// Z(t) = e^{iθ(t)} ζ(1/2 + it).
inline double hardy_z(double t, const eval_config& cfg = {})
{
    if (t < 0) {
        throw domain_error("hardy_z: t must be non-negative");
    }
    if (t >= cfg.rs_crossover()) {
        return hardy_z_rs(t, cfg.rs_correction_terms);
    }
    return hardy_z_em(t, cfg);
}

inline double hardy_z_deriv(double t, const eval_config& cfg = {})
{
    if (t < 0) {
        throw domain_error("hardy_z_deriv: t must be non-negative");
    }
    if (t >= cfg.rs_crossover()) {
        return hardy_z_rs_deriv(t, cfg.rs_correction_terms);
    }
    return hardy_z_em_deriv(t, cfg);
}

} // namespace zml

#endif // ZML_ZETA_HPP
