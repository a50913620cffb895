#ifndef ZML_MOMENTS_HPP
#define ZML_MOMENTS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "zml/compensated_sum.hpp"
#include "zml/conjecture.hpp"
#include "zml/errors.hpp"
#include "zml/parallel.hpp"
#include "zml/primes.hpp"
#include "zml/zeros.hpp"
#include "zml/zeta.hpp"

namespace zml {

enum class moment_kind { jk, shifted, deriv, continuous };

inline const char* to_string(moment_kind k)
{
    switch (k) {
    case moment_kind::jk: return "JK";
    case moment_kind::shifted: return "SHIFTED";
    case moment_kind::deriv: return "DERIV";
    default: return "CONTINUOUS";
    }
}

struct moment_result {
    moment_kind kind = moment_kind::jk;
    double k = 0.0;
    unsigned nu = 1;
    complex alpha{0.0, 0.0};
    double t_lo = 0.0;
    double t_hi = 0.0;
    double count_or_length = 0.0;
    double value = 0.0;
    double predicted = 0.0;
    double ratio = 0.0;
};

inline constexpr std::uint64_t default_ck_cutoff = 10000;

// C_k with the default prime cutoff, or 1 for k = 0.
inline conjecture_constant default_conjecture_constant(double k)
{
    if (k == 0.0) {
        return {};
    }
    static const prime_table table = sieve_primes(4 * default_ck_cutoff);
    return c_k(k, default_ck_cutoff, table);
}

inline std::pair<std::size_t, std::size_t> checked_window(const zero_list& zeros, double t_lo,
                                                          double t_hi)
{
    if (!(t_lo < t_hi)) {
        throw domain_error("moment window: need t_lo < t_hi");
    }
    if (!zeros.covers(t_lo, t_hi)) {
        throw coverage_error("moment window (" + std::to_string(t_lo) + ", " +
                             std::to_string(t_hi) + "] is not covered by the zero list");
    }
    const auto r = zeros.range(t_lo, t_hi);
    if (r.first == r.second) {
        throw empty_range_error("moment window contains no zeros");
    }
    return r;
}

inline double jk_sum(const zero_list& zeros, std::size_t lo, std::size_t hi, double k)
{
    compensated_sum<double> acc;
    for (std::size_t i = lo; i < hi; ++i) {
        acc.add(std::pow(zeros[i].abs_zeta_prime, 2.0 * k));
    }
    return acc.value();
}

// J_k = (1/N) Σ_{t_lo < γ <= t_hi} |ζ'(ρ)|^{2k}, compared with C_k (log t_hi)^{k(k+2)}.
inline moment_result discrete_moment_jk(const zero_list& zeros, double k, double t_lo, double t_hi,
                                        const std::optional<conjecture_constant>& constant = std::nullopt)
{
    if (!(k >= 0)) {
        throw domain_error("discrete_moment_jk: need k >= 0");
    }
    const auto [lo, hi] = checked_window(zeros, t_lo, t_hi);
    moment_result m;
    m.kind = moment_kind::jk;
    m.k = k;
    m.t_lo = t_lo;
    m.t_hi = t_hi;
    m.count_or_length = static_cast<double>(hi - lo);
    m.value = jk_sum(zeros, lo, hi, k) / m.count_or_length;
    const double T = std::max(t_hi, 10.0);
    m.predicted = predicted_jk(k, T, constant ? *constant : default_conjecture_constant(k));
    m.ratio = m.value / m.predicted;
    return m;
}

// (1/N) Σ |ζ(ρ + α)|^{2k} with |α| <= 1/log t_hi, compared with (log T)^{k²}.
inline moment_result shifted_moment(const zero_list& zeros, double k, complex alpha, double t_lo,
                                    double t_hi, const eval_config& cfg = {},
                                    unsigned threads = threads_from_env())
{
    if (!(k >= 0)) {
        throw domain_error("shifted_moment: need k >= 0");
    }
    const double log_T = std::log(t_hi);
    if (std::abs(alpha) > (1.0 + 1e-12) / log_T) {
        throw domain_error("shifted_moment: |alpha| exceeds 1/log T");
    }
    const auto [lo, hi] = checked_window(zeros, t_lo, t_hi);
    moment_result m;
    m.kind = moment_kind::shifted;
    m.k = k;
    m.alpha = alpha;
    m.t_lo = t_lo;
    m.t_hi = t_hi;
    m.count_or_length = static_cast<double>(hi - lo);
    if (k == 0.0) {
        m.value = 1.0;
    } else if (alpha == complex{0.0, 0.0}) {
        m.value = 0.0; // ζ(ρ) = 0
    } else {
        const auto values = parallel_map<double>(hi - lo, threads, [&](std::size_t i) {
            const complex s = complex{0.5, zeros[lo + i].gamma} + alpha;
            return std::pow(std::abs(zeta(s, cfg)), 2.0 * k);
        });
        m.value = kahan_total(values) / m.count_or_length;
    }
    m.predicted = std::pow(log_T, k * k);
    m.ratio = m.value / m.predicted;
    return m;
}

// ζ^{(ν)}(s0) from ν!/(M r^ν) Σ_m ζ(s0 + r e^{iθ_m}) e^{-iνθ_m}, θ_m = 2πm/M.
inline complex cauchy_derivative(complex s0, unsigned nu, double radius, unsigned nodes,
                                 const eval_config& cfg = {})
{
    compensated_sum<complex> acc;
    for (unsigned m = 0; m < nodes; ++m) {
        const double th = two_pi * m / nodes;
        acc.add(zeta(s0 + std::polar(radius, th), cfg) * std::polar(1.0, -static_cast<double>(nu) * th));
    }
    double fact = 1.0;
    for (unsigned i = 2; i <= nu; ++i) {
        fact *= i;
    }
    const complex v = acc.value() * fact / (static_cast<double>(nodes) * std::pow(radius, nu));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw numeric_error("cauchy_derivative: quadrature produced a non-finite value");
    }
    return v;
}

struct derivative_moment_report {
    moment_result direct;           // (1/N) Σ |ζ^{(ν)}(ρ)|^{2k}
    double cauchy_bound = 0.0;      // (ν!)^{2k} (2π)^{-2k} (log T)^{2k(ν+1)} · mean (∮|ζ||ds|)^{2k}
    double circle_max_moment = 0.0; // mean over zeros of max_circle |ζ|^{2k}
    double max_reconstruction_error = 0.0; // max relative |Cauchy - direct| of ζ^{(ν)}(ρ)
    unsigned nodes = 64;
    double radius = 0.0;
};

// Moments of ζ^{(ν)} at zeros together with the circle-of-radius-1/log T bound.
inline derivative_moment_report derivative_moment(const zero_list& zeros, double k, unsigned nu,
                                                  double t_lo, double t_hi,
                                                  const eval_config& cfg = {}, unsigned nodes = 64,
                                                  unsigned threads = threads_from_env())
{
    if (!(k >= 0.5) || nu < 1) {
        throw domain_error("derivative_moment: need k >= 1/2 and nu >= 1");
    }
    const auto [lo, hi] = checked_window(zeros, t_lo, t_hi);
    const double log_T = std::log(t_hi);
    const double r = 1.0 / log_T;
    const std::size_t n = hi - lo;

    struct per_zero {
        double direct;
        double pipeline;
        double circle_max;
        double recon_err;
    };
    const auto rows = parallel_map<per_zero>(n, threads, [&](std::size_t i) {
        const auto& rec = zeros[lo + i];
        const complex rho{0.5, rec.gamma};
        per_zero out{};
        const complex d = nu == 1 ? complex{rec.abs_zeta_prime, 0.0}
                                  : zeta_derivatives(rho, nu, cfg)[nu];
        out.direct = std::pow(std::abs(d), 2.0 * k);
        compensated_sum<double> line;
        compensated_sum<complex> recon;
        double mx = 0.0;
        for (unsigned m = 0; m < nodes; ++m) {
            const double th = two_pi * m / nodes;
            const complex z = zeta(rho + std::polar(r, th), cfg);
            line.add(std::abs(z));
            mx = std::max(mx, std::abs(z));
            recon.add(z * std::polar(1.0, -static_cast<double>(nu) * th));
        }
        const double integral = two_pi * r * line.value() / nodes;
        out.pipeline = std::pow(integral, 2.0 * k);
        out.circle_max = std::pow(mx, 2.0 * k);
        double fact = 1.0;
        for (unsigned q = 2; q <= nu; ++q) {
            fact *= q;
        }
        const complex rec_d = recon.value() * fact / (static_cast<double>(nodes) * std::pow(r, nu));
        const complex ref = nu == 1 ? zeta_derivatives(rho, 1, cfg)[1] : d;
        out.recon_err = std::abs(rec_d - ref) / std::abs(ref);
        return out;
    });

    derivative_moment_report rep;
    rep.nodes = nodes;
    rep.radius = r;
    compensated_sum<double> direct;
    compensated_sum<double> pipeline;
    compensated_sum<double> cmax;
    for (const auto& row : rows) {
        direct.add(row.direct);
        pipeline.add(row.pipeline);
        cmax.add(row.circle_max);
        rep.max_reconstruction_error = std::max(rep.max_reconstruction_error, row.recon_err);
    }
    double fact = 1.0;
    for (unsigned q = 2; q <= nu; ++q) {
        fact *= q;
    }
    const double N = static_cast<double>(n);
    auto& m = rep.direct;
    m.kind = moment_kind::deriv;
    m.k = k;
    m.nu = nu;
    m.t_lo = t_lo;
    m.t_hi = t_hi;
    m.count_or_length = N;
    // ν = 1 is J_k itself, summed the same way so the two agree to the bit.
    m.value = nu == 1 ? jk_sum(zeros, lo, hi, k) / N : direct.value() / N;
    rep.cauchy_bound = std::pow(fact, 2.0 * k) * std::pow(two_pi, -2.0 * k) *
                       std::pow(log_T, 2.0 * k * (nu + 1.0)) * pipeline.value() / N;
    rep.circle_max_moment = cmax.value() / N;
    m.predicted = rep.cauchy_bound;
    m.ratio = m.value / m.predicted;
    return rep;
}

// I_k(T) = (1/T) ∫_0^T |ζ(1/2 + it)|^{2k} dt by composite Simpson with h <= step.
inline moment_result continuous_moment_ik(double k, double T, double step, const eval_config& cfg = {},
                                          unsigned threads = threads_from_env())
{
    if (!(k >= 0) || !(step > 0) || step > 0.01 || !(T > 0)) {
        throw domain_error("continuous_moment_ik: need k >= 0, 0 < step <= 0.01, T > 0");
    }
    moment_result m;
    m.kind = moment_kind::continuous;
    m.k = k;
    m.t_lo = 0.0;
    m.t_hi = T;
    m.count_or_length = T;
    m.predicted = T > 1.0 ? std::pow(std::log(T), k * k) : 1.0;
    if (k == 0.0) {
        m.value = 1.0;
        m.ratio = m.value / m.predicted;
        return m;
    }
    std::size_t n = static_cast<std::size_t>(std::ceil(T / step));
    n += n % 2;
    const double h = T / static_cast<double>(n);
    auto f = [&](std::size_t i) {
        const double t = h * static_cast<double>(i);
        return std::pow(std::abs(hardy_z(t, cfg)), 2.0 * k);
    };
    // Fixed chunking keeps the reduction order independent of the thread count.
    constexpr std::size_t chunk = 4096;
    const std::size_t n_chunks = (n + 1 + chunk - 1) / chunk;
    const auto partial = parallel_map<double>(n_chunks, threads, [&](std::size_t c) {
        compensated_sum<double> acc;
        const std::size_t end = std::min(n + 1, (c + 1) * chunk);
        for (std::size_t i = c * chunk; i < end; ++i) {
            const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc.add(w * f(i));
        }
        return acc.value();
    });
    m.value = kahan_total(partial) * h / 3.0 / T;
    m.ratio = m.value / m.predicted;
    return m;
}

inline constexpr int clt_bins = 50;
inline constexpr double clt_range = 5.0;

struct clt_histogram {
    std::array<std::size_t, clt_bins> counts{};

    static double bin_lo(int b) { return -clt_range + 2.0 * clt_range * b / clt_bins; }
    static double bin_hi(int b) { return bin_lo(b + 1); }
};

struct clt_stats {
    std::size_t count = 0;
    std::size_t excluded_degenerate = 0;
    double loglog_T = 0.0;
    double mean = 0.0;     // of log|ζ'(ρ)|
    double variance = 0.0; // sample variance of log|ζ'(ρ)|
    double ks_distance = 0.0;           // theoretical standardization (loglog T, ½ loglog T)
    double ks_distance_empirical = 0.0; // sample mean and variance
    double standardized_mean = 0.0;     // theoretical standardization
    double standardized_variance = 0.0;
    clt_histogram histogram;            // theoretical standardization
    clt_histogram histogram_empirical;
};

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

inline double ks_to_normal(std::vector<double> z)
{
    std::sort(z.begin(), z.end());
    const double n = static_cast<double>(z.size());
    double d = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double F = normal_cdf(z[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - F, F - static_cast<double>(i) / n});
    }
    return d;
}

// Distribution of log|ζ'(ρ)| over t_lo < γ <= t_hi standardized as
// (log|ζ'(ρ)| - log log T) / sqrt(½ log log T), T = t_hi, and empirically.
inline clt_stats hejhal_clt_stats(const zero_list& zeros, double t_lo, double t_hi)
{
    const auto [lo, hi] = checked_window(zeros, t_lo, t_hi);
    clt_stats s;
    std::vector<double> x;
    x.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) {
        if (zeros[i].degenerate()) {
            ++s.excluded_degenerate;
            continue;
        }
        x.push_back(std::log(zeros[i].abs_zeta_prime));
    }
    if (x.size() < 100) {
        throw empty_range_error("hejhal_clt_stats: window needs at least 100 zeros");
    }
    s.count = x.size();
    const double n = static_cast<double>(x.size());
    s.mean = kahan_total(x) / n;
    compensated_sum<double> var;
    for (double v : x) {
        var.add((v - s.mean) * (v - s.mean));
    }
    s.variance = var.value() / (n - 1.0);
    s.loglog_T = std::log(std::log(t_hi));

    const double scale = std::sqrt(0.5 * s.loglog_T);
    const double sd = std::sqrt(s.variance);
    std::vector<double> zt(x.size());
    std::vector<double> ze(x.size());
    auto bin = [](double z) {
        if (z < -clt_range || z >= clt_range) {
            return -1;
        }
        return std::min(clt_bins - 1, static_cast<int>((z + clt_range) / (2.0 * clt_range) * clt_bins));
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
        zt[i] = (x[i] - s.loglog_T) / scale;
        ze[i] = (x[i] - s.mean) / sd;
        if (int b = bin(zt[i]); b >= 0) {
            ++s.histogram.counts[static_cast<std::size_t>(b)];
        }
        if (int b = bin(ze[i]); b >= 0) {
            ++s.histogram_empirical.counts[static_cast<std::size_t>(b)];
        }
    }
    s.standardized_mean = (s.mean - s.loglog_T) / scale;
    s.standardized_variance = s.variance / (scale * scale);
    s.ks_distance = ks_to_normal(zt);
    s.ks_distance_empirical = ks_to_normal(ze);
    return s;
}

struct dyadic_window {
    unsigned i = 0;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
    double sum = 0.0; // Σ |ζ'(ρ)|^{2k}, unnormalized
};

struct dyadic_result {
    std::vector<dyadic_window> windows;
    double recombined = 0.0; // Σ sums / Σ counts
    std::size_t total_count = 0;
};

// Splits (0, T] into (T/2^i, T/2^{i-1}], i = 1, 2, ..., down to T/2^i < 1.
inline dyadic_result dyadic_jk(double k, double T, const zero_list& zeros)
{
    if (!(T > 1.0) || !zeros.covers(0.0, T)) {
        throw coverage_error("dyadic_jk: zero list must cover (0, T]");
    }
    dyadic_result r;
    compensated_sum<double> total;
    double hi = T;
    for (unsigned i = 1;; ++i) {
        const double lo = T / std::ldexp(1.0, static_cast<int>(i));
        dyadic_window w;
        w.i = i;
        w.lo = lo < 1.0 ? 0.0 : lo;
        w.hi = hi;
        const auto [a, b] = zeros.range(w.lo, w.hi);
        w.count = b - a;
        w.sum = jk_sum(zeros, a, b, k);
        total.add(w.sum);
        r.total_count += w.count;
        r.windows.push_back(w);
        if (lo < 1.0) {
            break;
        }
        hi = lo;
    }
    if (r.total_count == 0) {
        throw empty_range_error("dyadic_jk: no zeros in (0, T]");
    }
    r.recombined = total.value() / static_cast<double>(r.total_count);
    return r;
}

} // namespace zml

#endif // ZML_MOMENTS_HPP
