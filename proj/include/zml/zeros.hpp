#ifndef ZML_ZEROS_HPP
#define ZML_ZEROS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "zml/errors.hpp"
#include "zml/parallel.hpp"
#include "zml/zeta.hpp"

namespace zml {

inline constexpr double max_zero_height = 1.0e6;
inline constexpr double degenerate_zeta_prime = 1.0e-6;
inline constexpr double max_gamma_error = 1.0e-9;
inline constexpr unsigned max_refinement_depth = 8;

struct zero_record {
    std::uint64_t index = 0;
    double gamma = 0.0;
    double abs_zeta_prime = 0.0;
    double gamma_error = 0.0;

    bool degenerate() const noexcept { return abs_zeta_prime < degenerate_zeta_prime; }
    friend bool operator==(const zero_record&, const zero_record&) = default;
};

struct zero_list {
    std::vector<zero_record> records;
    double t_lo = 0.0;
    double t_hi = 0.0;
    std::uint64_t eval_config_hash = 0;
    bool config_mismatch = false; // set by load_zeros when the stored hash differs

    std::size_t size() const noexcept { return records.size(); }
    bool empty() const noexcept { return records.empty(); }
    auto begin() const noexcept { return records.begin(); }
    auto end() const noexcept { return records.end(); }
    const zero_record& operator[](std::size_t i) const { return records[i]; }

    bool covers(double a, double b) const noexcept { return t_lo <= a && b <= t_hi; }

    // Records with a < gamma <= b.
    std::pair<std::size_t, std::size_t> range(double a, double b) const
    {
        auto lo = std::upper_bound(records.begin(), records.end(), a,
            [](double v, const zero_record& r) { return v < r.gamma; });
        auto hi = std::upper_bound(records.begin(), records.end(), b,
            [](double v, const zero_record& r) { return v < r.gamma; });
        if (hi < lo) {
            hi = lo;
        }
        return {static_cast<std::size_t>(lo - records.begin()),
                static_cast<std::size_t>(hi - records.begin())};
    }

    std::size_t count_in(double a, double b) const
    {
        const auto [lo, hi] = range(a, b);
        return hi - lo;
    }

    std::size_t degenerate_count() const
    {
        return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
            [](const zero_record& r) { return r.degenerate(); }));
    }
};

// Principal branch of the Lambert W function for x >= -1/e.
inline double lambert_w0(double x)
{
    if (x < -1.0 / std::numbers::e) {
        throw domain_error("lambert_w0: argument below -1/e");
    }
    double w = x < 1.0 ? std::log1p(x) : std::log(x) - std::log(std::max(1.0, std::log(x)));
    if (x < -0.3) {
        w = -1.0 + std::sqrt(2.0 * (1.0 + std::numbers::e * x));
    }
    for (int i = 0; i < 60; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        if (denom == 0.0) {
            break;
        }
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) {
            break;
        }
    }
    return w;
}

// The unique t >= 7 with θ(t) = nπ.
inline double gram_point(long long n)
{
    if (n < -1) {
        throw domain_error("gram_point: n must be >= -1");
    }
    const double m = static_cast<double>(n) + 0.125;
    double t = two_pi * std::exp(1.0 + lambert_w0(m / std::numbers::e));
    t = std::max(t, 7.0);
    const double target = static_cast<double>(n) * std::numbers::pi;
    for (int it = 0; it < 50; ++it) {
        const double step = (rs_theta(t) - target) / rs_theta_prime(t);
        t = std::max(7.0, t - step);
        if (std::abs(step) <= 1e-12 * std::max(1.0, t)) {
            return t;
        }
    }
    throw numeric_error("gram_point: Newton iteration did not converge for n = " +
                        std::to_string(n));
}

// θ(T)/π + 1, the smooth part of the zero-counting function.
inline double count_zeros_rvm(double T)
{
    if (T < 10.0) {
        throw domain_error("count_zeros_rvm: T must be >= 10");
    }
    return rs_theta(T) / std::numbers::pi + 1.0;
}

namespace detail {

inline bool positive(double z) { return !std::signbit(z); }

struct bracket {
    double lo;
    double hi;
    double z_lo;
    double z_hi;
};

// Sign-change brackets inside one Gram block [g_first, g_last], refining the
// sample grid by halving until the expected number of sign changes appears.
inline std::vector<bracket> scan_block(long long first, long long last,
                                       const std::vector<double>& gram,
                                       const std::vector<double>& zval, long long base,
                                       const eval_config& cfg)
{
    const long long expected = last - first;
    std::vector<double> xs;
    std::vector<double> zs;
    for (unsigned depth = 0; depth <= max_refinement_depth; ++depth) {
        const long long parts = 1LL << depth;
        xs.clear();
        zs.clear();
        for (long long n = first; n < last; ++n) {
            const double g0 = gram[static_cast<std::size_t>(n - base)];
            const double g1 = gram[static_cast<std::size_t>(n + 1 - base)];
            xs.push_back(g0);
            zs.push_back(zval[static_cast<std::size_t>(n - base)]);
            for (long long q = 1; q < parts; ++q) {
                const double x = g0 + (g1 - g0) * static_cast<double>(q) / static_cast<double>(parts);
                xs.push_back(x);
                zs.push_back(hardy_z(x, cfg));
            }
        }
        xs.push_back(gram[static_cast<std::size_t>(last - base)]);
        zs.push_back(zval[static_cast<std::size_t>(last - base)]);

        std::vector<bracket> found;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            if (positive(zs[i]) != positive(zs[i + 1])) {
                found.push_back({xs[i], xs[i + 1], zs[i], zs[i + 1]});
            }
        }
        if (static_cast<long long>(found.size()) == expected) {
            return found;
        }
    }
    throw missing_zero_error("find_zeros: Gram block [g_" + std::to_string(first) + ", g_" +
                                 std::to_string(last) + "] should hold " +
                                 std::to_string(expected) +
                                 " zeros but the sign pattern stayed deficient after " +
                                 std::to_string(max_refinement_depth) + " halvings",
                             first, last);
}

inline zero_record refine_zero(const bracket& b, const eval_config& cfg)
{
    const double width = std::max(1e-10, 8.0 * std::numeric_limits<double>::epsilon() * b.hi);
    auto f = [&cfg](double t) { return hardy_z(t, cfg); };
    auto tol = [width](double lo, double hi) { return std::abs(hi - lo) <= width; };
    std::uintmax_t iters = 200;
    const auto [lo, hi] =
        boost::math::tools::toms748_solve(f, b.lo, b.hi, b.z_lo, b.z_hi, tol, iters);
    zero_record r;
    r.gamma = 0.5 * (lo + hi);
    r.gamma_error = std::max(hi - r.gamma, r.gamma - lo);
    if (r.gamma_error > max_gamma_error) {
        throw numeric_error("find_zeros: root refinement stalled near t = " +
                            std::to_string(r.gamma));
    }
    r.abs_zeta_prime = std::abs(hardy_z_deriv(r.gamma, cfg));
    return r;
}

} // namespace detail

// Every zero 1/2 + iγ with t_lo < γ <= t_hi, found by scanning Z between good
// Gram points ((-1)^n Z(g_n) > 0) and checking each block's count.
inline zero_list find_zeros(double t_lo, double t_hi, const eval_config& cfg = {},
                            unsigned threads = threads_from_env())
{
    cfg.validate();
    if (!(t_lo >= 0) || !(t_lo < t_hi) || t_hi > max_zero_height) {
        throw domain_error("find_zeros: need 0 <= t_lo < t_hi <= 1e6");
    }

    const double g_minus1 = gram_point(-1);
    long long a = t_lo <= g_minus1
        ? -1
        : std::max(-1LL, static_cast<long long>(std::floor(rs_theta(t_lo) / std::numbers::pi)));
    long long b = std::max(a + 1, static_cast<long long>(std::ceil(rs_theta(t_hi) / std::numbers::pi)));

    auto good = [](long long n, double z) { return (n % 2 == 0) ? z > 0 : z < 0; };
    auto z_at = [&cfg](long long n) { return hardy_z(gram_point(n), cfg); };
    while (a > -1 && !good(a, z_at(a))) {
        --a;
    }
    while (!good(b, z_at(b))) {
        ++b;
    }

    const std::size_t npts = static_cast<std::size_t>(b - a + 1);
    std::vector<double> gram(npts);
    std::vector<double> zval(npts);
    parallel_for(npts, threads, [&](std::size_t i) {
        gram[i] = gram_point(a + static_cast<long long>(i));
        zval[i] = hardy_z(gram[i], cfg);
    });

    std::vector<std::pair<long long, long long>> blocks;
    long long prev = a;
    for (long long n = a + 1; n <= b; ++n) {
        if (good(n, zval[static_cast<std::size_t>(n - a)])) {
            blocks.emplace_back(prev, n);
            prev = n;
        }
    }

    std::vector<std::vector<detail::bracket>> per_block(blocks.size());
    parallel_for(blocks.size(), threads, [&](std::size_t i) {
        per_block[i] = detail::scan_block(blocks[i].first, blocks[i].second, gram, zval, a, cfg);
    });
    std::vector<detail::bracket> brackets;
    brackets.reserve(npts);
    for (auto& v : per_block) {
        brackets.insert(brackets.end(), v.begin(), v.end());
    }

    std::vector<zero_record> all(brackets.size());
    parallel_for(brackets.size(), threads,
                 [&](std::size_t i) { all[i] = detail::refine_zero(brackets[i], cfg); });

    zero_list out;
    out.t_lo = t_lo;
    out.t_hi = t_hi;
    out.eval_config_hash = cfg.hash();
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i].index = static_cast<std::uint64_t>(a + 2 + static_cast<long long>(i));
        if (all[i].gamma > t_lo && all[i].gamma <= t_hi) {
            out.records.push_back(all[i]);
        }
    }
    return out;
}

// Checks ordering, index continuity, per-record bounds, and that the count
// agrees with θ/π + 1 up to the fluctuation allowed by S(T).
inline void validate_zero_list(const zero_list& list, double count_slack = 3.0)
{
    if (!(list.t_lo >= 0) || !(list.t_lo < list.t_hi)) {
        throw malformed_file_error("zero list: invalid window bounds");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& r = list[i];
        if (!(r.gamma > 0) || !(r.gamma_error <= max_gamma_error) || !(r.abs_zeta_prime > 0)) {
            throw malformed_file_error("zero list: record " + std::to_string(i) +
                                       " violates per-zero bounds");
        }
        if (r.gamma <= list.t_lo || r.gamma > list.t_hi) {
            throw malformed_file_error("zero list: record " + std::to_string(i) +
                                       " lies outside the window");
        }
        if (i > 0 && (r.gamma <= list[i - 1].gamma || r.index != list[i - 1].index + 1)) {
            throw malformed_file_error("zero list: records not consecutive at " +
                                       std::to_string(i));
        }
    }
    auto smooth = [](double t) { return t < 14.0 ? 0.0 : count_zeros_rvm(t); };
    const double predicted = smooth(list.t_hi) - smooth(list.t_lo);
    if (std::abs(static_cast<double>(list.size()) - predicted) > count_slack) {
        throw malformed_file_error("zero list: count " + std::to_string(list.size()) +
                                   " is far from the predicted " + std::to_string(predicted));
    }
}

} // namespace zml

#endif // ZML_ZEROS_HPP
