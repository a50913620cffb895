#ifndef ZML_RANDOM_MODEL_HPP
#define ZML_RANDOM_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "zml/compensated_sum.hpp"
#include "zml/errors.hpp"
#include "zml/majorant.hpp"
#include "zml/parallel.hpp"
#include "zml/primes.hpp"

namespace zml {

// I_0(x): power series up to 15, Hankel asymptotic expansion beyond.
inline double bessel_i0(double x)
{
    if (x < 0) {
        throw domain_error("bessel_i0: need x >= 0");
    }
    if (x <= 15.0) {
        const double q = 0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int n = 1; n < 200; ++n) {
            term *= q / (static_cast<double>(n) * static_cast<double>(n));
            sum += term;
            if (term < 1e-17 * sum) {
                break;
            }
        }
        return sum;
    }
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 40; ++n) {
        const double next = term * (2.0 * n - 1.0) * (2.0 * n - 1.0) / (8.0 * n * x);
        if (next > term) {
            break;
        }
        term = next;
        sum += term;
        if (term < 1e-17 * sum) {
            break;
        }
    }
    return std::exp(x) / std::sqrt(two_pi * x) * sum;
}

// Counter-based generator: every (seed, prime, sample) triple gets its own
// 64-bit value, so draws do not depend on thread count or evaluation order.
inline std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double uniform_angle(std::uint64_t seed, std::uint64_t prime, std::uint64_t sample)
{
    const std::uint64_t h = splitmix64(seed ^ splitmix64(prime ^ splitmix64(sample)));
    return two_pi * static_cast<double>(h >> 11) * 0x1.0p-53;
}

struct random_model_estimate {
    double analytic_value = 0.0;
    double mc_value = 0.0;
    double mc_stderr = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;
    double small_prime_correction = 1.0; // product of the p <= log T factors
    unsigned threads = 1;
};

namespace detail {

// Per-prime contribution to Σ_{n <= T^{β_j}} w_j(n) n^{-1/2} X_n: coefficient of
// Re X_p and of Re X_p².
struct prime_weights {
    std::uint64_t p;
    double a;
    double b;
};

inline std::vector<prime_weights> model_weights(unsigned j, const beta_schedule_t& sched,
                                                const prime_table& table)
{
    std::vector<prime_weights> out;
    for (unsigned i = 1; i <= j; ++i) {
        const auto g = make_dirichlet_poly(i, j, sched, table);
        for (const auto& t : g.terms) {
            auto it = std::find_if(out.begin(), out.end(),
                                   [&](const prime_weights& w) { return w.p == t.prime; });
            if (it == out.end()) {
                out.push_back({t.prime, 0.0, 0.0});
                it = out.end() - 1;
            }
            (t.exponent == 1 ? it->a : it->b) += t.coef;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const prime_weights& x, const prime_weights& y) { return x.p < y.p; });
    return out;
}

} // namespace detail

// E_φ[exp(2k(a cos φ + b cos 2φ))] by periodic trapezoid quadrature.
inline double small_prime_factor(double k, double a, double b)
{
    auto average = [&](int m) {
        compensated_sum<double> acc;
        for (int q = 0; q < m; ++q) {
            const double phi = two_pi * q / m;
            acc.add(std::exp(2.0 * k * (a * std::cos(phi) + b * std::cos(2.0 * phi))));
        }
        return acc.value() / m;
    };
    double prev = average(16);
    for (int m = 32; m <= 4096; m *= 2) {
        const double cur = average(m);
        if (std::abs(cur - prev) <= 1e-10 * std::abs(cur)) {
            return cur;
        }
        prev = cur;
    }
    throw numeric_error("small_prime_factor: quadrature did not settle after 4096 nodes");
}

// E[exp(2k Σ_{i<=j} G_{i,j}(X))] as a product over primes p <= T^{β_j}.
inline random_model_estimate expectation_exp_G(double k, unsigned j, const beta_schedule_t& sched,
                                               const prime_table& table)
{
    if (j < 1 || j > sched.I_index) {
        throw domain_error("expectation_exp_G: need 1 <= j <= I");
    }
    random_model_estimate est;
    compensated_sum<double> log_total;
    compensated_sum<double> log_small;
    for (const auto& w : detail::model_weights(j, sched, table)) {
        double f;
        if (static_cast<double>(w.p) <= sched.log_T) {
            f = small_prime_factor(k, w.a, w.b);
            log_small.add(std::log(f));
        } else {
            f = bessel_i0(2.0 * k * w.a);
        }
        log_total.add(std::log(f));
    }
    est.analytic_value = std::exp(log_total.value());
    est.small_prime_correction = std::exp(log_small.value());
    return est;
}

// Monte-Carlo estimate of the same expectation. Sample s draws φ_p from
// uniform_angle(seed, p, s); results are independent of the thread count.
inline random_model_estimate sample_random_model(double k, unsigned j, const beta_schedule_t& sched,
                                                 const prime_table& table, std::uint64_t n_samples,
                                                 std::uint64_t seed,
                                                 unsigned threads = threads_from_env())
{
    if (n_samples < 100) {
        throw domain_error("sample_random_model: need n_samples >= 100");
    }
    random_model_estimate est = expectation_exp_G(k, j, sched, table);
    const auto weights = detail::model_weights(j, sched, table);
    std::vector<double> values(n_samples);
    parallel_for(n_samples, threads, [&](std::size_t s) {
        compensated_sum<double> g;
        for (const auto& w : weights) {
            const double phi = uniform_angle(seed, w.p, s);
            g.add(w.a * std::cos(phi) + w.b * std::cos(2.0 * phi));
        }
        values[s] = std::exp(2.0 * k * g.value());
    });
    const double mean = tree_sum(values) / static_cast<double>(n_samples);
    std::vector<double> dev(n_samples);
    for (std::size_t s = 0; s < n_samples; ++s) {
        dev[s] = (values[s] - mean) * (values[s] - mean);
    }
    const double var = tree_sum(dev) / static_cast<double>(n_samples - 1);
    est.mc_value = mean;
    est.mc_stderr = std::sqrt(var / static_cast<double>(n_samples));
    est.n_samples = n_samples;
    est.seed = seed;
    est.threads = std::max(1U, threads);
    return est;
}

enum class moment_mode { exact, mc };

inline constexpr unsigned max_exact_mixed_order = 12;

struct mixed_moment_result {
    double value = 0.0;
    double stderr_ = 0.0; // zero in exact mode
    moment_mode mode = moment_mode::exact;
};

// E[Π_i G_{i,j}(X)^{ℓ_i}] for ℓ = (ℓ_1, ..., ℓ_j).
//
// Exact mode: expanding each power over primes, the expectation factorizes
// prime by prime into constant terms of trigonometric polynomials in φ_p; a
// dynamic program over primes accumulates the multinomial weights.
inline mixed_moment_result mixed_moment_expectation(const std::vector<unsigned>& ell, unsigned j,
                                                    const beta_schedule_t& sched,
                                                    const prime_table& table,
                                                    moment_mode mode = moment_mode::exact,
                                                    std::uint64_t n_samples = 100000,
                                                    std::uint64_t seed = 1,
                                                    unsigned threads = threads_from_env())
{
    if (ell.size() > j || j < 1 || j > sched.I_index) {
        throw domain_error("mixed_moment_expectation: need |ell| <= j <= I");
    }
    std::vector<unsigned> l(ell);
    l.resize(j, 0);
    unsigned total = 0;
    for (unsigned v : l) {
        total += v;
    }

    // Per prime, per interval i: coefficients of cos φ and cos 2φ.
    struct prime_rows {
        std::uint64_t p;
        std::vector<double> a;
        std::vector<double> b;
    };
    std::vector<prime_rows> rows;
    for (unsigned i = 1; i <= j; ++i) {
        if (l[i - 1] == 0) {
            continue;
        }
        for (const auto& t : make_dirichlet_poly(i, j, sched, table).terms) {
            auto it = std::find_if(rows.begin(), rows.end(),
                                   [&](const prime_rows& r) { return r.p == t.prime; });
            if (it == rows.end()) {
                rows.push_back({t.prime, std::vector<double>(j, 0.0), std::vector<double>(j, 0.0)});
                it = rows.end() - 1;
            }
            (t.exponent == 1 ? it->a : it->b)[i - 1] += t.coef;
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const prime_rows& x, const prime_rows& y) { return x.p < y.p; });

    mixed_moment_result out;
    out.mode = mode;
    if (total == 0) {
        out.value = 1.0;
        return out;
    }

    if (mode == moment_mode::mc) {
        std::vector<double> values(n_samples);
        parallel_for(n_samples, threads, [&](std::size_t s) {
            std::vector<double> g(j, 0.0);
            for (const auto& r : rows) {
                const double phi = uniform_angle(seed, r.p, s);
                const double c1 = std::cos(phi);
                const double c2 = std::cos(2.0 * phi);
                for (unsigned i = 0; i < j; ++i) {
                    g[i] += r.a[i] * c1 + r.b[i] * c2;
                }
            }
            double v = 1.0;
            for (unsigned i = 0; i < j; ++i) {
                for (unsigned e = 0; e < l[i]; ++e) {
                    v *= g[i];
                }
            }
            values[s] = v;
        });
        const double mean = tree_sum(values) / static_cast<double>(n_samples);
        std::vector<double> dev(n_samples);
        for (std::size_t s = 0; s < n_samples; ++s) {
            dev[s] = (values[s] - mean) * (values[s] - mean);
        }
        out.value = mean;
        out.stderr_ = std::sqrt(tree_sum(dev) / static_cast<double>(n_samples - 1) /
                                static_cast<double>(n_samples));
        return out;
    }

    if (total > max_exact_mixed_order) {
        throw capacity_error("mixed_moment_expectation: exact mode supports sum(ell) <= " +
                             std::to_string(max_exact_mixed_order));
    }

    // States are mixed-radix encodings of the per-interval counts used so far.
    std::vector<std::size_t> radix(j);
    std::size_t n_states = 1;
    for (unsigned i = 0; i < j; ++i) {
        radix[i] = n_states;
        n_states *= l[i] + 1;
    }
    auto decode = [&](std::size_t s) {
        std::vector<unsigned> u(j);
        for (unsigned i = 0; i < j; ++i) {
            u[i] = static_cast<unsigned>((s / radix[i]) % (l[i] + 1));
        }
        return u;
    };
    std::vector<double> inv_fact(max_exact_mixed_order + 1, 1.0);
    for (unsigned m = 1; m <= max_exact_mixed_order; ++m) {
        inv_fact[m] = inv_fact[m - 1] / m;
    }

    // Laurent coefficients in z = e^{iφ}, offset so index D is z^0. All
    // coefficients are nonnegative, so constant terms carry no cancellation.
    const int D = 2 * static_cast<int>(total);
    auto constant_term = [&](const prime_rows& r, const std::vector<unsigned>& mv) {
        std::vector<double> poly(2 * D + 1, 0.0);
        poly[D] = 1.0;
        std::vector<double> next(2 * D + 1);
        for (unsigned i = 0; i < j; ++i) {
            for (unsigned e = 0; e < mv[i]; ++e) {
                std::fill(next.begin(), next.end(), 0.0);
                for (int f = 0; f <= 2 * D; ++f) {
                    if (poly[f] == 0.0) {
                        continue;
                    }
                    const double v = poly[f];
                    if (f - 1 >= 0) next[f - 1] += 0.5 * r.a[i] * v;
                    if (f + 1 <= 2 * D) next[f + 1] += 0.5 * r.a[i] * v;
                    if (f - 2 >= 0) next[f - 2] += 0.5 * r.b[i] * v;
                    if (f + 2 <= 2 * D) next[f + 2] += 0.5 * r.b[i] * v;
                }
                poly.swap(next);
            }
        }
        return poly[D];
    };

    std::vector<double> dp(n_states, 0.0);
    dp[0] = 1.0;
    for (const auto& r : rows) {
        // E_φ[Π_i g_i(φ)^{m_i}] / Π_i m_i! for every choice m (again encoded as a state).
        std::vector<double> local(n_states, 0.0);
        for (std::size_t m = 0; m < n_states; ++m) {
            const auto mv = decode(m);
            double w = constant_term(r, mv);
            for (unsigned i = 0; i < j; ++i) {
                w *= inv_fact[mv[i]];
            }
            local[m] = w;
        }
        std::vector<double> next(n_states, 0.0);
        for (std::size_t s = 0; s < n_states; ++s) {
            if (dp[s] == 0.0) {
                continue;
            }
            const auto u = decode(s);
            for (std::size_t m = 0; m < n_states; ++m) {
                if (local[m] == 0.0) {
                    continue;
                }
                const auto mv = decode(m);
                bool fits = true;
                std::size_t target = 0;
                for (unsigned i = 0; i < j; ++i) {
                    if (u[i] + mv[i] > l[i]) {
                        fits = false;
                        break;
                    }
                    target += (u[i] + mv[i]) * radix[i];
                }
                if (fits) {
                    next[target] += dp[s] * local[m];
                }
            }
        }
        dp.swap(next);
    }
    double value = dp[n_states - 1];
    for (unsigned i = 0; i < j; ++i) {
        for (unsigned m = 2; m <= l[i]; ++m) {
            value *= m;
        }
    }
    out.value = value;
    return out;
}

} // namespace zml

#endif // ZML_RANDOM_MODEL_HPP
