#ifndef ZML_VERIFY_HPP
#define ZML_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "zml/conjecture.hpp"
#include "zml/landau.hpp"
#include "zml/majorant.hpp"
#include "zml/moments.hpp"
#include "zml/random_model.hpp"
#include "zml/reference_zeros.hpp"
#include "zml/report.hpp"
#include "zml/zeros.hpp"

namespace zml {

// Heights and parameters of the acceptance suite.
struct acceptance_options {
    eval_config cfg;
    unsigned threads = threads_from_env();
    double trend_T_lo = 1e3;
    double trend_T_hi = 1e5;
    double timed_T = 1e4;
    double runtime_limit_s = 60.0;
    std::uint64_t mc_samples = 100000;
    std::uint64_t mc_seed = 12345;
    std::uint64_t mixed_seed = 7;
};

inline constexpr int acceptance_criteria = 10;

inline const char* criterion_title(int c)
{
    static const char* titles[] = {
        "",
        "zeros: oracle ordinates, N(1000) = 649, runtime",
        "|Z'(gamma)| vs |zeta'(rho)| on the Euler-Maclaurin path",
        "C_1 = 1/12, euler_factor(1, p) = 1, cutoff doubling",
        "Landau sums on (1000, 2000]",
        "random model: analytic vs Monte Carlo",
        "majorant slack over the first 10^4 zeros",
        "moment laws and dyadic recombination",
        "trend checks at 10^3 and 10^5",
        "Cauchy reconstruction and derivative report",
        "shifted moments on |alpha| = 1/log T",
    };
    return (c >= 1 && c <= acceptance_criteria) ? titles[c] : "";
}

namespace detail {

inline check make_check(int criterion, std::string name, bool pass, double observed, double expected,
                        double tolerance, std::string note = {})
{
    return check{criterion, std::move(name), pass, observed, expected, tolerance, std::move(note)};
}

// Relative error, zero when both sides vanish.
inline double rel_err(double a, double b)
{
    const double d = std::abs(a - b);
    return d == 0.0 ? 0.0 : d / std::max(std::abs(a), std::abs(b));
}

} // namespace detail

inline std::vector<check> verify_zeros(const acceptance_options& opt)
{
    std::vector<check> out;
    const auto t0 = std::chrono::steady_clock::now();
    const zero_list z = find_zeros(0.0, opt.timed_T, opt.cfg, 1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    double max_dg = 0.0;
    bool indices_ok = z.size() >= reference_zeros.size();
    for (std::size_t n = 0; n < reference_zeros.size() && n < z.size(); ++n) {
        max_dg = std::max(max_dg, std::abs(z[n].gamma - reference_zeros[n].gamma));
        indices_ok = indices_ok && z[n].index == n + 1;
    }
    if (!indices_ok) {
        max_dg = std::numeric_limits<double>::infinity();
    }
    out.push_back(detail::make_check(1, "zeros.first_100_vs_oracle", max_dg <= 1e-9, max_dg, 0.0, 1e-9,
                                     "max |gamma_n - oracle_n|, n <= 100"));
    const double n1000 = static_cast<double>(z.count_in(0.0, 1000.0));
    out.push_back(detail::make_check(1, "zeros.count_0_1000", n1000 == 649.0, n1000, 649.0, 0.0));
    out.push_back(detail::make_check(1, "zeros.runtime_0_1e4_single_thread_s",
                                     secs <= opt.runtime_limit_s, secs, opt.runtime_limit_s, 0.0,
                                     std::to_string(z.size()) + " zeros"));
    return out;
}

inline std::vector<check> verify_zeta_prime(const zero_list& zeros, const acceptance_options& opt)
{
    double max_rel = 0.0;
    double max_oracle = 0.0;
    const std::size_t n = std::min(zeros.size(), reference_zeros.size());
    for (std::size_t i = 0; i < n; ++i) {
        const double g = zeros[i].gamma;
        const double zp = std::abs(hardy_z_em_deriv(g, opt.cfg));
        const double dz = std::abs(zeta_derivatives(complex{0.5, g}, 1, opt.cfg)[1]);
        max_rel = std::max(max_rel, detail::rel_err(zp, dz));
        max_oracle =
            std::max(max_oracle, detail::rel_err(zeros[i].abs_zeta_prime, reference_zeros[i].abs_zeta_prime));
    }
    if (n < reference_zeros.size()) {
        max_rel = max_oracle = std::numeric_limits<double>::infinity();
    }
    return {
        detail::make_check(2, "zeta_prime.hardy_vs_zeta_first_100", max_rel <= 1e-8, max_rel, 0.0, 1e-8,
                           "max relative | |Z'(gamma)| - |zeta'(rho)| |"),
        detail::make_check(2, "zeta_prime.cached_vs_oracle_first_100", max_oracle <= 1e-8, max_oracle,
                           0.0, 1e-8),
    };
}

inline std::vector<check> verify_constants()
{
    std::vector<check> out;
    const prime_table table = sieve_primes(400000);
    const auto c1 = c_k(1.0, default_ck_cutoff, table);
    const double d1 = std::abs(c1.value - 1.0 / 12.0);
    out.push_back(detail::make_check(3, "ck.c1_equals_one_twelfth", d1 <= 1e-10, c1.value, 1.0 / 12.0, 1e-10));

    double max_ef = 0.0;
    for (std::uint64_t p : table.primes_in(0.0, 100.0)) {
        max_ef = std::max(max_ef, std::abs(euler_factor(1.0, p) - 1.0));
    }
    out.push_back(detail::make_check(3, "ck.euler_factor_k1_p_le_100", max_ef <= 1e-14, max_ef, 0.0, 1e-14));

    for (double k : {0.5, 1.0, 2.0}) {
        const auto a = c_k(k, default_ck_cutoff, table);
        const auto b = c_k(k, 2 * default_ck_cutoff, table);
        const double change = std::abs(a.value - b.value);
        out.push_back(detail::make_check(3, "ck.cutoff_doubling_k" + fmt17(k), change <= a.tail_bound,
                                         change, 0.0, a.tail_bound,
                                         "|C_k(1e4) - C_k(2e4)| against tail_bound"));
    }
    return out;
}

inline std::vector<check> verify_landau(const zero_list& zeros)
{
    std::vector<check> out;
    constexpr double T = 1000.0;
    double worst_main = 0.0;
    for (std::uint64_t a : {2, 3, 4, 5, 7, 8, 9}) {
        const auto c = landau_sum(a, 1, zeros, T);
        worst_main = std::max(worst_main, c.deviation() / c.error_envelope);
    }
    double worst_zero = 0.0;
    for (std::uint64_t a : {6, 10, 12}) {
        const auto c = landau_sum(a, 1, zeros, T);
        worst_zero = std::max(worst_zero, std::abs(c.empirical) / c.error_envelope);
    }
    out.push_back(detail::make_check(4, "landau.prime_power_ratios", worst_main <= 5.0, worst_main, 5.0, 0.0,
                                     "max |empirical - main| / (sqrt(ab) log^2 T)"));
    out.push_back(detail::make_check(4, "landau.zero_main_term_ratios", worst_zero <= 5.0, worst_zero, 5.0,
                                     0.0, "max |empirical| / (sqrt(ab) log^2 T)"));
    return out;
}

// Desk-mode schedule used by the random-model checks: k = 1/2, log T = 100, c = 2 gives I = 1.
inline beta_schedule_t random_model_schedule() { return beta_schedule_log(0.5, 100.0, desk_threshold_c); }

inline std::vector<check> verify_random_model(const acceptance_options& opt)
{
    std::vector<check> out;
    const auto sched = random_model_schedule();
    const prime_table table = sieve_primes(1000);
    for (double k : {0.5, 1.0, 2.0}) {
        const auto e = sample_random_model(k, 1, sched, table, opt.mc_samples, opt.mc_seed, opt.threads);
        const double z = std::abs(e.mc_value - e.analytic_value) / e.mc_stderr;
        out.push_back(detail::make_check(5, "randmodel.k" + fmt17(k) + "_sigma", z <= 3.0, z, 0.0, 3.0,
                                         "analytic " + fmt17(e.analytic_value) + ", mc " + fmt17(e.mc_value)));
    }
    for (unsigned l = 1; l <= 4; ++l) {
        const std::vector<unsigned> ell{l};
        const auto ex = mixed_moment_expectation(ell, 1, sched, table, moment_mode::exact);
        const auto mc = mixed_moment_expectation(ell, 1, sched, table, moment_mode::mc, opt.mc_samples,
                                                 opt.mixed_seed, opt.threads);
        const double z = std::abs(mc.value - ex.value) / mc.stderr_;
        out.push_back(detail::make_check(5, "randmodel.mixed_l" + std::to_string(l) + "_sigma", z <= 3.0, z,
                                         0.0, 3.0,
                                         "exact " + fmt17(ex.value) + ", mc " + fmt17(mc.value)));
    }
    return out;
}

struct slack_window {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
    double min_slack = 0.0;
};

// Dyadic windows (T, 2T] below γ_n with x = T, from the top down.
inline std::vector<slack_window> prop1_slack_windows(const zero_list& zeros, std::size_t n_zeros,
                                                     const prime_table& table, unsigned threads)
{
    if (zeros.size() < n_zeros || n_zeros == 0) {
        throw coverage_error("prop1 slack: zero list has fewer than " + std::to_string(n_zeros) + " zeros");
    }
    std::vector<slack_window> out;
    double hi = zeros[n_zeros - 1].gamma;
    while (hi > 20.0) {
        const double T = hi / 2.0;
        const auto [a, b] = zeros.range(T, hi);
        if (b > a) {
            const auto slacks = parallel_map<double>(b - a, threads, [&](std::size_t i) {
                const auto& r = zeros[a + i];
                return prop1_rhs_from(r.gamma, r.abs_zeta_prime, T, T, table).slack;
            });
            out.push_back({T, hi, b - a, *std::min_element(slacks.begin(), slacks.end())});
        }
        hi = T;
    }
    return out;
}

inline std::vector<check> verify_prop1(const zero_list& zeros, const acceptance_options& opt)
{
    constexpr std::size_t n_zeros = 10000;
    const prime_table table = sieve_primes(20000);
    const auto windows = prop1_slack_windows(zeros, n_zeros, table, opt.threads);
    double min_slack = std::numeric_limits<double>::infinity();
    double max_growth = -std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w < windows.size(); ++w) {
        min_slack = std::min(min_slack, windows[w].min_slack);
        if (w + 1 < windows.size()) {
            // deficit = -slack; upper window minus the one below it
            max_growth = std::max(max_growth, windows[w + 1].min_slack - windows[w].min_slack);
        }
    }
    return {
        detail::make_check(6, "prop1.min_slack", min_slack >= -10.0, min_slack, -10.0, 0.0,
                           std::to_string(windows.size()) + " dyadic windows, x = T"),
        detail::make_check(6, "prop1.deficit_growth", max_growth <= 2.0, max_growth, 2.0, 0.0,
                           "max over windows of maxdef(T,2T] - maxdef(T/2,T]"),
    };
}

inline std::vector<check> verify_moment_laws(const zero_list& zeros, const acceptance_options& opt)
{
    constexpr double rounding = 1e-12;
    std::vector<std::pair<double, double>> windows{{0.0, opt.trend_T_lo}, {0.0, 1e4}, {0.0, opt.trend_T_hi}};
    for (const auto& w : dyadic_jk(1.0, 1e4, zeros).windows) {
        if (w.count > 0) {
            windows.emplace_back(w.lo, w.hi);
        }
    }
    const conjecture_constant unit; // comparators are irrelevant here
    double pm_violation = -std::numeric_limits<double>::infinity();
    double cs_violation = -std::numeric_limits<double>::infinity();
    for (const auto& [lo, hi] : windows) {
        auto J = [&](double k) { return discrete_moment_jk(zeros, k, lo, hi, unit).value; };
        const double j_half = J(0.5);
        const double j1 = J(1.0);
        const double j2 = J(2.0);
        const double j4 = J(4.0);
        const double pm[] = {j_half * j_half, j1, std::sqrt(j2)};
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                pm_violation = std::max(pm_violation, (pm[a] - pm[b]) / pm[b]);
            }
        }
        cs_violation = std::max(cs_violation, (j_half * j_half - j1) / j1);
        cs_violation = std::max(cs_violation, (j1 * j1 - j2) / j2);
        cs_violation = std::max(cs_violation, (j2 * j2 - j4) / j4);
    }
    double recomb = 0.0;
    for (double T : {1e4, opt.trend_T_hi}) {
        for (double k : {0.5, 1.0, 2.0}) {
            const auto d = dyadic_jk(k, T, zeros);
            const double direct = discrete_moment_jk(zeros, k, 0.0, T, unit).value;
            recomb = std::max(recomb, detail::rel_err(d.recombined, direct));
        }
    }
    const std::string n = std::to_string(windows.size()) + " windows";
    return {
        detail::make_check(7, "moments.power_mean_monotone", pm_violation <= rounding, pm_violation, 0.0,
                           rounding, n + ", max relative excess of J_k1^(1/k1) over J_k2^(1/k2)"),
        detail::make_check(7, "moments.cauchy_schwarz", cs_violation <= rounding, cs_violation, 0.0, rounding,
                           n + ", max relative excess of J_k^2 over J_2k"),
        detail::make_check(7, "moments.dyadic_recombination", recomb <= 1e-12, recomb, 0.0, 1e-12),
    };
}

inline std::vector<check> verify_trends(const zero_list& zeros, const acceptance_options& opt)
{
    auto gonek = [&](double T) {
        const double L = std::log(T);
        return discrete_moment_jk(zeros, 1.0, 0.0, T).value * 12.0 / (L * L * L);
    };
    const double r_lo = gonek(opt.trend_T_lo);
    const double r_hi = gonek(opt.trend_T_hi);
    const auto s_lo = hejhal_clt_stats(zeros, 0.0, opt.trend_T_lo);
    const auto s_hi = hejhal_clt_stats(zeros, 0.0, opt.trend_T_hi);
    const double mean_dev = s_hi.mean - s_hi.loglog_T;
    return {
        detail::make_check(8, "trend.gonek_ratio_closer_to_one", std::abs(r_hi - 1.0) < std::abs(r_lo - 1.0),
                           std::abs(r_hi - 1.0), std::abs(r_lo - 1.0), 0.0,
                           "|12 J_1/log^3 T - 1| at 1e5 against 1e3; ratios " + fmt17(r_hi) + ", " +
                               fmt17(r_lo)),
        detail::make_check(8, "trend.ks_decreases", s_hi.ks_distance < s_lo.ks_distance, s_hi.ks_distance,
                           s_lo.ks_distance, 0.0, "KS at 1e5 against 1e3"),
        detail::make_check(8, "trend.mean_log_zeta_prime", std::abs(mean_dev) <= 1.0, s_hi.mean, s_hi.loglog_T,
                           1.0, "mean log|zeta'(rho)| against loglog T at 1e5"),
    };
}

inline std::vector<check> verify_corollary(const zero_list& zeros, const acceptance_options& opt)
{
    constexpr double T = 1000.0;
    const complex rho1{0.5, zeros[0].gamma};
    const complex rec = cauchy_derivative(rho1, 1, 1.0 / std::log(T), 64, opt.cfg);
    const complex ref = zeta_deriv(rho1, 1, opt.cfg);
    const double err = std::abs(rec - ref) / std::abs(ref);
    const auto rep = derivative_moment(zeros, 1.0, 2, 0.0, T, opt.cfg, 64, opt.threads);
    const bool finite = std::isfinite(rep.direct.value) && std::isfinite(rep.cauchy_bound);
    return {
        detail::make_check(9, "corollary.cauchy_reconstruction_rho1", err <= 1e-6, err, 0.0, 1e-6,
                           "64 nodes, radius 1/log 1000"),
        detail::make_check(9, "corollary.report_finite_k1_nu2", finite, rep.direct.value, rep.cauchy_bound, 0.0,
                           "observed = direct moment, expected = contour bound"),
    };
}

inline std::vector<check> verify_shifted(const zero_list& zeros, const acceptance_options& opt)
{
    constexpr double T = 1000.0;
    const double r = 1.0 / std::log(T);
    bool finite = true;
    double ratio_lo = std::numeric_limits<double>::infinity();
    double ratio_hi = 0.0;
    for (int m = 0; m < 8; ++m) {
        const auto s = shifted_moment(zeros, 1.0, std::polar(r, two_pi * m / 8.0), 0.0, T, opt.cfg, opt.threads);
        finite = finite && std::isfinite(s.value);
        ratio_lo = std::min(ratio_lo, s.ratio);
        ratio_hi = std::max(ratio_hi, s.ratio);
    }
    const double at_zero = shifted_moment(zeros, 1.0, complex{0.0, 0.0}, 0.0, T, opt.cfg, opt.threads).value;
    return {
        detail::make_check(10, "shifted.all_finite", finite, finite ? 1.0 : 0.0, 1.0, 0.0),
        detail::make_check(10, "shifted.alpha_zero", at_zero == 0.0, at_zero, 0.0, 0.0),
        detail::make_check(10, "shifted.ratio_min", ratio_lo > 1e-2, ratio_lo, 1e-2, 0.0,
                           "min ratio to log T over the 8 points"),
        detail::make_check(10, "shifted.ratio_max", ratio_hi < 1e2, ratio_hi, 1e2, 0.0,
                           "max ratio to log T over the 8 points"),
    };
}

// Zero list covering (0, t_hi]: the cache when it reaches that high, else a fresh computation.
inline zero_list zeros_for_acceptance(const std::optional<zero_list>& cache, double t_hi,
                                      const eval_config& cfg, unsigned threads)
{
    if (cache && cache->covers(0.0, t_hi)) {
        return *cache;
    }
    return find_zeros(0.0, t_hi, cfg, threads);
}

// Every criterion; an exception inside one criterion becomes a failed check.
inline std::vector<check> run_acceptance(const zero_list& zeros, const acceptance_options& opt = {})
{
    std::vector<check> out;
    auto run = [&](int criterion, auto&& fn) {
        try {
            auto v = fn();
            out.insert(out.end(), v.begin(), v.end());
        } catch (const std::exception& e) {
            out.push_back(detail::make_check(criterion, "criterion" + std::to_string(criterion) + ".error",
                                             false, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0,
                                             e.what()));
        }
    };
    run(1, [&] { return verify_zeros(opt); });
    run(2, [&] { return verify_zeta_prime(zeros, opt); });
    run(3, [&] { return verify_constants(); });
    run(4, [&] { return verify_landau(zeros); });
    run(5, [&] { return verify_random_model(opt); });
    run(6, [&] { return verify_prop1(zeros, opt); });
    run(7, [&] { return verify_moment_laws(zeros, opt); });
    run(8, [&] { return verify_trends(zeros, opt); });
    run(9, [&] { return verify_corollary(zeros, opt); });
    run(10, [&] { return verify_shifted(zeros, opt); });
    return out;
}

} // namespace zml

#endif // ZML_VERIFY_HPP
