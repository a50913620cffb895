#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "common.hpp"

using namespace zml;
using zml_test::oracle_zeros;
using zml_test::zeros_1e4;

TEST(DiscreteMoment, KZeroIsOne)
{
    const auto m = discrete_moment_jk(zeros_1e4(), 0.0, 0.0, 1000.0);
    EXPECT_EQ(m.value, 1.0);
    EXPECT_EQ(m.count_or_length, 649.0);
    EXPECT_EQ(m.predicted, 1.0);
}

TEST(DiscreteMoment, SingleZeroWindow)
{
    const auto m = discrete_moment_jk(zeros_1e4(), 1.0, 14.0, 15.0);
    EXPECT_EQ(m.count_or_length, 1.0);
    EXPECT_NEAR(m.value, 0.62910347304228057982, 1e-10);
}

TEST(DiscreteMoment, MatchesOracleZeros)
{
    for (double k : {0.5, 1.0, 2.0}) {
        compensated_sum<double> acc;
        std::size_t n = 0;
        for (const auto& z : oracle_zeros()) {
            if (z.gamma <= 1000.0) {
                acc.add(std::pow(z.abs_zeta_prime, 2.0 * k));
                ++n;
            }
        }
        ASSERT_EQ(n, 649u);
        const auto m = discrete_moment_jk(zeros_1e4(), k, 0.0, 1000.0);
        EXPECT_NEAR(m.value / (acc.value() / static_cast<double>(n)), 1.0, 1e-8) << k;
    }
}

TEST(DiscreteMoment, PredictionUsesConstant)
{
    const auto m = discrete_moment_jk(zeros_1e4(), 1.0, 0.0, 1000.0);
    EXPECT_NEAR(m.predicted, std::pow(std::log(1000.0), 3.0) / 12.0, 1e-8);
    EXPECT_GT(m.ratio, 0.3);
    EXPECT_LT(m.ratio, 1.0);
}

TEST(DiscreteMoment, Errors)
{
    EXPECT_THROW(discrete_moment_jk(zeros_1e4(), -1.0, 0.0, 100.0), domain_error);
    EXPECT_THROW(discrete_moment_jk(zeros_1e4(), 1.0, 100.0, 100.0), domain_error);
    EXPECT_THROW(discrete_moment_jk(zeros_1e4(), 1.0, 0.0, 2e4), coverage_error);
    EXPECT_THROW(discrete_moment_jk(zeros_1e4(), 1.0, 0.0, 10.0), empty_range_error);
}

TEST(Dyadic, WindowSharesAndRecombination)
{
    const double T = 1e4;
    const auto d = dyadic_jk(1.0, T, zeros_1e4());
    EXPECT_EQ(d.total_count, 10142u);
    for (const auto& w : d.windows) {
        if (w.i <= 5) {
            const double share = static_cast<double>(w.count) / static_cast<double>(d.total_count);
            const double dyad = std::ldexp(1.0, -static_cast<int>(w.i));
            EXPECT_GT(share, 0.3 * dyad) << w.i;
            EXPECT_LT(share, 3.0 * dyad) << w.i;
        }
    }
    const auto whole = discrete_moment_jk(zeros_1e4(), 1.0, 0.0, T);
    EXPECT_NEAR(d.recombined / whole.value, 1.0, 1e-12);
    // the lowest windows lie below the first zero
    EXPECT_EQ(d.windows.back().count, 0u);
    EXPECT_EQ(d.windows.back().sum, 0.0);
}

TEST(Shifted, ZeroShiftAndKZero)
{
    const auto a = shifted_moment(zeros_1e4(), 1.0, {0.0, 0.0}, 0.0, 1000.0);
    EXPECT_EQ(a.value, 0.0);
    const auto b = shifted_moment(zeros_1e4(), 0.0, {0.1, 0.0}, 0.0, 1000.0);
    EXPECT_EQ(b.value, 1.0);
}

TEST(Shifted, ContinuousAtZero)
{
    // |ζ(ρ + α)|² ≈ |ζ'(ρ)|² |α|² for small α
    const double a = 1e-6;
    const auto m = shifted_moment(zeros_1e4(), 1.0, {a, 0.0}, 0.0, 200.0);
    const auto j = discrete_moment_jk(zeros_1e4(), 1.0, 0.0, 200.0);
    EXPECT_NEAR(m.value / (j.value * a * a), 1.0, 1e-4);
}

TEST(Shifted, RatioEnvelope)
{
    const double T = 1000.0;
    double prev = 0.0;
    for (double frac : {0.25, 0.5, 1.0}) {
        const auto m = shifted_moment(zeros_1e4(), 1.0, {frac / std::log(T), 0.0}, 0.0, T);
        EXPECT_GT(m.value, prev) << frac;
        prev = m.value;
        EXPECT_EQ(m.predicted, std::log(T));
    }
    for (int q = 0; q < 8; ++q) {
        const complex a = std::polar(1.0 / std::log(T), two_pi * q / 8);
        const auto m = shifted_moment(zeros_1e4(), 1.0, a, 0.0, T);
        EXPECT_GT(m.ratio, 1e-2) << q;
        EXPECT_LT(m.ratio, 1e2) << q;
    }
}

TEST(Shifted, ShiftTooLarge)
{
    EXPECT_THROW(shifted_moment(zeros_1e4(), 1.0, {2.0 / std::log(1000.0), 0.0}, 0.0, 1000.0),
                 domain_error);
}

TEST(Derivative, NuOneIsJk)
{
    const auto d = derivative_moment(zeros_1e4(), 1.0, 1, 0.0, 300.0);
    const auto j = discrete_moment_jk(zeros_1e4(), 1.0, 0.0, 300.0);
    EXPECT_EQ(d.direct.value, j.value);
    EXPECT_LT(d.max_reconstruction_error, 1e-6);
}

TEST(Derivative, CauchyAtFirstZero)
{
    const complex rho{0.5, 14.134725141734693790};
    const complex ref = zeta_derivatives(rho, 1)[1];
    EXPECT_NEAR(std::abs(ref), std::sqrt(0.62910347304228057982), 1e-9);
    const complex c = cauchy_derivative(rho, 1, 1.0 / std::log(1000.0), 64);
    EXPECT_LT(std::abs(c - ref) / std::abs(ref), 1e-6);
    const complex ref2 = zeta_derivatives(rho, 2)[2];
    const complex c2 = cauchy_derivative(rho, 2, 1.0 / std::log(1000.0), 64);
    EXPECT_LT(std::abs(c2 - ref2) / std::abs(ref2), 1e-6);
}

TEST(Derivative, BoundChainHolds)
{
    const auto d = derivative_moment(zeros_1e4(), 1.0, 2, 0.0, 1000.0);
    EXPECT_TRUE(std::isfinite(d.direct.value));
    EXPECT_LE(d.direct.value, d.cauchy_bound);
    EXPECT_LT(d.max_reconstruction_error, 1e-6);
    EXPECT_GT(d.circle_max_moment, 0.0);
    EXPECT_NEAR(d.radius, 1.0 / std::log(1000.0), 1e-15);
    EXPECT_THROW(derivative_moment(zeros_1e4(), 0.25, 2, 0.0, 1000.0), domain_error);
}

TEST(Continuous, KZero)
{
    EXPECT_EQ(continuous_moment_ik(0.0, 1000.0, 0.01).value, 1.0);
    EXPECT_THROW(continuous_moment_ik(1.0, 1000.0, 0.05), domain_error);
}

TEST(Continuous, MeanSquareAsymptotic)
{
    // (1/T) ∫_0^T |ζ(1/2+it)|² dt = log(T/2π) + 2γ - 1 + O(T^{-1/2} log T)
    eval_config cfg;
    cfg.target_abs_error = 1e-6;
    const double T = 1e4;
    const auto m = continuous_moment_ik(1.0, T, 0.01, cfg);
    const double classical = std::log(T / two_pi) + 2.0 * euler_gamma - 1.0;
    EXPECT_NEAR(m.value / classical, 1.0, 0.01);

    // J_1 / ((log T)² I_1) tends to 1/12
    const auto j = discrete_moment_jk(zeros_1e4(), 1.0, 0.0, T);
    const double heuristic = j.value / (std::log(T) * std::log(T) * m.value);
    EXPECT_GT(heuristic, 1.0 / 24.0);
    EXPECT_LT(heuristic, 1.0 / 6.0);
}

TEST(Clt, NormalHelpers)
{
    EXPECT_NEAR(normal_cdf(0.0), 0.5, 1e-16);
    EXPECT_NEAR(normal_cdf(1.96), 0.97500210485177952, 1e-15);
    EXPECT_NEAR(ks_to_normal({0.0}), 0.5, 1e-16);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    std::vector<double> z(20000);
    for (auto& v : z) {
        v = g(rng);
    }
    EXPECT_LT(ks_to_normal(z), 0.02);
    for (auto& v : z) {
        v += 1.0;
    }
    EXPECT_GT(ks_to_normal(z), 0.3);
}

TEST(Clt, StatsOnTenThousand)
{
    const auto s = hejhal_clt_stats(zeros_1e4(), 0.0, 1e4);
    EXPECT_EQ(s.count + s.excluded_degenerate, 10142u);
    std::size_t binned = 0;
    std::size_t binned_e = 0;
    for (int b = 0; b < clt_bins; ++b) {
        binned += s.histogram.counts[static_cast<std::size_t>(b)];
        binned_e += s.histogram_empirical.counts[static_cast<std::size_t>(b)];
    }
    EXPECT_LE(binned, s.count);
    EXPECT_GT(binned, s.count * 9 / 10);
    EXPECT_LE(binned_e, s.count);
    EXPECT_NEAR(s.loglog_T, std::log(std::log(1e4)), 1e-15);
    EXPECT_LT(s.ks_distance_empirical, 0.05);
    EXPECT_GT(s.variance, 0.0);
    EXPECT_NEAR(s.standardized_mean, (s.mean - s.loglog_T) / std::sqrt(0.5 * s.loglog_T), 1e-12);
    EXPECT_THROW(hejhal_clt_stats(zeros_1e4(), 0.0, 100.0), empty_range_error);
}
