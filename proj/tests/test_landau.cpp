#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "common.hpp"

using namespace zml;
using zml_test::zeros_1e4;

TEST(Landau, EqualArgumentsCount)
{
    const auto c = landau_sum(3, 3, zeros_1e4(), 1000.0);
    EXPECT_EQ(static_cast<double>(c.count), c.empirical.real());
    EXPECT_EQ(c.empirical.imag(), 0.0);
    EXPECT_EQ(c.main_term, static_cast<double>(c.count));
    EXPECT_EQ(c.deviation(), 0.0);
    EXPECT_EQ(c.count, zeros_1e4().count_in(1000.0, 2000.0));
}

TEST(Landau, PrimeRatio)
{
    const double T = 1000.0;
    const auto c = landau_sum(2, 1, zeros_1e4(), T);
    EXPECT_NEAR(c.main_term, -T * std::log(2.0) / (two_pi * std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(c.error_envelope, std::sqrt(2.0) * std::log(T) * std::log(T), 1e-12);
    EXPECT_LE(c.deviation(), c.error_envelope);
    // the main term dominates: the sum is clearly negative
    EXPECT_LT(c.empirical.real(), 0.5 * c.main_term);
}

TEST(Landau, NonPrimePowerHasNoMainTerm)
{
    const auto c = landau_sum(6, 1, zeros_1e4(), 1000.0);
    EXPECT_EQ(c.main_term, 0.0);
    EXPECT_LE(std::abs(c.empirical), c.error_envelope);
}

TEST(Landau, ConjugateSymmetry)
{
    const auto ab = landau_sum(3, 2, zeros_1e4(), 2000.0);
    const auto ba = landau_sum(2, 3, zeros_1e4(), 2000.0);
    EXPECT_NEAR(ab.empirical.real(), ba.empirical.real(), 1e-9);
    EXPECT_NEAR(ab.empirical.imag(), -ba.empirical.imag(), 1e-9);
    EXPECT_EQ(ab.main_term, ba.main_term);
}

TEST(Landau, RatiosWithUnitConstant)
{
    double worst = 0.0;
    for (double T : {500.0, 1000.0, 2500.0}) {
        for (std::uint64_t a = 1; a <= 12; ++a) {
            for (std::uint64_t b = 1; b <= 12; ++b) {
                if (a == b || std::gcd(a, b) != 1) {
                    continue;
                }
                const auto c = landau_sum(a, b, zeros_1e4(), T);
                worst = std::max(worst, c.ratio());
            }
        }
    }
    RecordProperty("smallest_constant", std::to_string(worst));
    EXPECT_LT(worst, 1.0);
}

TEST(Landau, Errors)
{
    EXPECT_THROW(landau_sum(0, 1, zeros_1e4(), 1000.0), domain_error);
    EXPECT_THROW(landau_sum(2, 1, zeros_1e4(), 6000.0), coverage_error);
}

TEST(MixedZeroSum, TrivialExponent)
{
    const auto s = random_model_schedule();
    const auto t = sieve_primes(1000);
    const auto r = mixed_zero_sum({0}, 1, s, zeros_1e4(), t, 1000.0);
    EXPECT_EQ(r.zero_sum, static_cast<double>(r.count));
    EXPECT_EQ(r.expectation, 1.0);
    EXPECT_EQ(r.model_bound, r.main_term);
    EXPECT_TRUE(r.secondary_sign_ok);
}

TEST(MixedZeroSum, SecondPowerBelowModelBound)
{
    const auto s = random_model_schedule();
    const auto t = sieve_primes(1000);
    for (double T : {1000.0, 2000.0}) {
        const auto r = mixed_zero_sum({2}, 1, s, zeros_1e4(), t, T);
        EXPECT_TRUE(r.secondary_sign_ok) << T;
        EXPECT_LE(r.zero_sum, r.model_bound);
        EXPECT_NEAR(r.main_term, static_cast<double>(r.count) * r.expectation, 1e-9);
        EXPECT_NEAR(r.error_magnitude, std::pow(T, std::numbers::e / 25.0) * std::pow(std::log(T), 2), 1e-9);
        EXPECT_GT(r.zero_sum, 0.0);
    }
}

TEST(MixedZeroSum, Errors)
{
    const auto s = random_model_schedule();
    const auto t = sieve_primes(1000);
    const double cap = mixed_exponent_cap(1, s);
    EXPECT_NEAR(cap, 2.0 * std::numbers::e * std::numbers::e * 0.5 * std::pow(s.beta(1), -0.75), 1e-12);
    EXPECT_THROW(mixed_zero_sum({static_cast<unsigned>(cap) + 1}, 1, s, zeros_1e4(), t, 1000.0),
                 domain_error);
    EXPECT_THROW(mixed_zero_sum({1, 1}, 1, s, zeros_1e4(), t, 1000.0), domain_error);
    EXPECT_THROW(mixed_zero_sum({2}, 1, s, zeros_1e4(), t, 8000.0), coverage_error);
    const auto strict = beta_schedule_log(0.5, 100.0, default_threshold_c);
    EXPECT_THROW(mixed_zero_sum({2}, 1, strict, zeros_1e4(), t, 1000.0), classification_disabled_error);
}
