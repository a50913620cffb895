#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "common.hpp"

using namespace zml;

TEST(Sieve, SmallLimits)
{
    const prime_table t10 = sieve_primes(10);
    const auto s10 = t10.primes_in(0, 10);
    EXPECT_EQ(std::vector<std::uint64_t>(s10.begin(), s10.end()), (std::vector<std::uint64_t>{2, 3, 5, 7}));
    const prime_table t2 = sieve_primes(2);
    const auto s2 = t2.primes_in(0, 2);
    EXPECT_EQ(std::vector<std::uint64_t>(s2.begin(), s2.end()), (std::vector<std::uint64_t>{2}));
    EXPECT_TRUE(sieve_primes(1).primes_in(0, 1).empty());
    EXPECT_THROW(sieve_primes(0), domain_error);
}

TEST(Sieve, PrimeCountingValues)
{
    const auto& t = zml_test::primes_1e6();
    EXPECT_EQ(t.prime_count(1e3), 168u);
    EXPECT_EQ(t.prime_count(1e4), 1229u);
    EXPECT_EQ(t.prime_count(1e6), 78498u);
}

TEST(Sieve, FactorizationMultipliesBack)
{
    const auto& t = zml_test::primes_1e6();
    for (std::uint64_t n = 2; n < 20000; n += 7) {
        std::uint64_t prod = 1;
        for (const auto& f : t.factorize(n)) {
            EXPECT_TRUE(t.is_prime(f.prime));
            for (unsigned e = 0; e < f.exponent; ++e) {
                prod *= f.prime;
            }
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(Sieve, MemoryBudgetIsEnforced)
{
    EXPECT_THROW(sieve_primes(1000000, 1000), capacity_error);
}

TEST(VonMangoldt, Definition)
{
    EXPECT_DOUBLE_EQ(von_mangoldt(8.0), std::log(2.0));
    EXPECT_EQ(von_mangoldt(6.0), 0.0);
    EXPECT_EQ(von_mangoldt(1.5), 0.0);
    EXPECT_EQ(von_mangoldt(1.0), 0.0);
    EXPECT_DOUBLE_EQ(von_mangoldt(97.0), std::log(97.0));
    EXPECT_THROW(von_mangoldt(0.0), domain_error);
    const auto& t = zml_test::primes_1e6();
    EXPECT_DOUBLE_EQ(von_mangoldt(std::uint64_t{3125}, t), std::log(5.0));
}

TEST(VonMangoldt, Ratio)
{
    EXPECT_DOUBLE_EQ(von_mangoldt_ratio(8, 2), std::log(2.0));
    EXPECT_EQ(von_mangoldt_ratio(12, 2), 0.0);
    EXPECT_EQ(von_mangoldt_ratio(3, 2), 0.0);
    EXPECT_EQ(von_mangoldt(8.0 / 2.0 * (1.0 + 1e-14)), std::log(2.0));
}

TEST(VonMangoldt, RestrictedToPrimesAndSquares)
{
    EXPECT_DOUBLE_EQ(von_mangoldt_L(9, 100.0), std::log(3.0));
    EXPECT_EQ(von_mangoldt_L(8, 100.0), 0.0);
    EXPECT_EQ(von_mangoldt_L(11 * 11, 10.0), 0.0);
    EXPECT_DOUBLE_EQ(von_mangoldt_L(101, 100.0), std::log(101.0));
    for (std::uint64_t n = 1; n < 3000; ++n) {
        EXPECT_LE(von_mangoldt_L(n, 20.0), von_mangoldt(static_cast<double>(n)));
    }
}

TEST(PrimeSums, ReciprocalSum)
{
    const auto& t = zml_test::primes_1e6();
    EXPECT_NEAR(prime_reciprocal_sum(1, 10, t), 1.0 / 2 + 1.0 / 3 + 1.0 / 5 + 1.0 / 7, 1e-15);
    EXPECT_EQ(prime_reciprocal_sum(7, 10.5, t), 0.0);
    EXPECT_THROW(prime_reciprocal_sum(1, 2e6, t), range_error);
    // Mertens: sum_{p <= x} 1/p = loglog x + M + o(1), M = 0.2614972128476428.
    EXPECT_NEAR(prime_reciprocal_sum(1, 1e6, t), std::log(std::log(1e6)) + 0.2614972128476428, 0.01);
    EXPECT_NEAR(prime_reciprocal_sum(1, 500, t) + prime_reciprocal_sum(500, 9000, t),
                prime_reciprocal_sum(1, 9000, t), 1e-14);
}

TEST(PrimeSums, Chebyshev)
{
    const auto& t = zml_test::primes_1e6();
    for (double x : {1e4, 1e5, 1e6}) {
        compensated_sum<double> psi;
        for (std::uint64_t n = 2; n <= static_cast<std::uint64_t>(x); ++n) {
            psi.add(von_mangoldt(n, t));
        }
        const double tol = x == 1e6 ? 0.02 : 0.05;
        EXPECT_NEAR(psi.value() / x, 1.0, tol) << x;
    }
}
