#include <gtest/gtest.h>

#include <cstdlib>
#include <vector>

#include "zml.hpp"

using namespace zml;

TEST(CompensatedSum, RecoversCancelledTerms)
{
    compensated_sum<double> acc;
    acc.add(1.0);
    for (int i = 0; i < 1000; ++i) {
        acc.add(1e-16);
    }
    acc.add(-1.0);
    // naive summation returns 0 here
    EXPECT_NEAR(acc.value(), 1e-13, 1e-15);
    EXPECT_NEAR(kahan_total(std::vector<double>{1e100, 1.0, -1e100}), 1.0, 0.0);
}

TEST(CompensatedSum, Complex)
{
    compensated_sum<std::complex<double>> acc;
    acc.add({1.0, -1.0});
    acc.add({1e-17, 1e-17});
    acc.add({-1.0, 1.0});
    EXPECT_DOUBLE_EQ(acc.value().real(), 1e-17);
    EXPECT_DOUBLE_EQ(acc.value().imag(), 1e-17);
}

TEST(TreeSum, DependsOnlyOnOrder)
{
    std::vector<double> v(10007);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = std::sin(static_cast<double>(i)) * 1e3 + 1e-9 * static_cast<double>(i);
    }
    const double a = tree_sum(v);
    const double b = tree_sum(std::vector<double>(v));
    EXPECT_EQ(a, b);
    EXPECT_NEAR(a, kahan_total(v), 1e-9);
}

TEST(Parallel, MapKeepsIndexOrderForAnyThreadCount)
{
    auto run = [](unsigned threads) {
        return parallel_map<double>(1000, threads, [](std::size_t i) { return 1.0 / (1.0 + static_cast<double>(i)); });
    };
    const auto one = run(1);
    for (unsigned t : {2u, 3u, 8u}) {
        EXPECT_EQ(run(t), one);
    }
    EXPECT_EQ(tree_sum(run(4)), tree_sum(one));
}

TEST(Parallel, ThreadsFromEnvironment)
{
    setenv("ZML_THREADS", "3", 1);
    EXPECT_EQ(threads_from_env(), 3u);
    setenv("ZML_THREADS", "zero", 1);
    EXPECT_EQ(threads_from_env(), 1u);
    unsetenv("ZML_THREADS");
    EXPECT_EQ(threads_from_env(), 1u);
}
