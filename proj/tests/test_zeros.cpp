#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "common.hpp"

using namespace zml;

TEST(GramPoints, OracleAndDefiningEquation)
{
    EXPECT_NEAR(gram_point(0), 17.845599540410860817, 1e-10);
    EXPECT_NEAR(gram_point(100), 238.58259051450292333, 1e-10);
    for (long long n = 0; n <= 100; ++n) {
        EXPECT_NEAR(rs_theta(gram_point(n)), std::numbers::pi * static_cast<double>(n), 1e-9);
        EXPECT_GT(gram_point(n + 1), gram_point(n));
    }
}

TEST(CountingFunction, SmoothCount)
{
    EXPECT_NEAR(count_zeros_rvm(100.0), 29.0, 0.5);
    EXPECT_NEAR(count_zeros_rvm(1000.0), 649.0, 1.0);
    const double T = 1e4;
    const double smooth = T / two_pi * std::log(T / (two_pi * std::numbers::e)) + 7.0 / 8.0;
    EXPECT_LE(std::abs(rs_theta(T) / std::numbers::pi + 1.0 - smooth), 0.01);
}

TEST(FindZeros, SmallWindows)
{
    const auto z50 = find_zeros(0.0, 50.0);
    ASSERT_EQ(z50.size(), 10u);
    EXPECT_NEAR(z50[0].gamma, 14.134725142, 1e-9);
    EXPECT_EQ(find_zeros(0.0, 100.0).size(), 29u);
    const double g1 = 14.134725141734693790;
    const auto one = find_zeros(g1 - 0.01, g1 + 0.01);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].index, 1u);
}

TEST(FindZeros, MatchesOracleTable)
{
    const auto& z = zml_test::zeros_1e4();
    const auto& oracle = zml_test::oracle_zeros();
    ASSERT_EQ(oracle.size(), 1600u);
    ASSERT_GE(z.size(), oracle.size());
    for (const auto& o : oracle) {
        const auto& r = z[static_cast<std::size_t>(o.n - 1)];
        EXPECT_EQ(r.index, static_cast<std::uint64_t>(o.n));
        EXPECT_NEAR(r.gamma, o.gamma, 1e-9) << o.n;
        EXPECT_LT(std::abs(r.abs_zeta_prime - o.abs_zeta_prime) / o.abs_zeta_prime, 1e-8) << o.n;
    }
}

TEST(FindZeros, CountsAndStructure)
{
    const auto& z = zml_test::zeros_1e4();
    EXPECT_EQ(z.count_in(0.0, 1000.0), 649u);
    EXPECT_EQ(z.size(), 10142u);
    EXPECT_EQ(z.count_in(0.0, 500.0) + z.count_in(500.0, 1000.0), z.count_in(0.0, 1000.0));
    EXPECT_NO_THROW(validate_zero_list(z));
    for (std::size_t i = 0; i < z.size(); ++i) {
        EXPECT_EQ(z[i].index, i + 1);
        EXPECT_GT(z[i].abs_zeta_prime, 0.0);
        EXPECT_LE(z[i].gamma_error, max_gamma_error);
        if (i > 0) {
            EXPECT_GT(z[i].gamma, z[i - 1].gamma);
        }
    }
    EXPECT_EQ(z.degenerate_count(), 0u);
}

TEST(FindZeros, StoredZerosAreSignChanges)
{
    const auto& z = zml_test::zeros_1e4();
    for (std::size_t i = 0; i < z.size(); i += 97) {
        const double g = z[i].gamma;
        const double e = std::max(z[i].gamma_error, 1e-9);
        EXPECT_LE(std::abs(hardy_z(g)), 1e-8) << g;
        EXPECT_NE(std::signbit(hardy_z(g - 4 * e)), std::signbit(hardy_z(g + 4 * e))) << g;
    }
}

TEST(FindZeros, MeanGapMatchesDensity)
{
    const auto& z = zml_test::zeros_1e4();
    const auto [lo, hi] = z.range(1000.0, 2000.0);
    const double mean_gap = (z[hi - 1].gamma - z[lo].gamma) / static_cast<double>(hi - lo - 1);
    const double expected = two_pi / std::log(1500.0 / two_pi);
    EXPECT_LT(std::abs(mean_gap / expected - 1.0), 0.05);
}

TEST(FindZeros, RejectsBadRanges)
{
    EXPECT_THROW(find_zeros(10.0, 5.0), domain_error);
    EXPECT_THROW(find_zeros(0.0, 2e6), domain_error);
}

class ZeroFile : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = std::filesystem::temp_directory_path() / ("zml_io_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir_);
        path_ = (dir_ / "z.zml").string();
        list_ = find_zeros(0.0, 200.0);
        save_zeros(list_, path_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::filesystem::path dir_;
    std::string path_;
    zero_list list_;
};

TEST_F(ZeroFile, RoundTrip)
{
    const auto back = load_zeros(path_);
    EXPECT_EQ(back.records, list_.records);
    EXPECT_EQ(back.t_lo, list_.t_lo);
    EXPECT_EQ(back.t_hi, list_.t_hi);
    EXPECT_FALSE(back.config_mismatch);
}

TEST_F(ZeroFile, MismatchedConfigIsFlagged)
{
    eval_config other;
    other.target_abs_error = 1e-8;
    const auto back = load_zeros(path_, other.hash());
    EXPECT_TRUE(back.config_mismatch);
    EXPECT_EQ(back.size(), list_.size());
}

TEST_F(ZeroFile, TruncatedFileIsMalformed)
{
    std::filesystem::resize_file(path_, std::filesystem::file_size(path_) - 5);
    EXPECT_THROW(load_zeros(path_), malformed_file_error);
}

TEST_F(ZeroFile, CorruptedByteFailsChecksum)
{
    {
        std::fstream f(path_, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(40);
        f.put('\x7f');
    }
    EXPECT_THROW(load_zeros(path_), checksum_error);
}

TEST_F(ZeroFile, MissingSidecarIsMalformed)
{
    std::filesystem::remove(path_ + ".meta.json");
    EXPECT_THROW(load_zeros(path_), malformed_file_error);
}

TEST_F(ZeroFile, WrongMagic)
{
    {
        std::fstream f(path_, std::ios::in | std::ios::out | std::ios::binary);
        f.put('X');
    }
    EXPECT_THROW(load_zeros(path_), malformed_file_error);
}

TEST_F(ZeroFile, CsvExport)
{
    std::ostringstream os;
    write_zeros_csv(list_, os);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "index,gamma,abs_zeta_prime,gamma_error");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, list_.size());
}
