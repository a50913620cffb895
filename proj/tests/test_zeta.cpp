#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "common.hpp"

using namespace zml;

namespace {

constexpr double gamma1 = 14.134725141734693790;
constexpr double gamma2 = 21.022039638771554993;

double rel(complex a, complex b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST(Theta, OracleValues)
{
    EXPECT_EQ(rs_theta(0.0), 0.0);
    EXPECT_NEAR(rs_theta(5.0), -3.4596203753634625332, 1e-13);
    EXPECT_NEAR(rs_theta(20.0), 1.1868948084444840448, 1e-13);
    EXPECT_NEAR(rs_theta(100.0), 87.972165231787219625, 1e-12);
    EXPECT_NEAR(rs_theta_prime(100.0), 1.3836444764195793532, 1e-13);
    EXPECT_NEAR(rs_theta_prime(10.0), 0.23214531343246514064, 1e-13);
    EXPECT_THROW(rs_theta(-1.0), domain_error);
}

TEST(Theta, IncreasingAbove18)
{
    double prev = rs_theta(18.0);
    for (double t = 18.5; t < 2000; t += 0.5) {
        const double cur = rs_theta(t);
        EXPECT_GT(cur, prev);
        prev = cur;
    }
}

TEST(Zeta, ClosedForms)
{
    EXPECT_NEAR(std::abs(zeta({2.0, 0.0}) - std::numbers::pi * std::numbers::pi / 6.0), 0.0, 1e-14);
    EXPECT_NEAR(zeta({0.0, 0.0}).real(), -0.5, 1e-14);
    EXPECT_NEAR(zeta({0.5, 0.0}).real(), -1.4603545088095868129, 1e-13);
    EXPECT_NEAR(zeta_deriv({0.0, 0.0}, 1).real(), -0.5 * std::log(two_pi), 1e-13);
    EXPECT_THROW(zeta({1.0, 0.0}), pole_error);
}

TEST(Zeta, ComplexOracleValues)
{
    EXPECT_LT(rel(zeta({0.5, 20.0}), {0.42991386043784337216, -1.0642914430805891127}), 1e-12);
    EXPECT_LT(rel(zeta({3.0, 4.0}), {0.89055490696507325814, -0.0080759454243272598468}), 1e-13);
    EXPECT_LT(rel(zeta({0.7, 1000.0}), {0.78405444310368864916, 0.37482889232890295638}), 1e-10);
    EXPECT_LT(rel(zeta({-1.5, 2.0}), {0.12424726557777474701, -0.015707749528273202786}), 1e-10);
    EXPECT_LT(std::abs(zeta({0.5, gamma1})), 1e-10);
}

TEST(Zeta, Derivatives)
{
    EXPECT_NEAR(zeta_deriv({2.0, 0.0}, 1).real(), -0.9375482543158437537, 1e-13);
    EXPECT_NEAR(zeta_deriv({2.0, 0.0}, 2).real(), 1.9892802342989010234, 1e-12);
    const auto d = zeta_derivatives({0.5, 20.0}, 3);
    EXPECT_LT(rel(d[1], {0.71450679084377599238, 1.0052408839470131555}), 1e-11);
    EXPECT_LT(rel(d[2], {-0.83584664718905570267, -1.0658323038790266846}), 1e-10);
    EXPECT_LT(rel(d[3], {0.92576069376928946419, 1.2438960061207661885}), 1e-9);
    // second derivative against a central difference of zeta
    const double h = 1e-3;
    const double fd = (zeta({2.0 + h, 0.0}).real() - 2.0 * zeta({2.0, 0.0}).real() + zeta({2.0 - h, 0.0}).real()) / (h * h);
    EXPECT_NEAR(fd, zeta_deriv({2.0, 0.0}, 2).real(), 1e-5);
}

TEST(Zeta, ConjugateSymmetry)
{
    for (double t : {3.0, 17.5, 250.0}) {
        const complex s{0.3, t};
        EXPECT_LT(std::abs(zeta(std::conj(s)) - std::conj(zeta(s))), 1e-15 * std::abs(zeta(s)) + 1e-300);
    }
}

TEST(HardyZ, OracleValues)
{
    const std::pair<double, std::pair<double, double>> cases[] = {
        {1000.5, {2.5492611355555555643, 0.63460955751339878365}},
        {5000.25, {0.052100543914359267735, 3.280685625620408578}},
        {6000.75, {6.8031786454066251869, -1.0324335273907274964}},
        {10000.1, {0.14810077933203425625, 3.9292399204292700082}},
        {123456.7, {0.37372820786000398266, 0.58150411155896028739}},
    };
    for (const auto& [t, v] : cases) {
        EXPECT_NEAR(hardy_z(t), v.first, 1e-9) << t;
        EXPECT_NEAR(hardy_z_deriv(t), v.second, 1e-8) << t;
    }
    EXPECT_NEAR(hardy_z(0.0), -1.4603545088095868129, 1e-12);
    EXPECT_LT(std::abs(hardy_z(gamma1)), 1e-10);
    EXPECT_THROW(hardy_z(-1.0), domain_error);
}

TEST(HardyZ, SignsAroundFirstZeros)
{
    EXPECT_NE(std::signbit(hardy_z(gamma1 - 0.1)), std::signbit(hardy_z(gamma1 + 0.1)));
    EXPECT_NE(std::signbit(hardy_z(gamma2 - 0.1)), std::signbit(hardy_z(gamma2 + 0.1)));
    EXPECT_NE(std::signbit(hardy_z_deriv(gamma1)), std::signbit(hardy_z_deriv(gamma2)));
}

TEST(HardyZ, DerivativeMatchesZetaPrimeAtFirstZero)
{
    const double zp = std::abs(hardy_z_deriv(gamma1));
    const double dz = std::abs(zeta_deriv({0.5, gamma1}, 1));
    EXPECT_LT(std::abs(zp - dz) / dz, 1e-8);
    EXPECT_NEAR(zp, 0.793160433356506116, 1e-9);
}

TEST(HardyZ, PhaseTimesZetaMatchesZ)
{
    eval_config cfg;
    for (double t = 50.0; t <= 150.0; t += 1.0) {
        const complex v = std::polar(1.0, rs_theta(t)) * zeta({0.5, t}, cfg);
        EXPECT_LT(std::abs(v - hardy_z(t, cfg)), 2.0 * cfg.target_abs_error) << t;
    }
}

TEST(HardyZ, RiemannSiegelAgreesWithEulerMaclaurin)
{
    // with four correction terms the truncation error is O(t^{-11/4})
    for (double t = 50.0; t <= 200.0; t += 0.37) {
        EXPECT_NEAR(hardy_z_rs(t), hardy_z_em(t), std::pow(t, -2.75)) << t;
    }
    for (double t : {1000.3, 3000.7}) {
        EXPECT_NEAR(hardy_z_rs(t), hardy_z_em(t), std::pow(t, -2.75)) << t;
        EXPECT_NEAR(hardy_z_rs_deriv(t), hardy_z_em_deriv(t), std::pow(t, -2.75) * std::log(t)) << t;
    }
    // past the crossover RS meets the default error target
    const double t = 8000.1;
    ASSERT_GT(t, eval_config{}.rs_crossover());
    EXPECT_NEAR(hardy_z_rs(t), hardy_z_em(t), 1e-10);
    EXPECT_NEAR(hardy_z_rs_deriv(t), hardy_z_em_deriv(t), 1e-8);
}

TEST(HardyZ, DerivativeMatchesFiniteDifferences)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(20.0, 1000.0);
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
        const double t = u(rng);
        const double fd = (hardy_z(t + h) - hardy_z(t - h)) / (2 * h);
        EXPECT_NEAR(hardy_z_deriv(t), fd, 1e-5) << t;
    }
}

TEST(HardyZ, ContinuousAcrossMainSumBoundaries)
{
    // N = floor(sqrt(t / 2π)) jumps at t = 2π m²
    for (int m = 30; m <= 40; ++m) {
        const double t = two_pi * m * m;
        const double d = 1e-9;
        const double jump = hardy_z_rs(t + d) - hardy_z_rs(t - d) - 2 * d * hardy_z_rs_deriv(t);
        EXPECT_LT(std::abs(jump), 1e-10) << m;
    }
}

TEST(EvalConfig, ValidationAndCrossover)
{
    eval_config cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.rs_correction_terms = 5;
    EXPECT_THROW(cfg.validate(), domain_error);
    cfg.rs_correction_terms = 4;
    cfg.target_abs_error = 0.0;
    EXPECT_THROW(cfg.validate(), domain_error);
    EXPECT_GE(eval_config{}.rs_crossover(), eval_config{}.rs_min_t);
    EXPECT_NE(eval_config{}.hash(), cfg.hash());
}
