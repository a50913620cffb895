#ifndef ZML_GAMMA_HPP
#define ZML_GAMMA_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace zml {

using complex = std::complex<double>;

namespace detail {

// B_{2k} / (2k (2k-1)) for the Stirling series of log Γ.
inline constexpr std::array<double, 8> stirling_coeffs{
    1.0 / 12.0,       -1.0 / 360.0,     1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0,        -3617.0 / 122400.0};

// B_{2k} / (2k) for the asymptotic series of the digamma function.
inline constexpr std::array<double, 8> digamma_coeffs{
    1.0 / 12.0,  -1.0 / 120.0,  1.0 / 252.0,    -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,  -3617.0 / 8160.0};

inline constexpr double stirling_shift = 15.0;

} // namespace detail

// log Γ(z) for Re z > 0 on the branch continuous from the positive real axis.
inline complex log_gamma(complex z)
{
    complex shift_sum{0.0, 0.0};
    while (std::abs(z) < detail::stirling_shift) {
        shift_sum += std::log(z);
        z += 1.0;
    }
    const complex inv = 1.0 / z;
    const complex inv2 = inv * inv;
    complex series{0.0, 0.0};
    complex pw = inv;
    for (double c : detail::stirling_coeffs) {
        series += c * pw;
        pw *= inv2;
    }
    const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return (z - 0.5) * std::log(z) - z + half_log_two_pi + series - shift_sum;
}

// ψ(z) = Γ'(z)/Γ(z) for Re z > 0.
inline complex digamma(complex z)
{
    complex shift_sum{0.0, 0.0};
    while (std::abs(z) < detail::stirling_shift) {
        shift_sum += 1.0 / z;
        z += 1.0;
    }
    const complex inv = 1.0 / z;
    const complex inv2 = inv * inv;
    complex series{0.0, 0.0};
    complex pw = inv2;
    for (double c : detail::digamma_coeffs) {
        series += c * pw;
        pw *= inv2;
    }
    return std::log(z) - 0.5 * inv - series - shift_sum;
}

} // namespace zml

#endif // ZML_GAMMA_HPP
