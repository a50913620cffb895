#ifndef ZML_LANDAU_HPP
#define ZML_LANDAU_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "zml/compensated_sum.hpp"
#include "zml/errors.hpp"
#include "zml/majorant.hpp"
#include "zml/parallel.hpp"
#include "zml/primes.hpp"
#include "zml/random_model.hpp"
#include "zml/zeros.hpp"

namespace zml {

struct landau_check {
    std::uint64_t a = 1;
    std::uint64_t b = 1;
    double T = 0.0;
    std::size_t count = 0;
    complex empirical{0.0, 0.0};
    double main_term = 0.0;
    double error_envelope = 0.0;

    double deviation() const { return std::abs(empirical - main_term); }
    double ratio() const { return deviation() / error_envelope; }
};

inline void require_window(const zero_list& zeros, double T)
{
    if (!(T > 1.0) || !zeros.covers(T, 2.0 * T)) {
        throw coverage_error("zero list does not cover (" + std::to_string(T) + ", " +
                             std::to_string(2.0 * T) + "]");
    }
}

// Σ_{T < γ <= 2T} (a/b)^{iγ} against -(T/2π) Λ(a/b) / sqrt(a/b). For a < b
// the sum is the conjugate of the (b, a) sum, whose main term is real, so the
// main term uses the larger over the smaller argument either way. For a = b
// every summand is 1 and the main term is the count itself.
inline landau_check landau_sum(std::uint64_t a, std::uint64_t b, const zero_list& zeros, double T)
{
    if (a == 0 || b == 0) {
        throw domain_error("landau_sum: need a, b >= 1");
    }
    require_window(zeros, T);
    landau_check c;
    c.a = a;
    c.b = b;
    c.T = T;
    const auto [lo, hi] = zeros.range(T, 2.0 * T);
    c.count = hi - lo;
    const double log_ratio = std::log(static_cast<double>(a)) - std::log(static_cast<double>(b));
    compensated_sum<complex> acc;
    for (std::size_t i = lo; i < hi; ++i) {
        acc.add(std::polar(1.0, zeros[i].gamma * log_ratio));
    }
    c.empirical = acc.value();
    if (a == b) {
        c.main_term = static_cast<double>(c.count);
    } else {
        const std::uint64_t big = std::max(a, b);
        const std::uint64_t small = std::min(a, b);
        const double x = static_cast<double>(big) / static_cast<double>(small);
        const double lam = von_mangoldt_ratio(big, small);
        c.main_term = lam == 0.0 ? 0.0 : -T / two_pi * lam / std::sqrt(x);
    }
    const double log_T = std::log(T);
    c.error_envelope = std::sqrt(static_cast<double>(a) * static_cast<double>(b)) * log_T * log_T;
    return c;
}

struct mixed_zero_sum_result {
    double zero_sum = 0.0;        // Σ_{T<γ<=2T} Π_i G_{i,j}(γ)^{ℓ_i}
    std::size_t count = 0;        // N(T, 2T)
    double expectation = 0.0;     // E[Π_i G_{i,j}(X)^{ℓ_i}]
    double main_term = 0.0;       // N(T, 2T) · expectation
    double error_magnitude = 0.0; // T^{e/25} (log T)^2
    double model_bound = 0.0;     // main_term + error_magnitude
    bool secondary_sign_ok = false;
};

// Largest admissible exponent for interval i: 2e²k β_i^{-3/4}.
inline double mixed_exponent_cap(unsigned i, const beta_schedule_t& sched)
{
    return 2.0 * std::numbers::e * std::numbers::e * sched.k *
           std::pow(sched.beta(i), classification_exponent);
}

inline mixed_zero_sum_result mixed_zero_sum(const std::vector<unsigned>& ell, unsigned j,
                                            const beta_schedule_t& sched, const zero_list& zeros,
                                            const prime_table& table, double T,
                                            unsigned threads = threads_from_env())
{
    if (!sched.classification_enabled()) {
        throw classification_disabled_error("mixed_zero_sum: " + sched.diagnostic());
    }
    if (ell.size() > j || j < 1 || j > sched.I_index) {
        throw domain_error("mixed_zero_sum: need |ell| <= j <= I");
    }
    for (unsigned i = 1; i <= ell.size(); ++i) {
        if (ell[i - 1] > mixed_exponent_cap(i, sched)) {
            throw domain_error("mixed_zero_sum: exponent for interval " + std::to_string(i) +
                               " exceeds 2e^2 k beta_i^{-3/4}");
        }
    }
    require_window(zeros, T);

    std::vector<dirichlet_poly> polys;
    for (unsigned i = 1; i <= ell.size(); ++i) {
        polys.push_back(ell[i - 1] > 0 ? make_dirichlet_poly(i, j, sched, table) : dirichlet_poly{});
    }
    const auto [lo, hi] = zeros.range(T, 2.0 * T);
    const auto terms = parallel_map<double>(hi - lo, threads, [&](std::size_t z) {
        const double g = zeros[lo + z].gamma;
        double v = 1.0;
        for (std::size_t i = 0; i < ell.size(); ++i) {
            if (ell[i] == 0) {
                continue;
            }
            const double Gi = polys[i](g);
            for (unsigned e = 0; e < ell[i]; ++e) {
                v *= Gi;
            }
        }
        return v;
    });

    mixed_zero_sum_result r;
    r.count = hi - lo;
    r.zero_sum = kahan_total(terms);
    r.expectation = mixed_moment_expectation(ell, j, sched, table).value;
    r.main_term = static_cast<double>(r.count) * r.expectation;
    const double log_T = std::log(T);
    r.error_magnitude = std::pow(T, std::numbers::e / 25.0) * log_T * log_T;
    bool trivial = true;
    for (unsigned v : ell) {
        trivial = trivial && v == 0;
    }
    r.model_bound = trivial ? r.main_term : r.main_term + r.error_magnitude;
    r.secondary_sign_ok = r.zero_sum <= r.model_bound;
    return r;
}

} // namespace zml

#endif // ZML_LANDAU_HPP
