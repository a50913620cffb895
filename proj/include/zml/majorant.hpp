#ifndef ZML_MAJORANT_HPP
#define ZML_MAJORANT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zml/compensated_sum.hpp"
#include "zml/errors.hpp"
#include "zml/primes.hpp"
#include "zml/zeros.hpp"
#include "zml/zeta.hpp"

namespace zml {

inline constexpr double default_threshold_c = 1000.0;
inline constexpr double desk_threshold_c = 2.0;
inline constexpr double beta_ratio = 20.0;
inline constexpr double classification_exponent = -0.75;

// β_0 = 0, β_i = 20^{i-1} / (log log T)^2. T is carried as log T so that
// schedules with astronomically large T stay representable.
struct beta_schedule_t {
    double k = 0.0;
    double log_T = 0.0;
    double loglog_T = 0.0;
    double threshold_c = default_threshold_c;
    std::vector<double> betas;    // β_0 .. β_{I+1}
    unsigned I_index = 0;
    std::vector<double> log_bounds; // log T^{β_i} = β_i log T, same indexing as betas

    double beta(unsigned i) const { return betas.at(i); }
    double log_bound(unsigned i) const { return log_bounds.at(i); }
    double bound(unsigned i) const { return std::exp(log_bounds.at(i)); }
    bool classification_enabled() const noexcept { return I_index >= 1; }

    // Diagnostic explaining why I = 0, empty when classification is enabled.
    std::string diagnostic() const
    {
        if (I_index >= 1) {
            return {};
        }
        return "I = 0: e^{-c k} = " + std::to_string(std::exp(-threshold_c * k)) +
               " is below beta_1 = " + std::to_string(betas.at(1)) +
               "; classification is disabled for this schedule";
    }
};

inline beta_schedule_t beta_schedule_log(double k, double log_T, double threshold_c)
{
    if (!(k > 0) || !(threshold_c > 0)) {
        throw domain_error("beta_schedule: need k > 0 and threshold_c > 0");
    }
    if (!(log_T >= std::log(100.0))) {
        throw domain_error("beta_schedule: need T >= 100");
    }
    beta_schedule_t s;
    s.k = k;
    s.log_T = log_T;
    s.loglog_T = std::log(log_T);
    s.threshold_c = threshold_c;
    const double ceiling = std::exp(-threshold_c * k);
    const double b1 = 1.0 / (s.loglog_T * s.loglog_T);
    s.betas.push_back(0.0);
    unsigned i = 1;
    double b = b1;
    while (b <= ceiling) {
        s.betas.push_back(b);
        s.I_index = i;
        ++i;
        b *= beta_ratio;
    }
    s.betas.push_back(b); // β_{I+1}, the first value above the ceiling
    for (double beta : s.betas) {
        s.log_bounds.push_back(beta * log_T);
    }
    return s;
}

inline beta_schedule_t beta_schedule(double k, double T, double threshold_c)
{
    if (!(T >= 100.0)) {
        throw domain_error("beta_schedule: need T >= 100");
    }
    return beta_schedule_log(k, std::log(T), threshold_c);
}

// w_j(n) = Λ_𝓛(n) n^{-1/(β_j log T)} / log n · log(T^{β_j}/n) / log T^{β_j}, 𝓛 = log T.
inline double weight_w(std::uint64_t n, unsigned j, const beta_schedule_t& sched)
{
    if (j < 1 || j > sched.I_index) {
        throw domain_error("weight_w: need 1 <= j <= I");
    }
    if (n < 2) {
        throw domain_error("weight_w: need n >= 2");
    }
    const double X = sched.log_bound(j);
    const double ln = std::log(static_cast<double>(n));
    if (ln > X) {
        throw domain_error("weight_w: n exceeds T^{beta_j}");
    }
    const double lam = von_mangoldt_L(n, sched.log_T);
    if (lam == 0.0) {
        return 0.0;
    }
    return lam / ln * std::exp(-ln / X) * (X - ln) / X;
}

// One term w_j(n) n^{-1/2} of G_{i,j}; n = prime^exponent with exponent 1 or 2.
struct dirichlet_term {
    std::uint64_t n;
    std::uint64_t prime;
    unsigned exponent;
    double log_n;
    double coef;
};

struct dirichlet_poly {
    unsigned i = 0;
    unsigned j = 0;
    std::vector<dirichlet_term> terms;

    double operator()(double t) const
    {
        compensated_sum<double> acc;
        for (const auto& term : terms) {
            acc.add(term.coef * std::cos(t * term.log_n));
        }
        return acc.value();
    }

    double evaluate_reversed(double t) const
    {
        compensated_sum<double> acc;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            acc.add(it->coef * std::cos(t * it->log_n));
        }
        return acc.value();
    }
};

// Terms of G_{i,j}: n ∈ I_i = (T^{β_{i-1}}, T^{β_i}] with Λ_𝓛(n) ≠ 0.
inline dirichlet_poly make_dirichlet_poly(unsigned i, unsigned j, const beta_schedule_t& sched,
                                          const prime_table& table)
{
    if (i < 1 || i > j || j > sched.I_index) {
        throw domain_error("dirichlet_poly_G: need 1 <= i <= j <= I");
    }
    const double hi_log = sched.log_bound(i);
    const double lo_log = sched.log_bound(i - 1);
    const double top = std::exp(sched.log_bound(j));
    if (top > static_cast<double>(table.limit())) {
        throw capacity_error("dirichlet_poly_G: T^{beta_j} = " + std::to_string(top) +
                             " exceeds the prime table limit " + std::to_string(table.limit()));
    }
    const double hi = std::exp(hi_log);
    dirichlet_poly g;
    g.i = i;
    g.j = j;
    // Log-space bounds decide membership so that endpoints match the schedule exactly.
    auto inside = [&](double ln) { return ln > (i == 1 ? 0.0 : lo_log) && ln <= hi_log; };
    for (std::uint64_t p : table.primes_in(0.0, hi)) {
        const double lp = std::log(static_cast<double>(p));
        if (inside(lp)) {
            g.terms.push_back({p, p, 1, lp, weight_w(p, j, sched) / std::sqrt(static_cast<double>(p))});
        }
        if (static_cast<double>(p) <= sched.log_T && inside(2.0 * lp)) {
            const std::uint64_t n = p * p;
            g.terms.push_back({n, p, 2, 2.0 * lp, weight_w(n, j, sched) / static_cast<double>(p)});
        }
    }
    std::sort(g.terms.begin(), g.terms.end(),
              [](const dirichlet_term& a, const dirichlet_term& b) { return a.n < b.n; });
    return g;
}

inline double dirichlet_poly_G(double t, unsigned i, unsigned j, const beta_schedule_t& sched,
                               const prime_table& table)
{
    return make_dirichlet_poly(i, j, sched, table)(t);
}

struct majorant_breakdown {
    double gamma = 0.0;
    double x = 0.0;
    double sigma_x = 0.0;
    double dirichlet_sum = 0.0;
    double loglog_term = 0.0;
    double ratio_term = 0.0;
    double lhs = 0.0;
    double slack = 0.0;
    bool degenerate = false;
};

// Right-hand side of the log|ζ'(ρ)| majorant with the O(1) set to zero.
inline majorant_breakdown prop1_rhs_from(double gamma, double abs_zeta_prime, double x, double T,
                                         const prime_table& table)
{
    if (!(T > std::numbers::e) || !(x >= 2.0) || x > T * T) {
        throw domain_error("prop1_rhs: need T > e and 2 <= x <= T^2");
    }
    if (x > static_cast<double>(table.limit())) {
        throw capacity_error("prop1_rhs: x exceeds the prime table limit");
    }
    majorant_breakdown m;
    m.gamma = gamma;
    m.x = x;
    const double log_x = std::log(x);
    const double log_T = std::log(T);
    m.sigma_x = 0.5 + 1.0 / log_x;

    compensated_sum<double> acc;
    for (std::uint64_t p : table.primes_in(0.0, x)) {
        const double lp = std::log(static_cast<double>(p));
        // Λ_𝓛(p)/log p = 1, Λ_𝓛(p²)/log p² = 1/2.
        acc.add(std::exp(-m.sigma_x * lp) * std::cos(gamma * lp) * (log_x - lp) / log_x);
        const double sq = 2.0 * lp;
        if (static_cast<double>(p) <= log_T && sq <= log_x) {
            acc.add(0.5 * std::exp(-m.sigma_x * sq) * std::cos(gamma * sq) * (log_x - sq) / log_x);
        }
    }
    m.dirichlet_sum = acc.value();
    m.loglog_term = std::log(log_T);
    m.ratio_term = log_T / log_x;
    m.degenerate = abs_zeta_prime < degenerate_zeta_prime;
    m.lhs = std::log(abs_zeta_prime);
    m.slack = (m.dirichlet_sum + m.loglog_term + m.ratio_term) - m.lhs;
    return m;
}

inline majorant_breakdown prop1_rhs(double gamma, double x, double T, const prime_table& table,
                                    const eval_config& cfg = {})
{
    return prop1_rhs_from(gamma, std::abs(hardy_z_deriv(gamma, cfg)), x, T, table);
}

struct f_tilde_result {
    double value = 0.0;
    double tail = 0.0;   // integral estimate for zeros outside the window, included in value
    double window = 0.0; // half-width W
    std::size_t zeros_used = 0;
};

// F̃_x(ρ) = Σ_{γ̃ ≠ γ} δ / (δ² + (γ - γ̃)²), δ = 1/log x, summed over the zeros
// within W of γ plus a density-based tail for the rest.
inline f_tilde_result f_tilde(double gamma, double x, const zero_list& zeros,
                              std::optional<double> half_width = std::nullopt)
{
    if (!(x > 1.0)) {
        throw domain_error("f_tilde: need x > 1");
    }
    const double delta = 1.0 / std::log(x);
    const double W = half_width.value_or(1000.0 * delta);
    const double lo = gamma - W;
    const double hi = gamma + W;
    const bool lower_open = lo <= 14.0; // no zeros below the first one
    if ((!lower_open && zeros.t_lo > lo) || zeros.t_hi < hi) {
        throw coverage_error("f_tilde: zero list does not cover [gamma - W, gamma + W]");
    }
    f_tilde_result r;
    r.window = W;
    const auto [a, b] = zeros.range(std::max(0.0, lo), hi);
    compensated_sum<double> acc;
    for (std::size_t idx = a; idx < b; ++idx) {
        const double d = gamma - zeros[idx].gamma;
        if (std::abs(d) <= zeros[idx].gamma_error + 1e-12 * gamma) {
            continue; // the zero ρ itself
        }
        acc.add(delta / (delta * delta + d * d));
        ++r.zeros_used;
    }
    // ∫_W^∞ δ/(δ² + u²) du = π/2 - atan(W/δ), weighted by the zero density
    // (1/2π) log(t/2π) at the window edge.
    auto density = [](double t) { return t > two_pi ? std::log(t / two_pi) / two_pi : 0.0; };
    const double side = std::numbers::pi / 2.0 - std::atan(W / delta);
    double tail = density(hi) * side;
    if (!lower_open) {
        tail += density(lo) * side;
    }
    r.tail = tail;
    acc.add(tail);
    r.value = acc.value();
    return r;
}

enum class zero_label { t_set, s_j, s_0 };

struct zero_class {
    zero_label label = zero_label::t_set;
    unsigned j = 0; // for s_j
    std::optional<std::pair<unsigned, unsigned>> witness;
    double g_max_over_thresholds = 0.0; // max_{i,ℓ} |G_{i,ℓ}| / β_i^{-3/4}

    std::string name() const
    {
        switch (label) {
        case zero_label::t_set: return "T";
        case zero_label::s_0: return "S(0)";
        default: return "S(" + std::to_string(j) + ")";
        }
    }
};

// Classification from precomputed values; g(i, ℓ) returns G_{i,ℓ}(γ) for 1 <= i <= ℓ <= I.
template <typename GFn>
zero_class classify_from_values(GFn&& g, const beta_schedule_t& sched)
{
    if (!sched.classification_enabled()) {
        throw classification_disabled_error("classify_zero: " + sched.diagnostic());
    }
    const unsigned I = sched.I_index;
    zero_class out;
    std::optional<std::pair<unsigned, unsigned>> first_violation;
    for (unsigned i = 1; i <= I; ++i) {
        const double threshold = std::pow(sched.beta(i), classification_exponent);
        for (unsigned ell = i; ell <= I; ++ell) {
            const double v = std::abs(g(i, ell));
            out.g_max_over_thresholds = std::max(out.g_max_over_thresholds, v / threshold);
            if (!first_violation && v > threshold) {
                first_violation = std::make_pair(i, ell);
            }
        }
    }
    if (!first_violation) {
        out.label = zero_label::t_set;
        return out;
    }
    out.witness = first_violation;
    if (first_violation->first == 1) {
        out.label = zero_label::s_0;
    } else {
        out.label = zero_label::s_j;
        out.j = first_violation->first - 1;
    }
    return out;
}

// Caches the G_{i,ℓ} polynomials of one schedule for repeated classification.
class classifier {
public:
    classifier(const beta_schedule_t& sched, const prime_table& table) : sched_(sched)
    {
        if (!sched.classification_enabled()) {
            throw classification_disabled_error("classify_zero: " + sched.diagnostic());
        }
        const unsigned I = sched.I_index;
        polys_.resize(I + 1);
        for (unsigned i = 1; i <= I; ++i) {
            polys_[i].resize(I + 1);
            for (unsigned ell = i; ell <= I; ++ell) {
                polys_[i][ell] = make_dirichlet_poly(i, ell, sched, table);
            }
        }
    }

    zero_class operator()(double gamma) const
    {
        return classify_from_values(
            [&](unsigned i, unsigned ell) { return polys_[i][ell](gamma); }, sched_);
    }

    const dirichlet_poly& poly(unsigned i, unsigned ell) const { return polys_.at(i).at(ell); }
    const beta_schedule_t& schedule() const noexcept { return sched_; }

private:
    beta_schedule_t sched_;
    std::vector<std::vector<dirichlet_poly>> polys_;
};

inline zero_class classify_zero(double gamma, const beta_schedule_t& sched, const prime_table& table)
{
    return classifier(sched, table)(gamma);
}

// log|ζ'(ρ)| - (Σ_{i<=j} G_{i,j}(γ) + log log T + 1/β_j): the constant the
// j-level inequality needs at this zero.
inline double level_inequality_deficit(double gamma, double abs_zeta_prime, unsigned j,
                                       const classifier& cls)
{
    const auto& s = cls.schedule();
    compensated_sum<double> acc;
    for (unsigned i = 1; i <= j; ++i) {
        acc.add(cls.poly(i, j)(gamma));
    }
    return std::log(abs_zeta_prime) - (acc.value() + s.loglog_T + 1.0 / s.beta(j));
}

} // namespace zml

#endif // ZML_MAJORANT_HPP
